# # Ridge cycles and the fundamental group
#
# Follow a ridge through the pairings until it comes back: the letters used,
# read backwards, form a relator.  The 24-cell is right-angled, so every
# cycle has length four.

from cell24 import load_manifold
from cell24.cycles import edge_cycles, fundamental_presentation, handle_counts, ridge_cycles
from cell24.groups import abelianization

m = load_manifold("manifold1011.rt")
cycles = ridge_cycles(m)
for c in cycles[:6]:
    print(c.describe())

# ## Handles
#
# One 0-handle, a 1-handle per pairing, a 2-handle per ridge cycle and a
# 3-handle per edge class.  The alternating sum is the Euler characteristic.

h = handle_counts(m, cycles)
print(h.as_tuple(), "chi =", h.chi, "| edge classes:", len(edge_cycles(m)))

# ## The presentation
#
# Twelve generators and 24 relators; its abelianization is H1 of the open
# manifold.

pres = fundamental_presentation(m, cycles)
print(len(pres.generators), "generators,", len(pres.relators), "relators")
print("H1 =", abelianization(pres))
