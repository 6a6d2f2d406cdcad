# # The ideal 24-cell and its side pairings
#
# Everything lives in the unit ball of R^4.  The 24 ideal vertices sit on
# the boundary sphere and each side is a unit sphere centred at a vector
# with two entries +-1.  All coordinates are exact fractions.

from cell24 import build_polytope, load_manifold
from cell24.pairing import apply_word, format_word, image_side, parse_word

P = build_polytope()
print(len(P.vertices), "vertices,", len(P.sides), "sides,", len(P.ridges), "ridges,", len(P.edges), "edges")

# ## Incidence
#
# A vertex lies on six sides.  For the unit vertex e1 those are the sides
# whose centres have +1 in the first slot.

v = P.vertex((1, 0, 0, 0))
print(sorted(s.label for s in P.incident_sides(v)))

# Two sides meet in a ridge exactly when their centres have inner product 1.

r = P.ridge("A", "C")
print(r.name, [str(P.vertices[i]) for i in sorted(r.vertices)])

# ## A manifold is twelve pairings
#
# Each pairing flips some coordinates (the k-vector) and then inverts in the
# target sphere.  The shipped census manifold 3:

m3 = load_manifold("manifold3.rt")
print(m3.serialize())

# Words act right to left, so ``e' g`` applies g first.

def show(x):
    return "(" + ", ".join(str(c) for c in x) + ")"


print("a sends e1 to", show(apply_word(parse_word("a"), (1, 0, 0, 0), m3)))
print("h^-1 carries side B' to", image_side(parse_word("h'"), P.side("B'"), m3).label)

# Some words fix a vertex; these make up the cusp stabilisers (see demo 03).

for word, v in (("g' h", (1, 0, 0, 0)), ("e' g", P.vertices[-1].coords)):
    w = parse_word(word)
    print(format_word(w, style="unicode"), "sends", show(v), "to", show(apply_word(w, v, m3)))
