# # Cusps as flat 3-manifolds
#
# Ideal vertices glued together by the pairings form a cusp.  Its stabiliser
# acts on a horosphere by Euclidean isometries; after moving the vertex to
# infinity these become affine maps of R^3, and the group they generate is a
# Bieberbach group.

from cell24 import analyze_cusps, cusp_string, load_manifold
from cell24.cusp import affine_of_word
from cell24.pairing import parse_word

m3 = load_manifold("manifold3.rt")
reports = analyze_cusps(m3)
for r in reports:
    t = r.flat_type
    print(f"class {r.vertex_class.ordinal}: {len(r.vertex_class)} vertices, type {t.code} ({t.wolf}), "
          f"holonomy {t.holonomy}, H1 {r.h1}")
print("cusp string", cusp_string(reports))

# ## Looking at single elements
#
# In the class of e1 the frame is (e2, e3, e4) and the horocube has
# half-width 1, so translations come out as even integers.

e1 = reports[0]
for word in ("c", "g' h", "a' h"):
    a = affine_of_word(m3, e1.vertex_class, parse_word(word), e1.group)
    print(f"{word:6} {a}   in group: {e1.group.contains(a)}")

# The non-orientable census manifold 1011 has five cusps of the same type.

m1011 = load_manifold("manifold1011.rt")
print(cusp_string(analyze_cusps(m1011)))
