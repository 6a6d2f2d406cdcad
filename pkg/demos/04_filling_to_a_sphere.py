# # Filling every cusp of manifold 1011
#
# Choose a primitive translation in each cusp and kill it.  Each filling adds
# one 2-, two 3- and one 4-handle, so chi stays 1.  A closed 4-manifold with
# chi = 1 and fundamental group Z2 whose double cover is simply connected with
# chi = 2 passes every test a homotopy 4-sphere quotient would.

from cell24 import certify, fill, load_filling, load_manifold

m = load_manifold("manifold1011.rt")
spec = load_filling("fill1011.rt", m)
filled = fill(m, spec)
for f in filled.fibres:
    print(f"class {f.vertex_class.ordinal}: fibre {f.word}, translation {tuple(map(str, f.translation))}")
print("relators:", len(filled.presentation.relators), "handles:", filled.handles.as_tuple(), "chi:", filled.chi)

cert = certify(m, filled)
print("simplified:", cert.simplified)
print("group order:", cert.group_order, " H1:", cert.h1)
cover = cert.cover
print("double cover:", cover.order, " chi:", cover.chi, " link components:", cover.link_components)
print("character:", {g: s for g, s in cover.character.items() if s < 0})
