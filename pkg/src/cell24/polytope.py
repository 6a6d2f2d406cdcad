"""Exact model of the ideal hyperbolic 24-cell in the conformal ball model.

Vertices sit on the unit 3-sphere; each side is the part of a radius-1
sphere centred at a vector with two nonzero entries (each +-1).  All
coordinates are rational, so everything here uses :class:`fractions.Fraction`.

>>> P = build_polytope()
>>> len(P.vertices), len(P.sides), len(P.ridges), len(P.edges)
(24, 24, 96, 96)
>>> sorted(s.label for s in P.incident_sides(P.vertex((1, 0, 0, 0))))
['A', 'B', 'C', "C'", 'G', 'H']
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .errors import UnknownVertexError

Vec = tuple  # tuple of 4 Fractions

HALF = Fraction(1, 2)

# Side labels of the boundary spheres, keyed by centre vector.
SIDE_TABLE = (
    ("A", (1, 1, 0, 0)), ("A'", (-1, 1, 0, 0)),
    ("B", (1, -1, 0, 0)), ("B'", (-1, -1, 0, 0)),
    ("C", (1, 0, 1, 0)), ("C'", (1, 0, -1, 0)),
    ("D", (-1, 0, 1, 0)), ("D'", (-1, 0, -1, 0)),
    ("E", (0, 1, 1, 0)), ("E'", (0, -1, -1, 0)),
    ("F", (0, 1, -1, 0)), ("F'", (0, -1, 1, 0)),
    ("G", (1, 0, 0, 1)), ("G'", (-1, 0, 0, -1)),
    ("H", (1, 0, 0, -1)), ("H'", (-1, 0, 0, 1)),
    ("I", (0, 1, 0, 1)), ("I'", (0, -1, 0, 1)),
    ("J", (0, 1, 0, -1)), ("J'", (0, -1, 0, -1)),
    ("K", (0, 0, 1, 1)), ("K'", (0, 0, 1, -1)),
    ("L", (0, 0, -1, 1)), ("L'", (0, 0, -1, -1)),
)


def vec(*xs) -> Vec:
    return tuple(Fraction(x) for x in xs)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def sub(u, v) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def add(u, v) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def scale(s, u) -> Vec:
    return tuple(s * a for a in u)


def norm2(u):
    return dot(u, u)


@dataclass(frozen=True)
class IdealVertex:
    index: int
    coords: Vec

    @property
    def is_half(self) -> bool:
        return all(abs(c) == HALF for c in self.coords)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Side:
    index: int
    label: str
    center: Vec
    radius2: Fraction = Fraction(1)

    @property
    def letter(self) -> str:
        return self.label[0]

    @property
    def primed(self) -> bool:
        return self.label.endswith("'")

    @property
    def code(self) -> str:
        """Four-character centre code, e.g. ``++00``."""
        return "".join("+" if c > 0 else "-" if c < 0 else "0" for c in self.center)

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class Ridge:
    index: int
    sides: tuple  # (Side, Side) in side order
    vertices: frozenset  # indices of the three common vertices

    @property
    def name(self) -> str:
        return f"{self.sides[0].label}∩{self.sides[1].label}"

    def other(self, side: Side) -> Side:
        a, b = self.sides
        if side == a:
            return b
        if side == b:
            return a
        raise ValueError(f"{side} is not a side of ridge {self.name}")


@dataclass(frozen=True)
class Edge:
    index: int
    endpoints: tuple  # (vertex index, vertex index), ascending
    sides: frozenset  # indices of the three common sides


def _canonical_vertices():
    out = []
    for axis in range(4):
        for sign in (1, -1):
            coords = [0, 0, 0, 0]
            coords[axis] = sign
            out.append(vec(*coords))
    halves = sorted(vec(*s) for s in product((-HALF, HALF), repeat=4))
    out.extend(halves)
    return out


def on_side_rule(v: Vec, center: Vec) -> bool:
    """Combinatorial incidence by the two sign rules.

    A unit vertex lies on a side when the centre has the same nonzero entry
    in the vertex's position; a half vertex lies on a side when both nonzero
    centre entries agree in sign with the vertex.
    """
    if all(abs(c) == HALF for c in v):
        return all(c == 0 or (c > 0) == (x > 0) for c, x in zip(center, v))
    return any(x != 0 and c == x for c, x in zip(center, v))


@dataclass(frozen=True)
class Polytope24:
    vertices: tuple
    sides: tuple
    ridges: tuple
    edges: tuple
    side_vertices: tuple  # side index -> frozenset of vertex indices
    vertex_sides: tuple  # vertex index -> frozenset of side indices
    _vertex_lookup: dict = field(repr=False, compare=False)
    _side_lookup: dict = field(repr=False, compare=False)
    _ridge_lookup: dict = field(repr=False, compare=False)

    def vertex(self, coords) -> IdealVertex:
        key = tuple(Fraction(c) for c in coords)
        try:
            return self.vertices[self._vertex_lookup[key]]
        except KeyError:
            raise UnknownVertexError(f"{key} is not an ideal vertex of the 24-cell") from None

    def find_vertex(self, coords):
        """Index of the vertex at ``coords``, or None."""
        return self._vertex_lookup.get(tuple(coords))

    def side(self, key) -> Side:
        """Look a side up by label (``"A'"``), centre code (``"-+00"``) or centre vector."""
        if isinstance(key, Side):
            return key
        if isinstance(key, str) and key in self._side_lookup:
            return self.sides[self._side_lookup[key]]
        if isinstance(key, str) and len(key) == 4:
            key = tuple(Fraction({"+": 1, "-": -1, "0": 0}[ch]) for ch in key)
        try:
            return self.sides[self._side_lookup[tuple(Fraction(c) for c in key)]]
        except (KeyError, TypeError):
            raise KeyError(f"no side {key!r}") from None

    def side_by_center(self, center):
        idx = self._side_lookup.get(tuple(center))
        return None if idx is None else self.sides[idx]

    def ridge(self, s1, s2) -> Ridge:
        a, b = self.side(s1).index, self.side(s2).index
        return self.ridges[self._ridge_lookup[frozenset((a, b))]]

    def find_ridge(self, s1: Side, s2: Side):
        idx = self._ridge_lookup.get(frozenset((s1.index, s2.index)))
        return None if idx is None else self.ridges[idx]

    def ridge_by_vertices(self, vset):
        for r in self.ridges:
            if r.vertices == vset:
                return r
        return None

    def incident_sides(self, v) -> frozenset:
        if not isinstance(v, IdealVertex):
            v = self.vertex(v)
        elif self.vertices[v.index] != v:
            raise UnknownVertexError(f"{v} is not a vertex of this model")
        return frozenset(self.sides[i] for i in self.vertex_sides[v.index])

    def vertices_of(self, side) -> frozenset:
        return self.side_vertices[self.side(side).index]

    def adjacent(self, side) -> list:
        s = self.side(side)
        return [t for t in self.sides if dot(s.center, t.center) == 1]

    def euler_sum(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.ridges) - len(self.sides)


def ridges_and_edges(vertices, sides, side_vertices, vertex_sides):
    """Ridges are side pairs with centre inner product 1; edges are vertex
    pairs sharing exactly three sides."""
    ridges = []
    for s, t in combinations(sides, 2):
        if dot(s.center, t.center) == 1:
            common = side_vertices[s.index] & side_vertices[t.index]
            ridges.append(Ridge(len(ridges), (s, t), frozenset(common)))
    edges = []
    for u, w in combinations(vertices, 2):
        common = vertex_sides[u.index] & vertex_sides[w.index]
        if len(common) == 3:
            edges.append(Edge(len(edges), (u.index, w.index), frozenset(common)))
    return tuple(ridges), tuple(edges)


@lru_cache(maxsize=None)
def build_polytope() -> Polytope24:
    vertices = tuple(IdealVertex(i, c) for i, c in enumerate(_canonical_vertices()))
    sides = tuple(Side(i, label, vec(*c)) for i, (label, c) in enumerate(SIDE_TABLE))
    side_vertices = tuple(
        frozenset(v.index for v in vertices if on_side_rule(v.coords, s.center)) for s in sides
    )
    vertex_sides = tuple(
        frozenset(s.index for s in sides if v.index in side_vertices[s.index]) for v in vertices
    )
    ridges, edges = ridges_and_edges(vertices, sides, side_vertices, vertex_sides)
    side_lookup = {}
    for s in sides:
        side_lookup[s.label] = s.index
        side_lookup[s.center] = s.index
        side_lookup[s.code] = s.index
    return Polytope24(
        vertices=vertices,
        sides=sides,
        ridges=ridges,
        edges=edges,
        side_vertices=side_vertices,
        vertex_sides=vertex_sides,
        _vertex_lookup={v.coords: v.index for v in vertices},
        _side_lookup=side_lookup,
        _ridge_lookup={frozenset(s.index for s in r.sides): r.index for r in ridges},
    )


def incident_sides(v) -> frozenset:
    return build_polytope().incident_sides(v)
