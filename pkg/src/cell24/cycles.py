"""Ridge cycles, edge classes, the Poincaré presentation and handle counts."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CycleError
from .groups import Presentation
from .pairing import (
    ManifoldDescription,
    apply_letter_to_vertex,
    apply_word,
    format_word,
    orientation_character,
)
from .polytope import build_polytope

MAX_CYCLE_LENGTH = 64


@dataclass(frozen=True)
class CycleStep:
    ridge: object  # Ridge
    entered: object  # Side through which the ridge was entered
    letter: tuple  # (label, exponent) applied at the other side


@dataclass(frozen=True)
class RidgeCycle:
    steps: tuple

    @property
    def ridges(self) -> tuple:
        return tuple(s.ridge for s in self.steps)

    @property
    def letters(self) -> tuple:
        return tuple(s.letter for s in self.steps)

    @property
    def word(self) -> tuple:
        """Relator word; the first step acts first, so it sits rightmost."""
        return tuple(reversed(self.letters))

    def __len__(self):
        return len(self.steps)

    def describe(self) -> str:
        parts = []
        for s in self.steps:
            active = s.ridge.other(s.entered)
            parts.append(f"{active.label}∩{s.entered.label}")
            parts.append(f"--{format_word((s.letter,))}-->")
        first = self.steps[0]
        parts.append(f"{first.ridge.other(first.entered).label}∩{first.entered.label}")
        return " ".join(parts)


@dataclass(frozen=True)
class HandleCounts:
    h0: int
    h1: int
    h2: int
    h3: int
    h4: int

    @property
    def chi(self) -> int:
        return self.h0 - self.h1 + self.h2 - self.h3 + self.h4

    def as_tuple(self) -> tuple:
        return (self.h0, self.h1, self.h2, self.h3, self.h4)

    def __add__(self, other):
        return HandleCounts(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def to_dict(self):
        return {"h0": self.h0, "h1": self.h1, "h2": self.h2, "h3": self.h3, "h4": self.h4,
                "chi": self.chi}


def transport_ridge(desc, ridge, entered):
    """One step of a ridge cycle.

    The letter used is the one defined on the side we did not enter through;
    it carries that side to its partner and the ridge's three vertices (all
    on that side) to the vertices of the image ridge.
    Returns ``(letter, image ridge, side the image is entered through)``.
    """
    P = build_polytope()
    active = ridge.other(entered)
    letter = desc.letter_at(active)
    pairing = desc[letter[0]]
    images = set()
    for v in ridge.vertices:
        w = apply_letter_to_vertex(desc, letter, v)
        if w is None:
            raise CycleError(f"letter {format_word((letter,))} moves a vertex of {ridge.name} off the model")
        images.add(w)
    new = P.ridge_by_vertices(frozenset(images))
    if new is None:
        raise CycleError(f"image of ridge {ridge.name} under {format_word((letter,))} is not a ridge")
    landing = pairing.side_to(letter[1])
    if landing not in new.sides:
        raise CycleError(f"image of ridge {ridge.name} is not on side {landing.label}")
    return letter, new, landing


def _trace(desc, ridge, entered):
    steps = []
    r, e = ridge, entered
    for _ in range(MAX_CYCLE_LENGTH):
        letter, nr, ne = transport_ridge(desc, r, e)
        steps.append(CycleStep(r, e, letter))
        r, e = nr, ne
        if r == ridge and e == entered:
            return steps
    raise CycleError(f"cycle does not close within bound {MAX_CYCLE_LENGTH} from ridge {ridge.name}")


def _letter_key(letter):
    return (letter[0], 0 if letter[1] > 0 else 1)


def _ridge_key(ridge):
    return (ridge.sides[0].index, ridge.sides[1].index)


def canonical_cycle(desc, steps) -> RidgeCycle:
    """Restart at the least ridge, in the direction whose first letter is least."""
    least = min((s.ridge for s in steps), key=_ridge_key)
    options = []
    for entered in least.sides:
        tr = _trace(desc, least, entered)
        options.append(tr)
    best = min(options, key=lambda tr: [_letter_key(s.letter) for s in tr])
    return RidgeCycle(tuple(best))


def relator_fixes_all_vertices(desc, word) -> bool:
    P = build_polytope()
    return all(apply_word(word, v.coords, desc) == v.coords for v in P.vertices)


def ridge_cycles(desc: ManifoldDescription, check_relators: bool = True) -> list:
    P = build_polytope()
    seen = set()
    cycles = []
    for ridge in P.ridges:
        if ridge.index in seen:
            continue
        steps = _trace(desc, ridge, ridge.sides[0])
        cyc = canonical_cycle(desc, steps)
        for r in cyc.ridges:
            seen.add(r.index)
        if check_relators and not relator_fixes_all_vertices(desc, cyc.word):
            raise CycleError(f"relator not identity: {format_word(cyc.word)} moves a vertex")
        cycles.append(cyc)
    cycles.sort(key=lambda c: _ridge_key(c.steps[0].ridge))
    return cycles


def edge_cycles(desc: ManifoldDescription) -> list:
    """Orbits of the 96 edges under the pairings, as sorted lists of edge indices."""
    P = build_polytope()
    edge_index = {e.endpoints: e.index for e in P.edges}
    parent = list(range(len(P.edges)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in desc.pairings:
        on_source = P.vertices_of(p.source)
        for e in P.edges:
            u, w = e.endpoints
            if u in on_source and w in on_source:
                iu = apply_letter_to_vertex(desc, (p.label, 1), u)
                iw = apply_letter_to_vertex(desc, (p.label, 1), w)
                img = edge_index.get(tuple(sorted((iu, iw))))
                if img is None:
                    raise CycleError(f"pairing {p.label} does not carry edge {e.endpoints} to an edge")
                a, b = find(e.index), find(img)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    classes = {}
    for e in P.edges:
        classes.setdefault(find(e.index), []).append(e.index)
    return sorted(classes.values())


def fundamental_presentation(desc: ManifoldDescription, cycles=None) -> Presentation:
    if cycles is None:
        cycles = ridge_cycles(desc)
    return Presentation.from_labelled(desc.labels, [c.word for c in cycles])


def handle_counts(desc: ManifoldDescription, cycles=None, edges=None) -> HandleCounts:
    if cycles is None:
        cycles = ridge_cycles(desc)
    if edges is None:
        edges = edge_cycles(desc)
    return HandleCounts(1, len(desc.pairings), len(cycles), len(edges), 0)


def is_orientable(desc: ManifoldDescription) -> bool:
    return all(v == 1 for v in orientation_character(desc).values())
