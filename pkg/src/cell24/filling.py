"""Dehn filling of every cusp along a chosen fibre, and the resulting certificate.

Filling a cusp glues in a disk bundle over its flat cross-section.  On the
group level this kills the fibre word; on the handle level it adds one
2-handle, two 3-handles and one 4-handle, so the Euler characteristic is
unchanged.  ``certify`` collects necessary conditions for the filled
manifold to be a sphere: the group order, its abelianization, and the same
data for each double cover.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .cusp import BieberbachGroup, VertexClass, affine_of_word, develop_cusp, vertex_classes
from .cycles import HandleCounts, fundamental_presentation, handle_counts, ridge_cycles
from .errors import CuspError, FibreError, ParseError
from .groups import (
    DEFAULT_CAP,
    AbelianInvariants,
    EnumerationResult,
    Presentation,
    abelianization,
    reidemeister_schreier,
    tietze_simplify,
    todd_coxeter,
    two_characters,
)
from .pairing import ManifoldDescription, apply_word, format_word, parse_word, reduce_word
from .polytope import build_polytope

FILLING_HANDLES = HandleCounts(0, 0, 1, 2, 1)


@dataclass(frozen=True)
class FibreChoice:
    class_ordinal: int
    word: tuple

    def line(self) -> str:
        return f"fill {self.class_ordinal} {format_word(self.word)}"


@dataclass(frozen=True)
class FillingSpec:
    fibres: tuple  # one FibreChoice per class, in class order

    def serialize(self) -> str:
        return "\n".join(f.line() for f in self.fibres) + "\n"


def parse_filling(text: str, desc: ManifoldDescription, source=None) -> FillingSpec:
    nclasses = len(vertex_classes(desc))
    labels = set(desc.labels)
    found = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] != "fill" or len(toks) < 2:
            raise ParseError("expected 'fill <class> <word>'", lineno, source)
        try:
            ordinal = int(toks[1])
        except ValueError:
            raise ParseError(f"class index {toks[1]!r} is not an integer", lineno, source) from None
        if not 0 <= ordinal < nclasses:
            raise ParseError(f"class index out of range: {ordinal} (have {nclasses} classes)",
                             lineno, source)
        if ordinal in found:
            raise ParseError(f"class {ordinal} filled twice", lineno, source)
        try:
            word = parse_word(" ".join(toks[2:]))
        except ValueError as exc:
            raise ParseError(str(exc), lineno, source) from None
        for g, _ in word:
            if g not in labels:
                raise ParseError(f"unknown generator letter {g!r}", lineno, source)
        found[ordinal] = FibreChoice(ordinal, word)
    missing = [i for i in range(nclasses) if i not in found]
    if missing:
        raise ParseError(f"missing class: no fibre for class {', '.join(map(str, missing))}",
                         source=source)
    return FillingSpec(tuple(found[i] for i in range(nclasses)))


@dataclass(frozen=True)
class FibreCertificate:
    vertex_class: VertexClass
    word: tuple
    translation: tuple | None
    lattice_coordinates: tuple | None
    failures: tuple  # names of failed checks

    @property
    def valid(self) -> bool:
        return not self.failures

    def to_dict(self):
        return {
            "class": self.vertex_class.ordinal,
            "word": format_word(self.word),
            "translation": None if self.translation is None else [str(x) for x in self.translation],
            "lattice_coordinates": None if self.lattice_coordinates is None
            else [str(x) for x in self.lattice_coordinates],
            "valid": self.valid,
            "failures": list(self.failures),
        }


def validate_fibre(desc, cls: VertexClass, word, group: BieberbachGroup | None = None) -> FibreCertificate:
    """Check that ``word`` is a usable fibre of the cusp ``cls``.

    Checks, each reported by name on failure: ``fixes class vertex`` (the
    word fixes a vertex of the class; one other than the base is moved there
    by its spanning-tree word), ``linear part is identity``, ``primitive in
    lattice`` and ``normal`` (every stabiliser element sends the fibre
    translation to plus or minus itself).
    """
    word = reduce_word(word)
    if group is None:
        group = develop_cusp(desc, cls)
    P = build_polytope()
    if not any(apply_word(word, P.vertices[v].coords, desc) == P.vertices[v].coords
               for v in cls.members):
        return FibreCertificate(cls, word, None, None, ("fixes class vertex",))
    try:
        a = affine_of_word(desc, cls, word, group)
    except CuspError:
        return FibreCertificate(cls, word, None, None, ("fixes class vertex",))
    failures = []
    if not a.is_translation:
        failures.append("linear part is identity")
    t = a.translation
    coords = group.lattice_coordinates(t)
    ints = [x.numerator for x in coords] if all(x.denominator == 1 for x in coords) else None
    if ints is None or gcd(*ints) != 1:
        failures.append("primitive in lattice")
    neg = tuple(-x for x in t)
    for L in group.point_group:
        img = tuple(sum(L[i][j] * t[j] for j in range(3)) for i in range(3))
        if img != t and img != neg:
            failures.append("normal")
            break
    return FibreCertificate(cls, word, t, coords, tuple(failures))


@dataclass(frozen=True)
class FilledManifold:
    name: str
    presentation: Presentation
    handles: HandleCounts
    fibres: tuple  # FibreCertificate per class
    open_handles: HandleCounts

    @property
    def chi(self) -> int:
        return self.handles.chi


def fill(desc: ManifoldDescription, spec: FillingSpec, strict: bool = True,
         cycles=None) -> FilledManifold:
    """Kill every fibre word.  In non-strict mode only the first check is fatal."""
    classes = vertex_classes(desc)
    if len(spec.fibres) != len(classes):
        raise FibreError(f"filling has {len(spec.fibres)} fibres for {len(classes)} cusps")
    certs = []
    problems = []
    for choice in spec.fibres:
        cls = classes[choice.class_ordinal]
        cert = validate_fibre(desc, cls, choice.word)
        certs.append(cert)
        fatal = cert.failures if strict else tuple(f for f in cert.failures if f == "fixes class vertex")
        problems.extend(f"class {cls.ordinal} fibre {format_word(choice.word) or '1'}: {f}" for f in fatal)
    if problems:
        raise FibreError("invalid fibre: " + "; ".join(problems), problems)
    if cycles is None:
        cycles = ridge_cycles(desc)
    base = fundamental_presentation(desc, cycles)
    extra = Presentation.from_labelled(desc.labels, [c.word for c in certs]).relators
    pres = Presentation(base.generators, base.relators + extra)
    open_handles = handle_counts(desc, cycles)
    handles = open_handles
    for _ in certs:
        handles = handles + FILLING_HANDLES
    return FilledManifold(desc.name, pres, handles, tuple(certs), open_handles)


@dataclass(frozen=True)
class CoverCertificate:
    character: dict  # generator label -> +1 / -1
    presentation: Presentation  # simplified kernel presentation
    order: EnumerationResult
    h1: AbelianInvariants
    chi: int
    link_components: int

    def to_dict(self):
        return {
            "character": dict(self.character),
            "generators": len(self.presentation.generators),
            "relators": len(self.presentation.relators),
            "order": self.order.to_dict(),
            "h1": str(self.h1),
            "chi": self.chi,
            "link_components": self.link_components,
        }


@dataclass(frozen=True)
class Certificate:
    name: str
    simplified: Presentation
    group_order: EnumerationResult
    h1: AbelianInvariants
    chi: int
    covers: tuple = ()
    notes: tuple = field(default=())

    @property
    def cover(self) -> CoverCertificate | None:
        return self.covers[0] if self.covers else None

    @property
    def cover_chi(self):
        return self.cover.chi if self.cover else None

    @property
    def cover_group_order(self):
        return self.cover.order if self.cover else None

    @property
    def link_components(self):
        return self.cover.link_components if self.cover else None

    def to_dict(self):
        return {
            "group_order": self.group_order.to_dict(),
            "h1": str(self.h1),
            "chi": self.chi,
            "simplified_generators": len(self.simplified.generators),
            "simplified_relators": len(self.simplified.relators),
            "covers": [c.to_dict() for c in self.covers],
            "cover_chi": self.cover_chi,
            "cover_group_order": None if self.cover is None else self.cover.order.to_dict(),
            "link_components": self.link_components,
            "notes": list(self.notes),
        }


def link_components(desc, chi: dict, groups) -> int:
    """Preimages of the filled cusps in the cover defined by ``chi``.

    A cusp whose stabiliser lies in the kernel lifts to two copies, otherwise
    its preimage is connected.
    """
    total = 0
    for g in groups:
        inside = all(character_value_labelled(chi, w) == 1 for w, _ in g.generators)
        total += 2 if inside else 1
    return total


def character_value_labelled(chi: dict, word) -> int:
    s = 1
    for g, _ in word:
        s *= chi[g]
    return s


def certify(desc: ManifoldDescription, filled: FilledManifold, cap: int = DEFAULT_CAP,
            double_cover: bool = True) -> Certificate:
    simplified = tietze_simplify(filled.presentation)
    order = todd_coxeter(simplified, cap)
    h1 = abelianization(filled.presentation)
    notes = []
    covers = []
    if double_cover:
        chars = two_characters(filled.presentation)
        if not chars:
            notes.append("no index-2 character")
        groups = [develop_cusp(desc, cls) for cls in vertex_classes(desc)] if chars else []
        for chi in chars:
            kernel = tietze_simplify(reidemeister_schreier(filled.presentation, chi))
            labelled = dict(zip(filled.presentation.generators, chi))
            covers.append(CoverCertificate(
                character=labelled,
                presentation=kernel,
                order=todd_coxeter(kernel, cap),
                h1=abelianization(kernel),
                chi=2 * filled.chi,
                link_components=link_components(desc, labelled, groups),
            ))
    return Certificate(filled.name, simplified, order, h1, filled.chi, tuple(covers), tuple(notes))


__all__ = [
    "FILLING_HANDLES",
    "Certificate",
    "CoverCertificate",
    "FibreCertificate",
    "FibreChoice",
    "FilledManifold",
    "FillingSpec",
    "certify",
    "fill",
    "link_components",
    "parse_filling",
    "validate_fibre",
]
