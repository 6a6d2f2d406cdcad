"""Side pairings of the 24-cell as exact boundary maps.

A pairing ``g`` with k-vector ``k`` sends a point ``x`` of the boundary
sphere to ``r(diag(k) x)``, where ``r`` is inversion in the (radius 1)
sphere of the target side.  Words are tuples of ``(label, exponent)``
pairs and act right to left, so ``(("e", -1), ("g", 1))`` is e⁻¹g and
applies ``g`` first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import NotSidePreservingError, ParseError, ValidationError
from .polytope import Side, build_polytope, dot, norm2, sub

LABELS = "abcdefghijkl"


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return "INFINITY"


INFINITY = _Infinity()


# -- words -----------------------------------------------------------------

def reduce_word(word) -> tuple:
    out = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(tuple(letter))
    return tuple(out)


def invert_word(word) -> tuple:
    return tuple((g, -e) for g, e in reversed(word))


def mul_words(*words) -> tuple:
    """Product ``w1 w2 ...`` (the last factor acts first)."""
    out = ()
    for w in words:
        out = reduce_word(out + tuple(w))
    return out


_TOKEN = re.compile(r"([a-l])('|\^-1|⁻¹)?$")


def parse_word(text: str) -> tuple:
    """Parse ``"e' g"`` (space separated, apostrophe = inverse) into a word.

    Tokens of the form ``g^-1`` and ``g⁻¹`` are accepted too, and a single
    token may also run letters together (``"e'g"``).
    """
    text = text.strip()
    if text in ("", "1", "()"):
        return ()
    letters = []
    for tok in text.split():
        parts = re.findall(r"[a-l](?:'|\^-1|⁻¹)?|\S", tok)
        for p in parts:
            m = _TOKEN.match(p)
            if not m:
                raise ValueError(f"unknown generator letter {p!r}")
            letters.append((m.group(1), -1 if m.group(2) else 1))
    return tuple(letters)


def format_word(word, style="ascii") -> str:
    if not word:
        return "1"
    if style == "ascii":
        return " ".join(g + ("'" if e < 0 else "") for g, e in word)
    return "".join(g + ("⁻¹" if e < 0 else "") for g, e in word)


# -- geometry --------------------------------------------------------------

def invert_in_sphere(x, center):
    """Inversion in the radius-1 sphere about ``center`` (ℝ⁴ ∪ {∞})."""
    if x is INFINITY:
        return tuple(center)
    d = sub(x, center)
    n = norm2(d)
    if n == 0:
        return INFINITY
    return tuple(c + di / n for c, di in zip(center, d))


def _diag(k, x):
    if x is INFINITY:
        return INFINITY
    return tuple(ki * xi for ki, xi in zip(k, x))


@dataclass(frozen=True)
class SidePairing:
    label: str
    source: Side
    target: Side
    k: tuple  # four entries in {+1, -1}

    def forward(self, x):
        return invert_in_sphere(_diag(self.k, x), self.target.center)

    def backward(self, x):
        return _diag(self.k, invert_in_sphere(x, self.target.center))

    def act(self, exponent, x):
        return self.forward(x) if exponent > 0 else self.backward(x)

    def side_at(self, exponent) -> Side:
        """Side on which the letter ``label^exponent`` is defined."""
        return self.source if exponent > 0 else self.target

    def side_to(self, exponent) -> Side:
        return self.target if exponent > 0 else self.source

    @property
    def sign(self) -> int:
        prod = 1
        for s in self.k:
            prod *= s
        return -prod

    def line(self) -> str:
        kk = "".join("+" if s > 0 else "-" for s in self.k)
        return f"pairing {self.label} {self.source.code} {self.target.code} {kk}"


@dataclass(frozen=True)
class ManifoldDescription:
    name: str
    pairings: tuple  # 12 SidePairing in label order

    def __post_init__(self):
        object.__setattr__(self, "_by_label", {p.label: p for p in self.pairings})
        at = {}
        for p in self.pairings:
            at[p.source.index] = (p.label, 1)
            at[p.target.index] = (p.label, -1)
        object.__setattr__(self, "_at_side", at)

    @property
    def labels(self) -> tuple:
        return tuple(p.label for p in self.pairings)

    def __getitem__(self, label) -> SidePairing:
        return self._by_label[label]

    def letter_at(self, side: Side) -> tuple:
        """The unique letter (generator or inverse) defined on ``side``."""
        return self._at_side[side.index]

    def serialize(self) -> str:
        lines = [f"manifold {self.name}"]
        lines.extend(p.line() for p in self.pairings)
        return "\n".join(lines) + "\n"


def apply_word(word, x, desc: ManifoldDescription):
    """Evaluate ``word`` on the boundary point ``x`` (rightmost letter first)."""
    if x is not INFINITY:
        x = tuple(Fraction(c) for c in x)
    for label, e in reversed(word):
        x = desc[label].act(e, x)
    return x


def apply_letter_to_vertex(desc, letter, vindex):
    """Image of vertex ``vindex`` under a single letter, as a vertex index.

    Returns None when the image is not one of the 24 vertices.
    """
    P = build_polytope()
    y = desc[letter[0]].act(letter[1], P.vertices[vindex].coords)
    if y is INFINITY:
        return None
    return P.find_vertex(y)


def image_side(word, side, desc: ManifoldDescription) -> Side:
    """The model side whose sphere carries the image of ``side``'s sphere.

    The six vertices of ``side`` lie on its sphere; they are mapped and the
    unique side sphere through all six images is returned.
    """
    P = build_polytope()
    side = P.side(side)
    images = [apply_word(word, P.vertices[i].coords, desc) for i in sorted(P.vertices_of(side))]
    if any(y is INFINITY for y in images):
        raise NotSidePreservingError(
            f"not side-preserving: {format_word(word)} sends side {side} through infinity")
    for cand in P.sides:
        if all(norm2(sub(y, cand.center)) == 1 for y in images):
            return cand
    raise NotSidePreservingError(
        f"not side-preserving: {format_word(word)} does not carry side {side} to a side")


def orientation_character(desc: ManifoldDescription) -> dict:
    """+1/-1 per generator: det(diag(k)) times -1 for the sphere inversion."""
    return {p.label: p.sign for p in desc.pairings}


# -- parsing ---------------------------------------------------------------

_SIGNS = {"+": 1, "-": -1, "0": 0}


def _parse_center(tok, lineno, source):
    if len(tok) != 4 or any(ch not in "+-0" for ch in tok):
        raise ParseError(f"bad side code {tok!r}", lineno, source)
    c = tuple(_SIGNS[ch] for ch in tok)
    if sum(1 for x in c if x) != 2:
        raise ParseError(f"side code {tok!r} must have exactly two nonzero entries", lineno, source)
    return c


def _parse_k(tok, lineno, source):
    if len(tok) != 4 or any(ch not in "+-" for ch in tok):
        raise ParseError(f"bad k-vector {tok!r}", lineno, source)
    return tuple(_SIGNS[ch] for ch in tok)


def make_description(name: str, rows: Iterable) -> ManifoldDescription:
    """Build and validate a description from ``(label, source, target, k)`` rows.

    ``source`` and ``target`` may be side labels, codes or centre vectors.
    """
    P = build_polytope()
    pairings = []
    for label, src, tgt, k in rows:
        s, t = P.side(src), P.side(tgt)
        pairings.append(SidePairing(label, s, t, tuple(int(x) for x in k)))
    validate_pairings(pairings)
    pairings.sort(key=lambda p: p.label)
    return ManifoldDescription(name, tuple(pairings))


def validate_pairings(pairings):
    seen = set()
    for p in pairings:
        if p.label not in LABELS:
            raise ValidationError(f"pairing {p.label}: label must be one of a-l")
        if p.label in seen:
            raise ValidationError(f"pairing {p.label}: duplicate label")
        seen.add(p.label)
        if any(x not in (1, -1) for x in p.k):
            raise ValidationError(f"pairing {p.label}: k entries must be +1 or -1")
        moved = tuple(ki * ci for ki, ci in zip(p.k, p.source.center))
        if moved != p.target.center:
            raise ValidationError(
                f"pairing {p.label}: k does not map centre {p.source.code} to {p.target.code}")
    used = [p.source.index for p in pairings] + [p.target.index for p in pairings]
    if len(pairings) != 12 or len(set(used)) != 24:
        raise ValidationError("sides not partitioned: need 12 pairings using each of the 24 sides once")


def parse_manifold(text: str, source=None) -> ManifoldDescription:
    name = None
    rows = []
    linenos = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "manifold":
            if len(toks) != 2:
                raise ParseError("expected 'manifold <name>'", lineno, source)
            if name is not None:
                raise ParseError("second 'manifold' directive", lineno, source)
            name = toks[1]
        elif toks[0] == "pairing":
            if len(toks) != 5:
                raise ParseError("expected 'pairing <letter> <side> <side> <k>'", lineno, source)
            label = toks[1]
            if len(label) != 1 or label not in LABELS:
                raise ParseError(f"bad pairing label {label!r}", lineno, source)
            src = _parse_center(toks[2], lineno, source)
            tgt = _parse_center(toks[3], lineno, source)
            k = _parse_k(toks[4], lineno, source)
            rows.append((label, src, tgt, k))
            linenos.setdefault(label, lineno)
        else:
            raise ParseError(f"unknown directive {toks[0]!r}", lineno, source)
    if name is None:
        raise ParseError("missing 'manifold <name>' directive", None, source)
    try:
        return make_description(name, rows)
    except ValidationError as exc:
        msg = str(exc)
        label = msg.split(":", 1)[0].replace("pairing ", "").strip()
        line = linenos.get(label)
        prefix = f"{source}:" if source else ""
        if line is not None:
            prefix += f"line {line}: "
        elif prefix:
            prefix += " "
        raise ValidationError(prefix + msg) from None
