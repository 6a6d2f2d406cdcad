"""Recover a manifold's k-vectors from a list of its ridge cycles.

The input is a set of transcribed ridge cycles such as
``A∩H a A'∩G' g' B∩G b B'∩H' h' A∩H``.  From these we read off which side
each generator is defined on and where it lands; the centre-transport
rule then leaves four k-vectors per pairing.  Candidates are filtered by
every single transition in the tables, and each surviving combination is
checked in full (ridge cycles, relators, cusp types, orientation).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from .errors import Cell24Error
from .pairing import SidePairing, make_description, parse_word
from .polytope import build_polytope

# Ridge cycles of census manifold 1011, one per 2-handle, grouped as the
# four coloured tables (x-y, x-z, y-z, and off-plane).
TABLES_1011 = {
    "x-y": [
        ("green", "A∩H a A'∩G' g' B∩G b B'∩H' h' A∩H"),
        ("red", "A∩J a A'∩J j B'∩J' b' B∩J' j' A∩J"),
        ("brown", "A∩G a A'∩H' h' B∩H b B'∩G' g' A∩G"),
        ("blue", "A∩I a A'∩I i B'∩I' b' B∩I' i' A∩I"),
        ("pink", "G∩I g G'∩J' j' G'∩J g' G∩I' i' G∩I"),
        ("black", "H∩J h H'∩I' i' H'∩I h' H∩J' j' H∩J"),
    ],
    "x-z": [
        ("green", "D∩K d D'∩L l D'∩L' d' D∩K' k' D∩K"),
        ("red", "G∩K g G'∩L' l' H'∩L h' H∩K' k' G∩K"),
        ("brown", "C∩G c C'∩G g D∩G' d D'∩G' g' C∩G"),
        ("blue", "C∩H c C'∩H h D∩H' d D'∩H' h' C∩H"),
        ("pink", "C∩K c C'∩L l C'∩L' c' C∩K' k' C∩K"),
        ("black", "G∩L g G'∩K' k' H'∩K h' H∩L' l' G∩L"),
    ],
    "y-z": [
        ("green", "I∩L i I'∩L l J'∩L' j' J∩L' l' I∩L"),
        ("red", "I∩K i I'∩K k J'∩K' j' J∩K' k' I∩K"),
        ("brown", "F∩L f F'∩K' k' F'∩K f' F∩L' l' F∩L"),
        ("blue", "E∩K e E'∩L' l' E'∩L e' E∩K' k' E∩K"),
        ("pink", "E∩J e E'∩I' i' F∩I f F'∩J' j' E∩J"),
        ("black", "E∩I e E'∩J' j' F∩J f F'∩I' i' E∩I"),
    ],
    "x-y-z": [
        ("green", "A∩E a A'∩E e B∩E' b B'∩E' e' A∩E"),
        ("red", "B∩C b B'∩D d B'∩D' b' B∩C' c' B∩C"),
        ("brown", "A∩C a A'∩D d A'∩D' a' A∩C' c' A∩C"),
        ("blue", "A∩F a A'∩F f B∩F' b B'∩F' f' A∩F"),
        ("pink", "C∩E c C'∩F f D∩F' d D'∩E' e' C∩E"),
        ("black", "C∩F' c C'∩E' e' D∩E d D'∩F f C∩F'"),
    ],
}


class DerivationError(Cell24Error):
    pass


@dataclass(frozen=True)
class TableCycle:
    table: str
    colour: str
    ridges: tuple  # frozensets of two side labels
    letters: tuple  # (label, exponent), letters[i] carries ridges[i] to ridges[i+1]

    def key(self) -> frozenset:
        return cyclic_key(self.ridges, self.letters)


def parse_cycle_row(text: str):
    toks = text.split()
    if len(toks) % 2 == 0:
        raise DerivationError(f"malformed cycle row {text!r}")
    ridges = []
    letters = []
    for i, tok in enumerate(toks):
        if i % 2 == 0:
            parts = re.split("∩|\\^", tok)
            if len(parts) != 2:
                raise DerivationError(f"bad ridge token {tok!r}")
            ridges.append(frozenset(parts))
        else:
            (letter,) = parse_word(tok)
            letters.append(letter)
    if ridges[0] != ridges[-1]:
        raise DerivationError(f"cycle row {text!r} does not return to its first ridge")
    return tuple(ridges[:-1]), tuple(letters)


def table_cycles(tables=TABLES_1011) -> list:
    out = []
    for name, rows in tables.items():
        for colour, text in rows:
            ridges, letters = parse_cycle_row(text)
            out.append(TableCycle(name, colour, ridges, letters))
    return out


def cyclic_key(ridges, letters) -> frozenset:
    """All rotations of a cycle and of its reversal, as a hashable set."""
    n = len(ridges)
    forms = set()
    fwd = [(ridges[i], letters[i]) for i in range(n)]
    # reversed traversal: ridges[i+1] -> ridges[i] by letters[i]^-1
    back = [(ridges[(i + 1) % n], (letters[i][0], -letters[i][1])) for i in reversed(range(n))]
    for seq in (fwd, back):
        for s in range(n):
            forms.add(tuple(seq[s:] + seq[:s]))
    return frozenset(forms)


def computed_key(cycle) -> frozenset:
    ridges = tuple(frozenset(side.label for side in r.sides) for r in cycle.ridges)
    return cyclic_key(ridges, cycle.letters)


def infer_structure(cycles) -> dict:
    """Source and target side labels of each generator, from the transitions."""
    src, tgt = {}, {}
    for cyc in cycles:
        n = len(cyc.ridges)
        for i, (g, e) in enumerate(cyc.letters):
            here, there = cyc.ridges[i], cyc.ridges[(i + 1) % n]
            a, b = (here, there) if e > 0 else (there, here)
            src[g] = src.get(g, a) & a
            tgt[g] = tgt.get(g, b) & b
    out = {}
    for g in sorted(src):
        if len(src[g]) != 1 or len(tgt[g]) != 1:
            raise DerivationError(f"tables do not pin down the sides of generator {g}: "
                                  f"{sorted(src[g])} -> {sorted(tgt[g])}")
        out[g] = (next(iter(src[g])), next(iter(tgt[g])))
    return out


def k_candidates(source, target) -> list:
    """k-vectors with diag(k) source.centre = target.centre."""
    fixed = []
    for s, t in zip(source.center, target.center):
        if (s == 0) != (t == 0):
            return []
        fixed.append(None if s == 0 else int(t / s))
    free = [i for i, f in enumerate(fixed) if f is None]
    out = []
    for signs in itertools.product((1, -1), repeat=len(free)):
        k = list(fixed)
        for i, s in zip(free, signs):
            k[i] = s
        out.append(tuple(k))
    return out


def _transition_ok(pairing, letter_exp, here, there) -> bool:
    """Does the letter carry ridge ``here`` (side labels) onto ridge ``there``?"""
    P = build_polytope()
    r = P.ridge(*sorted(here, key=lambda s: P.side(s).index))
    images = set()
    for v in r.vertices:
        y = pairing.act(letter_exp, P.vertices[v].coords)
        w = None if not isinstance(y, tuple) else P.find_vertex(y)
        if w is None:
            return False
        images.add(w)
    target = P.ridge_by_vertices(frozenset(images))
    return target is not None and frozenset(s.label for s in target.sides) == there


@dataclass
class SearchResult:
    structure: dict
    candidates: dict  # label -> surviving k-vectors after the local filter
    tried: int = 0
    solutions: list = field(default_factory=list)
    log: list = field(default_factory=list)


def search(name="1011", tables=TABLES_1011, expect_types="GGGGG", orientable=False,
           limit=None) -> SearchResult:
    """Constrained search for k-vectors reproducing the tabulated ridge cycles."""
    from .cusp import analyze_cusps
    from .cycles import edge_cycles, is_orientable, ridge_cycles

    P = build_polytope()
    cycles = table_cycles(tables)
    structure = infer_structure(cycles)
    log = [f"tables: {len(cycles)} ridge cycles in {len(tables)} tables"]
    for g, (s, t) in structure.items():
        log.append(f"structure: {g}: {s} -> {t}")

    survivors = {}
    for g, (s, t) in structure.items():
        S, T = P.side(s), P.side(t)
        cands = k_candidates(S, T)
        kept = []
        for k in cands:
            p = SidePairing(g, S, T, k)
            ok = True
            for cyc in cycles:
                n = len(cyc.ridges)
                for i, (lg, e) in enumerate(cyc.letters):
                    if lg == g and not _transition_ok(p, e, cyc.ridges[i], cyc.ridges[(i + 1) % n]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                kept.append(k)
        survivors[g] = kept
        log.append(f"local filter: {g}: {len(cands)} candidates -> {len(kept)} "
                   + " ".join(_kstr(k) for k in kept))

    result = SearchResult(structure, survivors, log=log)
    table_keys = {c.key() for c in cycles}
    labels = sorted(structure)
    for combo in itertools.product(*(survivors[g] for g in labels)):
        if limit is not None and result.tried >= limit:
            break
        result.tried += 1
        rows = [(g, structure[g][0], structure[g][1], k) for g, k in zip(labels, combo)]
        try:
            desc = make_description(name, rows)
            rc = ridge_cycles(desc)
        except Cell24Error as exc:
            log.append(f"reject {_combo_str(combo)}: {exc}")
            continue
        checks = {
            "24 cycles of length 4": len(rc) == 24 and all(len(c) == 4 for c in rc),
            "cycles match tables": {computed_key(c) for c in rc} == table_keys,
            "12 edge classes": len(edge_cycles(desc)) == 12,
            "orientation": is_orientable(desc) == orientable,
        }
        if all(checks.values()):
            types = "".join(r.flat_type.code for r in analyze_cusps(desc))
            checks[f"cusp types {expect_types}"] = types == expect_types
        failed = [k for k, v in checks.items() if not v]
        if failed:
            log.append(f"reject {_combo_str(combo)}: " + ", ".join(failed))
        else:
            log.append(f"accept {_combo_str(combo)}")
            result.solutions.append(desc)
    log.append(f"tried {result.tried} combinations, {len(result.solutions)} solution(s)")
    return result


def _kstr(k):
    return "".join("+" if x > 0 else "-" for x in k)


def _combo_str(combo):
    return " ".join(_kstr(k) for k in combo)


def derived_file_text(result: SearchResult, name="1011") -> str:
    if len(result.solutions) != 1:
        raise DerivationError(f"expected a unique solution, found {len(result.solutions)}")
    desc = result.solutions[0]
    header = [
        f"# Census manifold no. {name} (five cusps, non-orientable).",
        "# Derived by cell24.derive.search from the transcribed ridge-cycle tables;",
        "# see search1011.log for the full search record.",
    ]
    return "\n".join(header) + "\n" + desc.serialize()
