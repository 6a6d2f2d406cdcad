"""Greedy Tietze simplification.

Moves, applied until none fires:

* free and cyclic reduction; empty relators are dropped;
* duplicate relators (up to rotation and inversion) are dropped;
* a generator equal to a length-one relator is deleted;
* a generator occurring exactly once in a relator of length at most
  ``max_relator_length`` is solved for and substituted away.

The first is the algebraic form of cancelling a trivial 2-handle against
a 3-handle, the last of cancelling a 1-handle against a 2-handle that runs
over it once.
"""

from __future__ import annotations

from .presentation import Presentation, canonical_relator, cyclic_reduce, free_reduce, invert

MAX_RELATOR_LENGTH = 16


def _tidy(relators):
    seen = {}
    for r in relators:
        c = canonical_relator(r)
        if c and c not in seen:
            seen[c] = None
    return list(seen)


def _substitute(relators, gen, value):
    inv_value = invert(value)
    out = []
    for r in relators:
        w = []
        for x in r:
            if x == gen:
                w.extend(value)
            elif x == -gen:
                w.extend(inv_value)
            else:
                w.append(x)
        out.append(cyclic_reduce(free_reduce(w)))
    return out


def _find_elimination(relators, live, max_len):
    # shortest relator first, then lowest generator
    order = sorted(range(len(relators)), key=lambda i: (len(relators[i]), relators[i]))
    for i in order:
        r = relators[i]
        if len(r) > max_len:
            break
        counts = {}
        for x in r:
            counts[abs(x)] = counts.get(abs(x), 0) + 1
        for g in sorted(counts):
            if counts[g] == 1 and g in live:
                return i, g
    return None


def tietze_simplify(pres: Presentation, max_relator_length: int = MAX_RELATOR_LENGTH) -> Presentation:
    relators = _tidy(pres.relators)
    live = set(range(1, pres.ngens + 1))
    while True:
        found = _find_elimination(relators, live, max_relator_length)
        if found is None:
            break
        i, g = found
        r = relators.pop(i)
        k = next(p for p, x in enumerate(r) if abs(x) == g)
        rest = r[k + 1:] + r[:k]  # r ~ x^e rest  =>  x^e = rest^-1
        value = invert(rest) if r[k] > 0 else tuple(rest)
        relators = _tidy(_substitute(relators, g, value))
        live.discard(g)
    kept = sorted(live)
    renum = {g: i + 1 for i, g in enumerate(kept)}
    rels = []
    for r in relators:
        rels.append(tuple(renum[abs(x)] * (1 if x > 0 else -1) for x in r))
    rels = sorted(set(canonical_relator(r) for r in rels), key=lambda r: (len(r), r))
    gens = tuple(pres.generators[g - 1] for g in kept)
    return Presentation(gens, tuple(rels))
