"""Index-two characters and Reidemeister–Schreier kernel presentations."""

from __future__ import annotations

from itertools import product

from ..errors import Cell24Error
from .presentation import Presentation, free_reduce


class CharacterError(Cell24Error):
    pass


def character_value(chi, word) -> int:
    """Evaluate a {+1,-1} character (tuple indexed by generator) on a word."""
    s = 1
    for x in word:
        s *= chi[abs(x) - 1]
    return s


def kills_relators(pres, chi) -> bool:
    return all(character_value(chi, r) == 1 for r in pres.relators)


def two_characters(pres) -> list:
    """All nontrivial homomorphisms onto Z/2 as +-1 tuples, in a fixed order.

    Solves the exponent-sum system mod 2 and enumerates the null space.
    """
    n = pres.ngens
    rows = [[c % 2 for c in row] for row in pres.exponent_matrix()]
    pivots = []
    r = 0
    for col in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * n
        v[fcol] = 1
        for i, pc in enumerate(pivots):
            v[pc] = rows[i][fcol]
        basis.append(v)
    chars = []
    for coeffs in product((0, 1), repeat=len(basis)):
        if not any(coeffs):
            continue
        v = [0] * n
        for c, b in zip(coeffs, basis):
            if c:
                v = [(x + y) % 2 for x, y in zip(v, b)]
        chars.append(tuple(-1 if x else 1 for x in v))
    chars.sort(key=lambda c: tuple(x == 1 for x in c))
    return chars


def reidemeister_schreier(pres: Presentation, chi) -> Presentation:
    """Presentation of the kernel of ``chi`` (index 2).

    Transversal ``{1, t}`` with ``t`` the first generator sent to -1.  The
    Schreier generator ``x_c`` stands for ``rep(c) x rep(c.x)^-1``; the one
    equal to the identity (``t_0``) is dropped.
    """
    chi = tuple(chi)
    if len(chi) != pres.ngens:
        raise CharacterError("character length does not match the generator count")
    if all(v == 1 for v in chi):
        raise CharacterError("character trivial")
    if not kills_relators(pres, chi):
        raise CharacterError("character does not vanish on relators")
    t = next(i for i, v in enumerate(chi) if v == -1) + 1

    names = []
    index = {}
    for c in (0, 1):
        for g in range(1, pres.ngens + 1):
            if c == 0 and g == t:
                continue
            index[(c, g)] = len(names) + 1
            names.append(f"{pres.generators[g - 1]}{c}")

    def step(c, g):
        return c ^ (1 if chi[g - 1] == -1 else 0)

    def rewrite(word, c):
        out = []
        for x in word:
            g = abs(x)
            if x > 0:
                sym = index.get((c, g))
                if sym:
                    out.append(sym)
                c = step(c, g)
            else:
                c = step(c, g)
                sym = index.get((c, g))
                if sym:
                    out.append(-sym)
        if c != 0:
            raise AssertionError("rewritten relator does not close")
        return free_reduce(out)

    rels = []
    for r in pres.relators:
        rels.append(rewrite(r, 0))
        # conjugate by t: t r t^-1 read from coset 0 starts the trace at coset 1
        rels.append(rewrite((t,) + tuple(r) + (-t,), 0))
    return Presentation(tuple(names), tuple(r for r in rels if r))
