"""Finitely presented groups.

Letters are nonzero integers: ``i+1`` is generator ``i`` and ``-(i+1)`` its
inverse.  Relators are tuples of letters.
"""

from __future__ import annotations

from dataclasses import dataclass


def free_reduce(word) -> tuple:
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word) -> tuple:
    w = free_reduce(word)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i:j + 1]


def invert(word) -> tuple:
    return tuple(-x for x in reversed(word))


def canonical_relator(word) -> tuple:
    """Least representative under cyclic rotation and inversion."""
    w = cyclic_reduce(word)
    if not w:
        return w
    best = None
    for cand in (w, invert(w)):
        for i in range(len(cand)):
            rot = cand[i:] + cand[:i]
            key = tuple((abs(x), x < 0) for x in rot)
            if best is None or key < best[0]:
                best = (key, rot)
    return best[1]


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(tuple(r) for r in self.relators))
        n = len(self.generators)
        for r in self.relators:
            for x in r:
                if x == 0 or abs(x) > n:
                    raise ValueError(f"letter {x} out of range for {n} generators")

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @classmethod
    def from_labelled(cls, generators, relators):
        """Build from relators given as ``(label, exponent)`` words."""
        index = {g: i + 1 for i, g in enumerate(generators)}
        rels = []
        for r in relators:
            rels.append(tuple(index[g] * (1 if e > 0 else -1) for g, e in r))
        return cls(tuple(generators), tuple(rels))

    @classmethod
    def parse(cls, text: str):
        """Parse ``"a b | a^2, b^3, a b a b"``.

        Generators are whitespace separated before ``|``; relators are comma
        separated words of generator names, with a trailing ``'`` for inverses
        and ``^n`` for powers of single tokens.
        """
        gens_part, _, rels_part = text.partition("|")
        gens = tuple(gens_part.split())
        index = {g: i + 1 for i, g in enumerate(gens)}
        rels = []
        for chunk in rels_part.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            word = []
            for tok in chunk.split():
                power = 1
                if "^" in tok:
                    tok, p = tok.split("^")
                    power = int(p)
                inv = tok.endswith("'")
                name = tok.rstrip("'")
                x = index[name] * (-1 if inv else 1)
                if power < 0:
                    x, power = -x, -power
                word.extend([x] * power)
            rels.append(tuple(word))
        return cls(gens, tuple(rels))

    def labelled(self, word) -> tuple:
        return tuple((self.generators[abs(x) - 1], 1 if x > 0 else -1) for x in word)

    def format_word(self, word) -> str:
        if not word:
            return "1"
        return " ".join(self.generators[abs(x) - 1] + ("'" if x < 0 else "") for x in word)

    def exponent_matrix(self) -> list:
        """Rows are relators, columns generators, entries exponent sums."""
        rows = []
        for r in self.relators:
            row = [0] * self.ngens
            for x in r:
                row[abs(x) - 1] += 1 if x > 0 else -1
            rows.append(row)
        return rows

    def __str__(self):
        rels = ", ".join(self.format_word(r) for r in self.relators)
        return f"< {' '.join(self.generators)} | {rels} >"
