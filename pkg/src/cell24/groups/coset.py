"""Todd–Coxeter coset enumeration over the trivial subgroup (HLT strategy).

Enumeration is deterministic: cosets are processed in creation order,
relators in presentation order, and undefined table entries are filled
column by column.  A complete table is re-checked (closure and relator
traces) before its order is reported.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_CAP = 100_000


@dataclass(frozen=True)
class EnumerationResult:
    complete: bool
    order: int | None = None
    cap: int | None = None
    table: tuple | None = None  # rows over columns (g1, g1^-1, g2, ...)

    @property
    def status(self) -> str:
        return "complete" if self.complete else "inconclusive"

    def __str__(self):
        return f"Complete({self.order})" if self.complete else f"Exceeded({self.cap})"

    def to_dict(self):
        if self.complete:
            return {"status": "complete", "order": self.order}
        return {"status": "inconclusive", "cap": self.cap}


class _CapExceeded(Exception):
    pass


def _col(x: int) -> int:
    return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1


class _Enumerator:
    def __init__(self, ngens, relators, cap):
        self.ncols = 2 * ngens
        self.inv = [c ^ 1 for c in range(self.ncols)]
        self.rels = [[_col(x) for x in r] for r in relators if r]
        self.cap = cap
        self.table = [[None] * self.ncols]
        self.parent = [0]
        self.live = [True]

    def new_coset(self):
        if len(self.table) >= self.cap:
            raise _CapExceeded
        self.table.append([None] * self.ncols)
        self.parent.append(len(self.parent))
        self.live.append(True)
        return len(self.table) - 1

    def define(self, c, x):
        d = self.new_coset()
        self.table[c][x] = d
        self.table[d][self.inv[x]] = c

    def rep(self, c):
        p = self.parent
        r = c
        while p[r] != r:
            r = p[r]
        while p[c] != r:
            p[c], c = r, p[c]
        return r

    def merge(self, a, b, queue):
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        lo, hi = min(a, b), max(a, b)
        self.parent[hi] = lo
        self.live[hi] = False
        queue.append(hi)

    def coincidence(self, a, b):
        queue = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = self.table[e][x]
                if f is None:
                    continue
                ix = self.inv[x]
                if self.table[f][ix] == e:
                    self.table[f][ix] = None
                e1, f1 = self.rep(e), self.rep(f)
                if self.table[e1][x] is not None:
                    self.merge(f1, self.table[e1][x], queue)
                elif self.table[f1][ix] is not None:
                    self.merge(e1, self.table[f1][ix], queue)
                else:
                    self.table[e1][x] = f1
                    self.table[f1][ix] = e1

    def scan_and_fill(self, c, word):
        t = self.table
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and t[f][word[i]] is not None:
                f = t[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][self.inv[word[j]]] is not None:
                b = t[b][self.inv[word[j]]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][word[i]] = b
                t[b][self.inv[word[i]]] = f
                return
            self.define(f, word[i])

    def run(self):
        c = 0
        while c < len(self.table):
            for r in self.rels:
                if not self.live[c]:
                    break
                self.scan_and_fill(c, r)
            if self.live[c]:
                for x in range(self.ncols):
                    if self.table[c][x] is None:
                        self.define(c, x)
            c += 1

    def compact(self):
        alive = [c for c in range(len(self.table)) if self.live[c]]
        index = {c: i for i, c in enumerate(alive)}
        return tuple(tuple(index[self.rep(y)] for y in self.table[c]) for c in alive)


def check_table(table, relators) -> bool:
    """Closure plus every relator tracing to a loop from every coset."""
    n = len(table)
    ncols = len(table[0]) if n else 0
    for c, row in enumerate(table):
        for x, d in enumerate(row):
            if d is None or not 0 <= d < n or table[d][x ^ 1] != c:
                return False
    for r in relators:
        cols = [_col(x) for x in r]
        for c in range(n):
            d = c
            for x in cols:
                d = table[d][x]
            if d != c:
                return False
    return ncols >= 0


def todd_coxeter(pres, cap: int = DEFAULT_CAP) -> EnumerationResult:
    """Enumerate cosets of the trivial subgroup of ``pres``.

    ``Complete(n)`` certifies the group has order ``n``; ``Exceeded`` says
    nothing about the order.
    """
    if cap < 1:
        raise ValueError("coset cap must be at least 1")
    if pres.ngens == 0:
        return EnumerationResult(True, 1, cap, ((),))
    en = _Enumerator(pres.ngens, pres.relators, cap)
    try:
        en.run()
    except _CapExceeded:
        return EnumerationResult(False, None, cap)
    table = en.compact()
    if not check_table(table, pres.relators):
        raise AssertionError("coset enumeration produced an inconsistent table")
    return EnumerationResult(True, len(table), cap, table)
