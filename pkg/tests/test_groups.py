from itertools import combinations, product
from math import gcd
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cell24.groups import (
    AbelianInvariants,
    CharacterError,
    Presentation,
    abelianization,
    character_value,
    reidemeister_schreier,
    smith_diagonal,
    tietze_simplify,
    todd_coxeter,
    two_characters,
)


# -- brute-force oracle: concrete permutation groups -------------------------

def compose(p, q):
    """p after q."""
    return tuple(p[i] for i in q)


def perm_inverse(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def evaluate(word, gens):
    n = len(gens[0])
    g = tuple(range(n))
    for x in word:
        p = gens[abs(x) - 1]
        g = compose(g, p if x > 0 else perm_inverse(p))
    return g


def closure(gens):
    """Elements of the generated group, each with a word reaching it."""
    e = tuple(range(len(gens[0])))
    words = {e: ()}
    frontier = [e]
    while frontier:
        nxt = []
        for g in frontier:
            for i, p in enumerate(gens):
                for s, q in ((1, p), (-1, perm_inverse(p))):
                    h = compose(g, q)
                    if h not in words:
                        words[h] = words[g] + (s * (i + 1),)
                        nxt.append(h)
        frontier = nxt
    return words


def regular(elements, mul, gens):
    index = {x: i for i, x in enumerate(elements)}
    return [tuple(index[mul(x, g)] for x in elements) for g in gens]


def cycle(n):
    return tuple((i + 1) % n for i in range(n))


def dihedral(n):
    rot = cycle(n)
    ref = tuple((-i) % n for i in range(n))
    return [ref, rot]


def quat_mul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


Q8 = [tuple(s * (i == j) for j in range(4)) for i in range(4) for s in (1, -1)]


def dic3_mul(x, y):
    # Z3 x| Z4 with the generator of Z4 inverting Z3
    return ((x[0] + (-1) ** x[1] * y[0]) % 3, (x[1] + y[1]) % 4)


DIC3 = [(i, j) for i in range(3) for j in range(4)]


def direct(m, n):
    """Z_m x Z_n on m*n points."""
    pts = [(i, j) for i in range(m) for j in range(n)]
    return regular(pts, lambda x, g: ((x[0] + g[0]) % m, (x[1] + g[1]) % n), [(1, 0), (0, 1)])


SMALL_GROUPS = [(f"Z{n}", f"a | a^{n}", [cycle(n)]) for n in range(1, 13)] + [
    ("V4", "a b | a^2, b^2, a b a b", [(1, 0, 3, 2), (2, 3, 0, 1)]),
    ("S3", "a b | a^2, b^3, a b a b", [(1, 0, 2), (1, 2, 0)]),
    ("D4", "a b | a^2, b^4, a b a b", dihedral(4)),
    ("D5", "a b | a^2, b^5, a b a b", dihedral(5)),
    ("D6", "a b | a^2, b^6, a b a b", dihedral(6)),
    ("A4", "a b | a^2, b^3, a b a b a b", [(1, 0, 3, 2), (1, 2, 0, 3)]),
    ("Q8", "a b | a^4, a a b' b', b a b' a",
     regular(Q8, quat_mul, [(0, 1, 0, 0), (0, 0, 1, 0)])),
    ("Dic3", "a b | a^6, a a a b' b', b a b' a",
     regular(DIC3, dic3_mul, [(1, 2), (0, 1)])),
    ("Z2xZ4", "a b | a^2, b^4, a b a' b'", direct(2, 4)),
    ("Z2xZ6", "a b | a^2, b^6, a b a' b'", direct(2, 6)),
    ("Z3xZ3", "a b | a^3, b^3, a b a' b'", direct(3, 3)),
    ("Z2^3", "a b c | a^2, b^2, c^2, a b a' b', a c a' c', b c b' c'",
     regular(list(product((0, 1), repeat=3)), lambda x, g: tuple((u + v) % 2 for u, v in zip(x, g)),
             [(1, 0, 0), (0, 1, 0), (0, 0, 1)])),
    ("trivial", "a b | a, a b", [(0,), (0,)]),
]


@pytest.mark.parametrize("name,text,gens", SMALL_GROUPS, ids=[g[0] for g in SMALL_GROUPS])
def test_todd_coxeter_matches_permutation_oracle(name, text, gens):
    pres = Presentation.parse(text)
    for r in pres.relators:
        assert evaluate(r, gens) == tuple(range(len(gens[0]))), f"{name}: oracle fails {r}"
    expected = len(closure(gens))
    assert expected <= 12
    result = todd_coxeter(pres)
    assert result.complete
    assert result.order == expected


@pytest.mark.parametrize("name,text,gens", SMALL_GROUPS, ids=[g[0] for g in SMALL_GROUPS])
def test_abelianization_matches_oracle(name, text, gens):
    elems = closure(gens)
    comm = closure([compose(compose(a, b), compose(perm_inverse(a), perm_inverse(b)))
                    for a in elems for b in elems])
    assert abelianization(Presentation.parse(text)).order == len(elems) // len(comm)


def test_examples():
    assert todd_coxeter(Presentation.parse("a | a^3")).order == 3
    assert str(todd_coxeter(Presentation.parse("a b | a^2, b^2, a b a b"))) == "Complete(4)"
    free = todd_coxeter(Presentation.parse("a b |"), cap=50)
    assert not free.complete and free.status == "inconclusive"
    assert str(free) == "Exceeded(50)"
    with pytest.raises(ValueError):
        todd_coxeter(Presentation.parse("a | a^3"), cap=0)


def test_abelianization_examples():
    assert abelianization(Presentation.parse("a b | a b a' b'")) == AbelianInvariants(2)
    assert abelianization(Presentation.parse("a | a^2")) == AbelianInvariants(0, (2,))
    assert smith_diagonal([[2, 4], [6, 8]]) == [2, 4]
    with pytest.raises(ValueError):
        AbelianInvariants(0, (2, 3))


def test_tietze_examples():
    assert tietze_simplify(Presentation.parse("a b | a, a b")) == Presentation((), ())
    assert tietze_simplify(Presentation.parse("a | a a'")) == Presentation(("a",), ())


def test_cyclic_tc_agrees_with_abelianization():
    for n in range(1, 20):
        pres = Presentation.parse(f"a | a^{n}")
        assert todd_coxeter(pres).order == (abelianization(pres).order or 1)


# -- Smith normal form against determinantal divisors -------------------------

def det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(n))


def determinantal_diagonal(m):
    rows, cols = len(m), len(m[0])
    d = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, det([[m[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        d.append(g)
    return [d[i] // d[i - 1] for i in range(1, len(d))]


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_smith_against_determinantal_divisors(r, c, data):
    m = [[data.draw(st.integers(-9, 9)) for _ in range(c)] for _ in range(r)]
    got = [x for x in smith_diagonal(m) if x != 0]
    assert got == determinantal_diagonal(m)


# -- Reidemeister–Schreier against explicit kernels --------------------------

RS_GROUPS = [g for g in SMALL_GROUPS if g[0] != "trivial"] + [
    ("D8", "a b | a^2, b^8, a b a b", dihedral(8)),
    ("Z4xZ4", "a b | a^4, b^4, a b a' b'", direct(4, 4)),
    ("Z2xZ8", "a b | a^2, b^8, a b a' b'", direct(2, 8)),
]


@pytest.mark.parametrize("name,text,gens", RS_GROUPS, ids=[g[0] for g in RS_GROUPS])
def test_reidemeister_schreier_against_kernel(name, text, gens):
    pres = Presentation.parse(text)
    elems = closure(gens)
    assert len(elems) <= 16
    for chi in two_characters(pres):
        kernel = [g for g, w in elems.items() if character_value(chi, w) == 1]
        assert len(kernel) * 2 == len(elems)
        sub = reidemeister_schreier(pres, chi)
        simple = tietze_simplify(sub)
        assert todd_coxeter(simple).order == len(kernel)
        comm = closure([compose(compose(a, b), compose(perm_inverse(a), perm_inverse(b)))
                        for a in kernel for b in kernel] or [tuple(range(len(gens[0])))])
        assert abelianization(sub).order == len(kernel) // len(comm)
        assert abelianization(simple) == abelianization(sub)


def test_rs_examples():
    z2 = Presentation.parse("a | a^2")
    assert todd_coxeter(tietze_simplify(reidemeister_schreier(z2, (-1,)))).order == 1
    free_product = Presentation.parse("a b | a^2, b^2")
    kernel = reidemeister_schreier(free_product, (-1, -1))
    assert abelianization(kernel) == AbelianInvariants(1)
    with pytest.raises(CharacterError, match="character trivial"):
        reidemeister_schreier(z2, (1,))
    with pytest.raises(CharacterError, match="does not vanish"):
        reidemeister_schreier(Presentation.parse("a | a^3"), (-1,))


def test_two_characters():
    assert two_characters(Presentation.parse("a | a^3")) == []
    assert len(two_characters(Presentation.parse("a b | a^2, b^2"))) == 3


# -- random presentations -----------------------------------------------------

def random_presentation(rng):
    n = rng.randint(1, 4)
    gens = "abcd"[:n]
    rels = []
    for _ in range(rng.randint(0, 4)):
        rels.append(tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(rng.randint(1, 8))))
    return Presentation(tuple(gens), tuple(rels))


def test_tietze_preserves_abelianization_random():
    rng = random.Random(2024)
    for _ in range(100):
        pres = random_presentation(rng)
        assert abelianization(tietze_simplify(pres)) == abelianization(pres), str(pres)


def test_tietze_preserves_finite_order_random():
    rng = random.Random(99)
    checked = 0
    for _ in range(100):
        pres = random_presentation(rng)
        before = todd_coxeter(pres, cap=2000)
        if before.complete:
            checked += 1
            assert todd_coxeter(tietze_simplify(pres), cap=2000).order == before.order
    assert checked > 10


def test_determinism():
    pres = Presentation.parse("a b | a^2, b^3, a b a b a b")
    a, b = todd_coxeter(pres), todd_coxeter(pres)
    assert a.table == b.table
    assert str(tietze_simplify(pres)) == str(tietze_simplify(pres))
