from importlib.resources import files

from cell24.derive import (
    TABLES_1011,
    computed_key,
    derived_file_text,
    infer_structure,
    k_candidates,
    search,
    table_cycles,
)
from cell24.cycles import ridge_cycles


def test_tables_shape():
    rows = table_cycles()
    assert len(rows) == 24
    assert all(len(r.ridges) == 4 for r in rows)
    assert len({r.key() for r in rows}) == 24


def test_structure_pairs_primed_sides():
    s = infer_structure(table_cycles())
    assert s == {g: (g.upper(), g.upper() + "'") for g in "abcdefghijkl"}


def test_at_most_four_candidates(P):
    for s in P.sides:
        for t in P.sides:
            assert len(k_candidates(s, t)) in (0, 4)


def test_search_reproduces_shipped_file():
    result = search()
    assert len(result.solutions) == 1
    assert all(len(v) <= 4 for v in result.candidates.values())
    shipped = files("cell24.data").joinpath("manifold1011.rt").read_text()
    assert derived_file_text(result) == shipped
    log = files("cell24.data").joinpath("search1011.log").read_text()
    assert log == "\n".join(result.log) + "\n"


def test_shipped_cycles_match_tables(m1011):
    table_keys = {c.key() for c in table_cycles(TABLES_1011)}
    assert {computed_key(c) for c in ridge_cycles(m1011)} == table_keys
