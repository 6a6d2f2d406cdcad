import random

from cell24.cycles import (
    edge_cycles,
    fundamental_presentation,
    handle_counts,
    is_orientable,
    relator_fixes_all_vertices,
    ridge_cycles,
)
from cell24.groups import abelianization, character_value
from cell24.pairing import apply_word, format_word, orientation_character, parse_word


def test_green_row_1011(m1011):
    cycles = ridge_cycles(m1011)
    target = {frozenset(("A", "H")), frozenset(("A'", "G'")), frozenset(("B", "G")), frozenset(("B'", "H'"))}
    hits = [c for c in cycles if {frozenset(s.label for s in r.sides) for r in c.ridges} == target]
    assert len(hits) == 1
    assert format_word(hits[0].word) == "h' b g' a"


def test_cycle_counts(m3, m1011, P):
    for d in (m3, m1011):
        cycles = ridge_cycles(d)
        assert len(cycles) == 24
        assert all(len(c) == 4 for c in cycles)
        covered = [r.index for c in cycles for r in c.ridges]
        assert sorted(covered) == list(range(96))


def test_relators_fix_every_vertex(m3, m1011, P):
    # brute force, independent of the check inside ridge_cycles
    for d in (m3, m1011):
        failures = 0
        for c in ridge_cycles(d, check_relators=False):
            for v in P.vertices:
                if apply_word(c.word, v.coords, d) != v.coords:
                    failures += 1
        assert failures == 0


def test_ridge_transport_closes(m1011, P):
    for c in ridge_cycles(m1011):
        steps = c.steps
        for s, nxt in zip(steps, steps[1:] + steps[:1]):
            images = {P.find_vertex(apply_word((s.letter,), P.vertices[v].coords, m1011))
                      for v in s.ridge.vertices}
            assert frozenset(images) == nxt.ridge.vertices


def test_edge_classes(m3, m1011):
    for d in (m3, m1011):
        classes = edge_cycles(d)
        assert len(classes) == 12
        assert all(len(c) == 8 for c in classes)


def test_handles(m3, m1011):
    for d in (m3, m1011):
        h = handle_counts(d)
        assert h.as_tuple() == (1, 12, 24, 12, 0)
        assert h.chi == 1 - 12 + 24 - 12 + 0 == 1


def test_fundamental_presentation(m1011):
    pres = fundamental_presentation(m1011)
    assert pres.generators == tuple("abcdefghijkl")
    assert len(pres.relators) == 24
    assert pres.labelled(pres.relators[0])  # labelled view works
    words = {format_word(pres.labelled(r)) for r in pres.relators}
    assert "h' b g' a" in words
    matrix = pres.exponent_matrix()
    assert len(matrix) == 24 and all(len(row) == 12 for row in matrix)
    abelianization(pres)


def test_orientation_kills_relators(m3, m1011):
    for d in (m3, m1011):
        chi = orientation_character(d)
        for c in ridge_cycles(d):
            s = 1
            for g, _ in c.word:
                s *= chi[g]
            assert s == 1
    assert is_orientable(m3)
    assert not is_orientable(m1011)


def test_order_independence(m3):
    # relabelling the pairings in the file does not change the cycle set
    lines = m3.serialize().splitlines()
    body = lines[1:]
    random.Random(7).shuffle(body)
    from cell24.pairing import parse_manifold
    shuffled = parse_manifold("\n".join(lines[:1] + body))
    key = lambda cs: [format_word(c.word) for c in cs]
    assert key(ridge_cycles(shuffled)) == key(ridge_cycles(m3))


def test_relator_check_helper(m3):
    assert relator_fixes_all_vertices(m3, ())
    assert not relator_fixes_all_vertices(m3, parse_word("a"))
