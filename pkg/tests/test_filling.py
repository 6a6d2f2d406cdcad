import pytest

from cell24 import load_filling
from cell24.cycles import HandleCounts
from cell24.errors import FibreError, ParseError
from cell24.filling import FibreChoice, FilledManifold, FillingSpec, certify, fill, parse_filling, validate_fibre
from cell24.cusp import vertex_classes
from cell24.groups import AbelianInvariants, Presentation
from cell24.pairing import invert_word, parse_word

FIBRES_1011 = "fill 0 c\nfill 1 a\nfill 2 k\nfill 3 j\nfill 4 e' g\n"


@pytest.fixture(scope="module")
def spec(m1011):
    return load_filling("fill1011.rt", m1011)


@pytest.fixture(scope="module")
def filled(m1011, spec):
    return fill(m1011, spec)


@pytest.fixture(scope="module")
def cert(m1011, filled):
    return certify(m1011, filled)


def test_parse(m1011, spec):
    assert spec == parse_filling(FIBRES_1011, m1011)
    assert spec.fibres[4] == FibreChoice(4, (("e", -1), ("g", 1)))
    assert spec.fibres[0].word == (("c", 1),)
    assert parse_filling(spec.serialize(), m1011) == spec


@pytest.mark.parametrize("text,message", [
    ("fill 9 a\n", "class index out of range"),
    ("fill 0 c\nfill 1 a\nfill 2 k\nfill 3 j\n", "missing class"),
    ("fill 0 z\nfill 1 a\nfill 2 k\nfill 3 j\nfill 4 e\n", "unknown generator letter"),
    ("fill 0 c\nfill 0 a\n", "filled twice"),
    ("fill x c\n", "not an integer"),
])
def test_parse_errors(m1011, text, message):
    with pytest.raises(ParseError, match=message):
        parse_filling(text, m1011, source="f.rt")


def test_parse_error_line(m1011):
    with pytest.raises(ParseError, match="f.rt:line 2"):
        parse_filling("fill 0 c\nfill 7 a\n", m1011, source="f.rt")


def test_validate_examples(m1011):
    classes = vertex_classes(m1011)
    good = validate_fibre(m1011, classes[1], parse_word("a"))
    assert good.valid and good.translation == (-2, 0, 0)
    screw = validate_fibre(m1011, classes[0], parse_word("a' g"))
    assert "linear part is identity" in screw.failures
    empty = validate_fibre(m1011, classes[0], ())
    assert empty.failures == ("primitive in lattice",)
    double = validate_fibre(m1011, classes[0], parse_word("c c"))
    assert double.failures == ("primitive in lattice",)
    moved = validate_fibre(m1011, classes[0], parse_word("a b"))
    assert moved.failures == ("fixes class vertex",)


def test_normality_failure(m3, cusps3):
    # class {±e1}: the square of the screw a' h is (4,0,0); adding c gives (4,-2,0),
    # which the screw's linear part diag(1,-1,-1) sends to (4,2,0)
    rep = cusps3[0]
    word = parse_word("a' h a' h c")
    cert = validate_fibre(m3, rep.vertex_class, word, rep.group)
    assert cert.translation == (4, -2, 0)
    assert cert.failures == ("normal",)


def test_all_fibres_valid(filled):
    assert all(f.valid for f in filled.fibres)


def test_fill_counts(filled):
    assert len(filled.presentation.generators) == 12
    assert len(filled.presentation.relators) == 29
    assert filled.handles == HandleCounts(1, 12, 29, 22, 5)
    h = filled.handles
    assert filled.chi == h.h0 - h.h1 + h.h2 - h.h3 + h.h4 == 1
    assert filled.chi == filled.open_handles.chi


def test_fibre_relators_reduced(filled):
    for r in filled.presentation.relators[24:]:
        assert r
        assert all(a != -b for a, b in zip(r, r[1:]))


def test_certificate(cert):
    assert cert.group_order.complete and cert.group_order.order == 2
    assert cert.h1 == AbelianInvariants(0, (2,))
    assert cert.chi == 1
    assert len(cert.covers) == 1
    assert cert.cover_group_order.order == 1
    assert cert.cover_chi == 2
    assert cert.link_components == 5
    assert cert.group_order.order == 2 * cert.cover_group_order.order


def test_inverse_fibres_same_certificate(m1011, spec, cert):
    inverted = FillingSpec(tuple(FibreChoice(f.class_ordinal, invert_word(f.word)) for f in spec.fibres))
    other = certify(m1011, fill(m1011, inverted))
    assert other.to_dict() == cert.to_dict()


def test_strict_mode(m1011):
    text = FIBRES_1011.replace("fill 0 c", "fill 0 c c")
    spec = parse_filling(text, m1011)
    with pytest.raises(FibreError, match="primitive in lattice") as info:
        fill(m1011, spec)
    assert info.value.failures
    relaxed = fill(m1011, spec, strict=False)
    assert not relaxed.fibres[0].valid


def test_screw_fibre_rejected(m1011):
    spec = parse_filling(FIBRES_1011.replace("fill 0 c", "fill 0 a' g"), m1011)
    with pytest.raises(FibreError, match="linear part is identity"):
        fill(m1011, spec)


def test_no_index_two_character(m1011):
    fake = FilledManifold("x", Presentation.parse("a | a^3"), HandleCounts(1, 1, 1, 0, 0), (),
                          HandleCounts(1, 1, 1, 0, 0))
    cert = certify(m1011, fake)
    assert cert.group_order.order == 3
    assert cert.covers == ()
    assert cert.link_components is None
    assert "no index-2 character" in cert.notes


def test_inconclusive_is_reported(m1011, filled):
    cert = certify(m1011, filled, cap=1)
    assert cert.group_order.status == "inconclusive"
