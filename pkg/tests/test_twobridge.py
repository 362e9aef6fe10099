from math import gcd

import pytest

from takahashi_groups.exactalg import LaurentPoly
from takahashi_groups.twobridge import (INFINITE, ConwayEven, InternalCheckError, KnotFraction,
                                        NotAKnotError, TwoBridgeError, UnknotError,
                                        alexander_polynomial, canonical_fraction,
                                        conway_to_fraction, cover_homology_order,
                                        equivalent_fractions, fox_derivative, fraction_to_conway,
                                        parse_conway, parse_fraction, schubert_presentation,
                                        schubert_signs)
from takahashi_groups.words import Word

P = LaurentPoly.parse
F = KnotFraction


@pytest.mark.parametrize("conway, frac", [("[2,2]", (5, 2)), ("[2,2,2,2]", (29, 12)), ("[2,-2]", (3, 2))])
def test_conway_to_fraction(conway, frac):
    assert conway_to_fraction(parse_conway(conway)) == F(*frac)


def test_conway_validation():
    with pytest.raises(TwoBridgeError):
        parse_conway("[2,3]")
    with pytest.raises(TwoBridgeError):
        parse_conway("[2,2,2]")
    with pytest.raises(TwoBridgeError):
        parse_conway("[2,0]")
    with pytest.raises(TwoBridgeError):
        parse_conway("2,2")
    assert ConwayEven.from_qs([-1, -1], [1, 1]) == parse_conway("[2,2,2,2]")
    c = parse_conway("[2, -4, 6, 2]")
    assert c.q == (-1, -3) and c.s == (-2, 1)


def test_fraction_errors_are_distinct():
    with pytest.raises(NotAKnotError):
        F(4, 1)
    with pytest.raises(UnknotError):
        F(1, 0)
    with pytest.raises(TwoBridgeError):
        F(9, 3)
    assert not issubclass(NotAKnotError, UnknotError)


@pytest.mark.parametrize("frac, conway", [((5, 2), (2, 2)), ((3, 2), (2, -2)), ((29, 12), (2, 2, 2, 2))])
def test_fraction_to_conway(frac, conway):
    assert fraction_to_conway(F(*frac)).entries == conway


def test_fraction_to_conway_long_expansion():
    c = fraction_to_conway(F(27, 1))
    assert len(c.entries) == 26
    assert equivalent_fractions(conway_to_fraction(c), F(27, 1), up_to_mirror=False)


def test_equivalent_fractions():
    assert equivalent_fractions(F(3, 1), F(3, 2))
    assert not equivalent_fractions(F(3, 1), F(3, 2), up_to_mirror=False)
    assert equivalent_fractions(F(5, 2), F(5, 3), up_to_mirror=False)
    assert not equivalent_fractions(F(5, 2), F(7, 2))


def test_canonical_fraction():
    assert canonical_fraction(F(5, 3)) == F(5, 2)
    assert canonical_fraction(F(7, -1)) == F(7, 6)


def test_schubert():
    trefoil = schubert_presentation(F(3, 1))
    assert trefoil.relators[0] == Word([(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)])
    assert schubert_signs(F(3, 1)) == (1, 1)
    assert schubert_signs(F(5, 2)) == (1, -1, -1, 1)
    with pytest.raises(TwoBridgeError):
        schubert_presentation(F(5, 7))
    for a in range(3, 40, 2):
        for b in range(1, a):
            if gcd(a, b) == 1:
                rel = schubert_presentation(F(a, b)).relators[0]
                eu = sum(e for g, e in rel if g == 0)
                ev = sum(e for g, e in rel if g == 1)
                assert eu + ev == 0 and eu == 1


def test_fox_derivative():
    assert fox_derivative(Word.gen(0), 0) == P("1")
    assert fox_derivative(Word.gen(0, -1), 0) == P("-t^-1")
    trefoil = schubert_presentation(F(3, 1)).relators[0]
    assert fox_derivative(trefoil, 0) == P("1 - t + t^2")
    fig8 = schubert_presentation(F(5, 2)).relators[0]
    assert fox_derivative(fig8, 0).normalize_unit() == P("t^2 - 3*t + 1")


def test_alexander_examples():
    assert alexander_polynomial(F(5, 2)) == P("t^2 - 3*t + 1")
    assert alexander_polynomial(F(3, 2)) == P("t^2 - t + 1")
    d = alexander_polynomial(F(29, 12))
    assert d.span == 4 and abs(d.evaluate(-1)) == 29 and d.is_palindromic_up_to_unit()


def test_alexander_properties_all_small_fractions():
    for a in range(3, 120, 2):
        for b in range(1, a):
            if gcd(a, b) != 1:
                continue
            f = F(a, b)
            d = alexander_polynomial(f)
            assert abs(d.evaluate(-1)) == a
            assert abs(d.evaluate(1)) == 1
            assert d.is_palindromic_up_to_unit()
            assert d == alexander_polynomial(F(a, pow(b, -1, a)))
            assert d == alexander_polynomial(F(a, a - b))
            assert cover_homology_order(f, 2) == a


def test_postcondition_failure_is_internal(monkeypatch):
    from takahashi_groups import twobridge
    twobridge._alexander.cache_clear()
    monkeypatch.setattr(twobridge, "fox_derivative", lambda w, g: P("2 - t"))
    with pytest.raises(InternalCheckError):
        twobridge.alexander_polynomial(F(11, 3))
    twobridge._alexander.cache_clear()


def test_cover_homology_order():
    assert cover_homology_order(F(5, 2), 2) == 5
    assert cover_homology_order(F(5, 2), 3) == 16
    assert cover_homology_order(F(3, 2), 6) == INFINITE
    with pytest.raises(ValueError):
        cover_homology_order(F(5, 2), 1)


def test_parse_fraction():
    assert parse_fraction("5/2") == F(5, 2)
    assert parse_fraction("-5/2") == F(5, -2)
    with pytest.raises(TwoBridgeError):
        parse_fraction("5:2")
