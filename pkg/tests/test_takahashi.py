import itertools
import random

import pytest

from takahashi_groups.exactalg import AbelianGroup, IntMatrix, cokernel
from takahashi_groups.fpgroup import ShiftMap, abelianization_matrix, apply_shift, homology
from takahashi_groups.takahashi import (PeriodicSurgeryData, SurgeryData, SurgeryDataError,
                                        bezout_change, corollary2_presentation,
                                        cover_surgery_data, format_surgery_data, linking_matrix,
                                        longitude_words, parse_surgery_data,
                                        surgered_presentation, surgery_homology_matrix,
                                        theorem1_presentation, wirtinger_presentation)
from takahashi_groups.twobridge import parse_conway
from takahashi_groups.words import Word, exponent_sums, format_word, parse_word


def single(p, q, r, s):
    return SurgeryData(1, 1, [[p]], [[q]], [[r]], [[s]])


def test_theorem1_n1_reduces_to_powers():
    P = theorem1_presentation(single(5, 2, 3, 1))
    assert P.generators == ("a[1][1]", "a[2][1]")
    # each relator is the power of one generator (sign depends on orientation)
    powers = sorted((w.syllables[0][0], abs(w.syllables[0][1])) for w in P.relators)
    assert all(len(w.syllables) == 1 for w in P.relators)
    assert powers == [(0, 5), (1, 3)]
    assert homology(P) == AbelianGroup.from_cyclic_orders([5, 3])


def test_theorem1_n1_m2():
    d = SurgeryData(1, 2, [[5, 7]], [[2, 3]], [[3, 4]], [[1, 1]])
    P = theorem1_presentation(d)
    assert all(len(w.syllables) == 1 for w in P.relators)
    assert sorted(abs(w.syllables[0][1]) for w in P.relators) == [3, 4, 5, 7]
    assert homology(P) == AbelianGroup.from_cyclic_orders([5, 7, 3, 4])
    assert str(homology(P)) == "Z/420"


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (2, 3), (4, 2)])
def test_theorem1_is_balanced(n, m):
    d = PeriodicSurgeryData(n, m, (1,) * m, (2,) * m, (3,) * m, (1,) * m).periodize()
    P = theorem1_presentation(d)
    assert len(P.generators) == len(P.relators) == 2 * n * m


def test_validation_names_position():
    with pytest.raises(SurgeryDataError) as info:
        SurgeryData(2, 2, [[1, 1], [1, 4]], [[0, 0], [0, 2]], [[1, 1], [1, 1]], [[0, 0], [0, 0]])
    assert info.value.where == (2, 2)
    assert "(2, 2)" in str(info.value)
    with pytest.raises(SurgeryDataError) as info:
        single(-3, 1, 1, 0)
    assert info.value.where == (1, 1)


def test_corollary2_matches_periodized_theorem1():
    for n in (1, 2, 3):
        for m in (1, 2):
            d = PeriodicSurgeryData(n, m, (5, 3)[:m], (2, -1)[:m], (1, 2)[:m], (-1, 1)[:m])
            assert corollary2_presentation(d).relators == theorem1_presentation(d.periodize()).relators
    d = PeriodicSurgeryData(2, 1, (1,), (-1,), (1,), (1,))
    P = corollary2_presentation(d)
    assert len(P.generators) == len(P.relators) == 4
    assert homology(P) == AbelianGroup((5,))
    one = PeriodicSurgeryData(1, 1, (5,), (2,), (3,), (1,))
    assert corollary2_presentation(one).relators == theorem1_presentation(single(5, 2, 3, 1)).relators


def test_wirtinger():
    P = wirtinger_presentation(1, 1)
    assert len(P.generators) == len(P.relators) == 2
    assert homology(P) == AbelianGroup((), 2)
    for n, m in itertools.product(range(1, 4), range(1, 4)):
        P = wirtinger_presentation(n, m)
        assert all(not any(row) for row in abelianization_matrix(P).to_rows())
        assert all(not any(exponent_sums(r, len(P.generators))) for r in P.relators)


def test_wirtinger_n2_m1_pattern():
    P = wirtinger_presentation(2, 1)
    assert P.generators == ("x[1][1]", "y[1][1]", "x[2][1]", "y[2][1]")
    got = [format_word(r, P.generators) for r in P.relators]
    assert got == [
        "y[1][1] y[2][1]^-1 x[1][1] y[2][1] y[1][1]^-1 x[1][1]^-1",
        "x[1][1] x[2][1]^-1 y[1][1] x[2][1] x[1][1]^-1 y[1][1]^-1",
        "y[2][1] y[1][1]^-1 x[2][1] y[1][1] y[2][1]^-1 x[2][1]^-1",
        "x[2][1] x[1][1]^-1 y[2][1] x[1][1] x[2][1]^-1 y[2][1]^-1",
    ]


def test_longitudes():
    L = longitude_words(2, 1)
    names = wirtinger_presentation(2, 1).generators
    assert L[1, 1][0] == parse_word("y[2][1] y[1][1]^-1", names)
    assert longitude_words(1, 1)[1, 1] == (Word(), Word())
    for n, m in itertools.product(range(1, 4), range(1, 4)):
        for h, l in longitude_words(n, m).values():
            assert sum(e for _, e in h) == 0 and sum(e for _, e in l) == 0


def test_surgered_examples():
    assert homology(surgered_presentation(single(5, 2, 3, 1))) == AbelianGroup.from_cyclic_orders([5, 3])
    for n, m in ((1, 1), (2, 2), (3, 1)):
        d = PeriodicSurgeryData(n, m, (1,) * m, (0,) * m, (1,) * m, (0,) * m).periodize()
        assert homology(surgered_presentation(d)) == AbelianGroup(())
        assert surgery_homology_matrix(d) == IntMatrix.identity(2 * n * m)


def test_bezout_change():
    assert bezout_change(5, 2) == (-2, -1)
    assert bezout_change(1, 0) == (0, -1)
    assert bezout_change(0, 1) == (1, 0)
    with pytest.raises(ValueError):
        bezout_change(4, 2)
    for p in range(0, 12):
        for q in range(-12, 13):
            try:
                u, v = bezout_change(p, q)
            except ValueError:
                continue
            assert q * u - p * v == 1


def test_linking_matrix():
    for n, m in itertools.product(range(1, 5), range(1, 4)):
        L = linking_matrix(n, m)
        assert L.rows == L.cols == 2 * n * m
        assert L.is_symmetric()
        assert all(L[i, i] == 0 for i in range(L.rows))
    assert linking_matrix(1, 1) == IntMatrix.zeros(2, 2)


def test_surgery_homology_matrix_example():
    M = surgery_homology_matrix(single(5, 2, 3, 1))
    assert M == IntMatrix.from_rows([[5, 0], [0, 3]])
    assert cokernel(M) == AbelianGroup.from_cyclic_orders([5, 3])


def test_triple_h1_random():
    rng = random.Random(7)
    coeffs = [-2, -1, 1, 2]
    for _ in range(25):
        n, m = rng.choice([2, 3]), rng.choice([1, 2])
        grids = [[[0] * m for _ in range(n)] for _ in range(4)]
        for k in range(n):
            for j in range(m):
                for a, b in ((0, 1), (2, 3)):
                    grids[a][k][j] = rng.choice([1, 2])
                    grids[b][k][j] = rng.choice([c for c in coeffs if abs(c) % grids[a][k][j] or grids[a][k][j] == 1])
        d = SurgeryData(n, m, *grids)
        h = homology(theorem1_presentation(d))
        assert h == homology(surgered_presentation(d)) == cokernel(surgery_homology_matrix(d))


def test_cover_surgery_data():
    assert cover_surgery_data(parse_conway("[2,2]"), 5) == PeriodicSurgeryData(5, 1, (1,), (-1,), (1,), (1,))
    d = cover_surgery_data(parse_conway("[2,2,2,2]"), 3)
    assert d.m == 2 and d.q == (-1, -1) and d.s == (1, 1)
    d = cover_surgery_data(parse_conway("[2,-2]"), 2)
    assert d.q == (-1,) and d.s == (-1,)


def test_takahashi_shift_equivariance():
    for conway, n in (("[2,-4]", 2), ("[2,-4,4,2]", 3), ("[4,2]", 4)):
        c = parse_conway(conway)
        P = corollary2_presentation(cover_surgery_data(c, n))
        shifted = apply_shift(P, ShiftMap.takahashi(n, c.m))
        assert shifted.same_relators(P)
        assert homology(shifted) == homology(P)


def test_surgery_file_round_trip():
    d = SurgeryData(2, 2, [[5, 7], [1, 0]], [[2, 3], [4, 1]], [[3, 4], [1, 1]], [[1, 1], [-2, 0]])
    text = format_surgery_data(d)
    assert parse_surgery_data(text) == d
    assert format_surgery_data(parse_surgery_data(text)) == text
    with pytest.raises(SurgeryDataError):
        parse_surgery_data("n: 1\nm: 1\npq: (4,2)\nrs: (1,1)\n")
    with pytest.raises(SurgeryDataError):
        parse_surgery_data("n: 1\nm: 1\npq: (4,1)\n")
