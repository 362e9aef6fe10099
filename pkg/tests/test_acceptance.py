"""Acceptance criteria, one test per criterion.

Each test prints a single ``CRITERION <k> PASS|FAIL`` line (visible in the
pytest log) and asserts its own runtime budget.  Run directly with
``python tests/test_acceptance.py``.
"""

import itertools
import random
import re
import sys
import time
from math import gcd
from pathlib import Path

import pytest

from takahashi_groups.cyclicpres import (cover_word_polynomial, cyclic_presentation_for_cover,
                                         theorem5_word)
from takahashi_groups.exactalg import AbelianGroup, cokernel
from takahashi_groups.fpgroup import homology
from takahashi_groups.takahashi import (SurgeryData, corollary2_presentation,
                                        cover_surgery_data, surgered_presentation,
                                        surgery_homology_matrix, theorem1_presentation)
from takahashi_groups.twobridge import (INFINITE, ConwayEven, KnotFraction,
                                        alexander_polynomial, conway_to_fraction,
                                        cover_homology_order, equivalent_fractions,
                                        fraction_to_conway)
from takahashi_groups.words import Word, cyclic_equal, parse_word

FIXTURES = Path(__file__).parent / "fixtures"
CONWAY_GRID = [ConwayEven(c) for length in (2, 4)
               for c in itertools.product((2, -2, 4, -4), repeat=length)]
COVER_DEGREES = range(2, 9)


def report(capsys, number, ok, seconds, budget, detail=""):
    line = f"CRITERION {number:2d} {'PASS' if ok else 'FAIL'} ({seconds:.2f}s, budget {budget}s) {detail}"
    with capsys.disabled():
        print("\n" + line.rstrip(), flush=True)


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def parse_offset_relator(text, n):
    """Read ``+1^-1 0 -2 ...`` (offsets from the base index) into a word over x1..xn."""
    syllables = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        for tok in line.split():
            m = re.fullmatch(r"([+-]?\d+)(?:\^(-?\d+))?", tok)
            if not m:
                raise ValueError(f"bad token {tok!r}")
            syllables.append((int(m.group(1)) % n, int(m.group(2) or 1)))
    return Word(syllables)


def elementary_divisor_group(orders):
    """Direct sum of cyclic groups, via prime-power decomposition (0 means Z)."""
    free = sum(1 for o in orders if o == 0)
    powers = {}
    for o in orders:
        x, p = o, 2
        while x > 1 and p * p <= x:
            while x % p == 0:
                powers.setdefault(p, []).append(0)
                k = 1
                while x % p == 0:
                    x //= p
                    k *= p
                powers[p][-1] = k
            p += 1
        if x > 1:
            powers.setdefault(x, []).append(x)
    # invariant factor t-th from the top is the product of t-th largest powers
    columns = [sorted(v, reverse=True) for v in powers.values()]
    depth = max((len(c) for c in columns), default=0)
    factors = []
    for t in range(depth):
        prod = 1
        for c in columns:
            if t < len(c):
                prod *= c[t]
        factors.append(prod)
    return AbelianGroup(tuple(reversed(factors)), free)


def _run(capsys, number, budget, body):
    with Timer() as t:
        ok, detail = body()
    report(capsys, number, ok, t.seconds, budget, detail)
    assert ok, detail
    assert t.seconds < budget, f"criterion {number} took {t.seconds:.2f}s"


def test_criterion_01_conway_evaluation(capsys):
    def body():
        got = (str(conway_to_fraction(ConwayEven((2, 2)))),
               str(conway_to_fraction(ConwayEven((2, 2, 2, 2)))))
        return got == ("5/2", "29/12"), f"got {got}"
    _run(capsys, 1, 1, body)


def test_criterion_02_figure_eight_word(capsys):
    def body():
        names = [f"x{i}" for i in range(1, 6)]
        w = theorem5_word([-1], [1], 5)
        ok = cyclic_equal(w, parse_word("x2^-1 x1^2 x5^-1 x1", names), allow_inverse=True)
        return ok, ""
    _run(capsys, 2, 1, body)


def test_criterion_03_knot_8_12_word(capsys):
    def body():
        reference = parse_offset_relator((FIXTURES / "knot_8_12_relator.txt").read_text(), 7)
        w = theorem5_word([-1, -1], [1, 1], 7)
        return cyclic_equal(w, reference, allow_inverse=True), f"{reference.letter_length()} letters"
    _run(capsys, 3, 1, body)


def test_criterion_04_lens_space_sum(capsys):
    def body():
        rng = random.Random(4)
        bad = []
        for _ in range(50):
            m = rng.randint(1, 3)
            cols = []
            for _ in range(2 * m):
                p = rng.randint(0, 9)
                q = rng.choice([d for d in range(-9, 10) if gcd(p, d) == 1])
                cols.append((p, q))
            pq, rs = cols[:m], cols[m:]
            d = SurgeryData(1, m, [[a for a, _ in pq]], [[b for _, b in pq]],
                            [[a for a, _ in rs]], [[b for _, b in rs]])
            got = homology(theorem1_presentation(d))
            expect = elementary_divisor_group([a for a, _ in cols])
            if got != expect:
                bad.append((cols, str(got), str(expect)))
        return not bad, f"50 sets, {len(bad)} mismatches {bad[:2]}"
    _run(capsys, 4, 5, body)


def _valid_pairs(coeffs):
    out = set()
    for a, b in itertools.product(coeffs, repeat=2):
        if gcd(a, b) == 1:
            out.add((a, b) if a > 0 else (-a, -b))
    return sorted(out)


def test_criterion_05_triple_h1(capsys):
    def body():
        pairs = _valid_pairs((-2, -1, 1, 2))
        cases = []
        for n, m in itertools.product((2, 3, 4), (1, 2)):
            for pq, rs in itertools.product(pairs, repeat=2):
                cases.append(SurgeryData(n, m, [[pq[0]] * m] * n, [[pq[1]] * m] * n,
                                         [[rs[0]] * m] * n, [[rs[1]] * m] * n))
        rng = random.Random(5)
        for _ in range(60):
            n, m = rng.choice((2, 3, 4)), rng.choice((1, 2))
            grid = [[[rng.choice(pairs) for _ in range(m)] for _ in range(n)] for _ in range(2)]
            cases.append(SurgeryData(n, m,
                                     [[c[0] for c in row] for row in grid[0]],
                                     [[c[1] for c in row] for row in grid[0]],
                                     [[c[0] for c in row] for row in grid[1]],
                                     [[c[1] for c in row] for row in grid[1]]))
        bad = []
        for d in cases:
            a = homology(theorem1_presentation(d))
            b = homology(surgered_presentation(d))
            c = cokernel(surgery_homology_matrix(d))
            if not a == b == c:
                bad.append((d, str(a), str(b), str(c)))
        return not bad, f"{len(cases)} surgery data, {len(bad)} mismatches"
    _run(capsys, 5, 60, body)


def test_criterion_06_cover_vs_resultant(capsys):
    def body():
        bad = []
        for c in CONWAY_GRID:
            f = conway_to_fraction(c)
            for n in COVER_DEGREES:
                h = homology(cyclic_presentation_for_cover(c, n))
                order = cover_homology_order(f, n)
                ok = h.free_rank > 0 if order == INFINITE else (h.order() == order)
                if not ok:
                    bad.append((str(c), n, str(h), order))
        fig8 = conway_to_fraction(ConwayEven((2, 2)))
        trefoil = KnotFraction(3, 2)
        anchors = (cover_homology_order(fig8, 2) == 5 and cover_homology_order(fig8, 3) == 16
                   and cover_homology_order(trefoil, 6) == INFINITE
                   and homology(cyclic_presentation_for_cover(ConwayEven((2, -2)), 6)).free_rank == 2)
        return not bad and anchors, f"{len(CONWAY_GRID) * len(COVER_DEGREES)} cases, {len(bad)} mismatches, anchors {anchors}"
    _run(capsys, 6, 60, body)


def test_criterion_07_presentation_equivalence(capsys):
    def body():
        bad = []
        for c in CONWAY_GRID:
            for n in COVER_DEGREES:
                a = homology(cyclic_presentation_for_cover(c, n))
                b = homology(corollary2_presentation(cover_surgery_data(c, n)))
                if a != b:
                    bad.append((str(c), n, str(a), str(b)))
        return not bad, f"{len(CONWAY_GRID) * len(COVER_DEGREES)} cases, {len(bad)} mismatches"
    _run(capsys, 7, 60, body)


def test_criterion_08_alexander_consistency(capsys):
    def body():
        bad = []
        for c in CONWAY_GRID:
            f = conway_to_fraction(c)
            delta = alexander_polynomial(f)
            ok = (cover_word_polynomial(c.q, c.s).unit_equal(delta)
                  and abs(delta.evaluate(-1)) == f.a
                  and abs(delta.evaluate(1)) == 1
                  and delta.is_palindromic_up_to_unit())
            if not ok:
                bad.append(str(c))
        return not bad, f"{len(CONWAY_GRID)} forms, {len(bad)} mismatches"
    _run(capsys, 8, 10, body)


def test_criterion_09_round_trip(capsys):
    def body():
        count, bad = 0, []
        for a in range(3, 200, 2):
            for b in range(-a + 1, a):
                if gcd(a, b) != 1:
                    continue
                f = KnotFraction(a, b)
                back = conway_to_fraction(fraction_to_conway(f))
                count += 1
                if not equivalent_fractions(f, back, up_to_mirror=False):
                    bad.append((str(f), str(back)))
        return not bad, f"{count} fractions, {len(bad)} mismatches"
    _run(capsys, 9, 10, body)


def test_criterion_10_n1_sentinel(capsys):
    def body():
        bad = [str(c) for c in CONWAY_GRID
               if homology(cyclic_presentation_for_cover(c, 1)) != AbelianGroup(())]
        return not bad, f"{len(CONWAY_GRID)} forms, nontrivial: {bad[:3]}"
    _run(capsys, 10, 1, body)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
