"""Verification suites behind ``takahashi-groups verify``.

Each suite returns a :class:`SuiteResult` holding every failing comparison
plus a handful of passing ones, always with both computed values.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import asdict, dataclass, field
from math import gcd
from typing import Callable

from . import cyclicpres
from .exactalg import AbelianGroup, cokernel
from .fpgroup import ShiftMap, homology, is_cyclic_presentation
from .takahashi import (SurgeryData, corollary2_presentation, cover_surgery_data,
                        linking_matrix, surgered_presentation, surgery_homology_matrix,
                        theorem1_presentation)
from .twobridge import (INFINITE, ConwayEven, KnotFraction, alexander_polynomial,
                        conway_to_fraction, cover_homology_order, equivalent_fractions,
                        fraction_to_conway)
from .words import Word, cyclic_equal, format_word

__all__ = ["GRIDS", "Grid", "SuiteResult", "run_suites", "SUITES",
           "FIGURE_EIGHT_RELATOR", "KNOT_8_12_RELATOR", "relator_fixture"]

# Reference relators, written as offsets from the base index k (k -> 0, k+1 -> 1, k-1 -> -1).
FIGURE_EIGHT_RELATOR = ((1, -1), (0, 2), (-1, -1), (0, 1))
KNOT_8_12_RELATOR = (
    (1, -1), (0, 1), (1, -2), (2, 1), (1, -1), (0, 1), (1, -1), (0, 2), (-1, -1), (0, 1), (1, -1),
    (0, 2), (-1, -1), (0, 1), (-1, -1), (-2, 1), (-1, -2), (0, 1), (-1, -1), (0, 1), (1, -1),
    (0, 2), (-1, -1), (0, 1),
)


def relator_fixture(offsets, n: int) -> Word:
    """Instantiate an offset-form relator at ``k = 1`` over ``x1..xn``."""
    return Word((off % n, e) for off, e in offsets)


@dataclass(frozen=True)
class Grid:
    name: str
    conway_entries: tuple[int, ...]
    conway_lengths: tuple[int, ...]
    cover_degrees: tuple[int, ...]
    surgery_n: tuple[int, ...]
    surgery_m: tuple[int, ...]
    surgery_coeffs: tuple[int, ...]
    surgery_samples: int
    lens_samples: int
    lens_max_m: int
    lens_bound: int
    roundtrip_max_a: int
    seed: int = 20011


GRIDS = {
    "small": Grid("small", (2, -2, 4, -4), (2, 4), tuple(range(2, 9)), (2, 3, 4), (1, 2),
                  (-2, -1, 1, 2), 40, 50, 3, 9, 199),
    "full": Grid("full", (2, -2, 4, -4, 6, -6), (2, 4), tuple(range(2, 13)), (2, 3, 4, 5),
                 (1, 2, 3), (-3, -2, -1, 1, 2, 3), 80, 400, 4, 15, 499),
}


@dataclass
class SuiteResult:
    name: str
    description: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    samples: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.cases > 0 and not self.failures

    def compare(self, case, left_label: str, left, right_label: str, right, ok: bool | None = None):
        self.cases += 1
        ok = (left == right) if ok is None else ok
        entry = {"case": case, left_label: _jsonable(left), right_label: _jsonable(right), "ok": ok}
        if not ok:
            self.failures.append(entry)
        elif len(self.samples) < 5:
            self.samples.append(entry)

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        if not timing:
            d.pop("seconds")
        return d


def _jsonable(x):
    if isinstance(x, (AbelianGroup, KnotFraction, ConwayEven)):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x if isinstance(x, (int, str, bool, type(None), float)) else str(x)


def _conway_forms(grid: Grid):
    for length in grid.conway_lengths:
        for c in itertools.product(grid.conway_entries, repeat=length):
            yield ConwayEven(c)


def _order_of(g: AbelianGroup):
    o = g.order()
    return INFINITE if o is None else o


def suite_conway(grid: Grid) -> SuiteResult:
    res = SuiteResult("conway_fractions", "[2,2] -> 5/2 and [2,2,2,2] -> 29/12")
    for c, expect in (((2, 2), "5/2"), ((2, 2, 2, 2), "29/12")):
        res.compare(list(c), "computed", str(conway_to_fraction(ConwayEven(c))), "reference", expect)
    return res


def suite_figure_eight(grid: Grid) -> SuiteResult:
    res = SuiteResult("figure_eight_word", "m=1, q=-1, s=1 word vs reference relator")
    names = [f"x{i + 1}" for i in range(10)]
    for n in (5, 6, 7, 8):
        w = cyclicpres.theorem5_word([-1], [1], n)
        reference = relator_fixture(FIGURE_EIGHT_RELATOR, n)
        res.compare({"n": n}, "computed", format_word(w, names), "reference", format_word(reference, names),
                    ok=cyclic_equal(w, reference, allow_inverse=True))
    return res


def suite_8_12(grid: Grid) -> SuiteResult:
    res = SuiteResult("knot_8_12_word", "m=2, q=(-1,-1), s=(1,1) word vs reference relator")
    names = [f"x{i + 1}" for i in range(12)]
    for n in (5, 7, 9):
        w = cyclicpres.theorem5_word([-1, -1], [1, 1], n)
        reference = relator_fixture(KNOT_8_12_RELATOR, n)
        res.compare({"n": n}, "computed", format_word(w, names), "reference", format_word(reference, names),
                    ok=cyclic_equal(w, reference, allow_inverse=True))
    return res


def _random_pair(rng: random.Random, bound: int) -> tuple[int, int]:
    while True:
        p = rng.randint(0, bound)
        q = rng.randint(-bound, bound)
        if gcd(p, q) == 1:
            return p, q


def suite_lens_sum(grid: Grid) -> SuiteResult:
    res = SuiteResult("theorem4_lens_sum", "n=1: H1 is the sum of Z/p_j + Z/r_j")
    rng = random.Random(grid.seed)
    for _ in range(grid.lens_samples):
        m = rng.randint(1, grid.lens_max_m)
        pq = [_random_pair(rng, grid.lens_bound) for _ in range(m)]
        rs = [_random_pair(rng, grid.lens_bound) for _ in range(m)]
        d = SurgeryData(1, m, [[x[0] for x in pq]], [[x[1] for x in pq]],
                        [[x[0] for x in rs]], [[x[1] for x in rs]])
        expect = AbelianGroup.from_cyclic_orders([x[0] for x in pq] + [x[0] for x in rs])
        res.compare({"m": m, "pq": pq, "rs": rs}, "theorem1", homology(theorem1_presentation(d)),
                    "lens_sum", expect)
    return res


def _random_surgery(rng: random.Random, n: int, m: int, coeffs) -> SurgeryData:
    pairs = [(p, q) for p in coeffs if p > 0 for q in coeffs if gcd(p, q) == 1]
    pick = [[rng.choice(pairs) for _ in range(m)] for _ in range(2 * n)]
    pq, rs = pick[:n], pick[n:]
    return SurgeryData(n, m, [[x[0] for x in r] for r in pq], [[x[1] for x in r] for r in pq],
                       [[x[0] for x in r] for r in rs], [[x[1] for x in r] for r in rs])


def suite_triple_h1(grid: Grid) -> SuiteResult:
    res = SuiteResult("triple_h1", "theorem1 = surgered Wirtinger = linking-matrix cokernel")
    rng = random.Random(grid.seed + 1)
    pairs = [(p, q) for p in grid.surgery_coeffs if p > 0 for q in grid.surgery_coeffs if gcd(p, q) == 1]
    for n in grid.surgery_n:
        for m in grid.surgery_m:
            cases = [SurgeryData(n, m, [[pq[0]] * m] * n, [[pq[1]] * m] * n, [[rs[0]] * m] * n,
                                 [[rs[1]] * m] * n) for pq in pairs for rs in pairs]
            cases += [_random_surgery(rng, n, m, grid.surgery_coeffs) for _ in range(grid.surgery_samples)]
            for d in cases:
                h1 = homology(theorem1_presentation(d))
                h2 = homology(surgered_presentation(d))
                h3 = cokernel(surgery_homology_matrix(d))
                res.compare({"n": n, "m": m, "p": d.p, "q": d.q, "r": d.r, "s": d.s},
                            "theorem1", h1, "surgered_and_matrix", [h2, h3], ok=h1 == h2 == h3)
    return res


def suite_linking_symmetry(grid: Grid) -> SuiteResult:
    res = SuiteResult("linking_symmetry", "linking matrix from longitudes is symmetric, zero diagonal")
    for n in range(2, max(grid.surgery_n) + 1):
        for m in range(1, max(grid.surgery_m) + 2):
            L = linking_matrix(n, m)
            diag = [L[i, i] for i in range(L.rows)]
            res.compare({"n": n, "m": m}, "symmetric", L.is_symmetric(), "zero_diagonal",
                        not any(diag), ok=L.is_symmetric() and not any(diag))
    return res


def suite_cover_resultant(grid: Grid) -> SuiteResult:
    res = SuiteResult("cover_vs_resultant", "|H1| of the cyclic presentation vs |Res(D, (t^n-1)/(t-1))|")
    for c in _conway_forms(grid):
        f = conway_to_fraction(c)
        for n in grid.cover_degrees:
            h = homology(cyclicpres.cyclic_presentation_for_cover(c, n))
            o = cover_homology_order(f, n)
            ok = (h.free_rank > 0) if o == INFINITE else (h.order() == o)
            res.compare({"conway": str(c), "fraction": str(f), "n": n}, "presentation",
                        _order_of(h), "resultant", o, ok=ok)
    return res


def suite_equivalence(grid: Grid) -> SuiteResult:
    res = SuiteResult("presentation_equivalence", "cyclic presentation vs periodic surgery presentation")
    for c in _conway_forms(grid):
        for n in grid.cover_degrees:
            h1 = homology(cyclicpres.cyclic_presentation_for_cover(c, n))
            h2 = homology(corollary2_presentation(cover_surgery_data(c, n)))
            res.compare({"conway": str(c), "n": n}, "cyclic", h1, "periodic", h2)
    return res


def suite_alexander(grid: Grid) -> SuiteResult:
    res = SuiteResult("alexander_consistency", "word polynomial = +-t^k Alexander; D(-1), D(1), symmetry")
    for c in _conway_forms(grid):
        f = conway_to_fraction(c)
        delta = alexander_polynomial(f)
        wp = cyclicpres.cover_word_polynomial(c.q, c.s)
        ok = (wp.unit_equal(delta) and abs(delta.evaluate(-1)) == f.a and abs(delta.evaluate(1)) == 1
              and delta.is_palindromic_up_to_unit())
        res.compare({"conway": str(c), "fraction": str(f)}, "word_polynomial", str(wp.normalize_unit()),
                    "alexander", str(delta), ok=ok)
    return res


def suite_round_trip(grid: Grid) -> SuiteResult:
    res = SuiteResult("round_trip", "fraction -> even Conway -> fraction stays in the knot class")
    for a in range(3, grid.roundtrip_max_a + 1, 2):
        for b in range(1, a):
            if gcd(a, b) != 1:
                continue
            f = KnotFraction(a, b)
            back = conway_to_fraction(fraction_to_conway(f))
            res.compare(str(f), "input", str(f), "round_trip", str(back),
                        ok=equivalent_fractions(f, back, up_to_mirror=False))
    return res


def suite_sentinel(grid: Grid) -> SuiteResult:
    res = SuiteResult("n1_sentinel", "n=1 cover is S^3: trivial abelianization")
    for c in _conway_forms(grid):
        h = homology(cyclicpres.cyclic_presentation_for_cover(c, 1))
        res.compare(str(c), "homology", h, "expected", AbelianGroup())
    return res


def suite_cyclic_structure(grid: Grid) -> SuiteResult:
    res = SuiteResult("cyclic_structure", "relators are shifts of one word; shift equivariance")
    for c in _conway_forms(grid):
        for n in grid.cover_degrees:
            P = cyclicpres.cyclic_presentation_for_cover(c, n)
            st = cyclicpres.eliminate(c.q, c.s, n)
            sigma = ShiftMap.cyclic(n)
            equivariant = all(sigma(st.relator(k)) == st.relator(k + 1) for k in range(n))
            res.compare({"conway": str(c), "n": n}, "is_cyclic", is_cyclic_presentation(P, sigma),
                        "shift_equivariant", equivariant, ok=is_cyclic_presentation(P, sigma) and equivariant)
    return res


SUITES: dict[str, Callable[[Grid], SuiteResult]] = {
    "conway_fractions": suite_conway,
    "figure_eight_word": suite_figure_eight,
    "knot_8_12_word": suite_8_12,
    "theorem4_lens_sum": suite_lens_sum,
    "triple_h1": suite_triple_h1,
    "linking_symmetry": suite_linking_symmetry,
    "cover_vs_resultant": suite_cover_resultant,
    "presentation_equivalence": suite_equivalence,
    "alexander_consistency": suite_alexander,
    "round_trip": suite_round_trip,
    "n1_sentinel": suite_sentinel,
    "cyclic_structure": suite_cyclic_structure,
}


def run_suites(grid: Grid, names=None) -> list[SuiteResult]:
    out = []
    for name in names or SUITES:
        t0 = time.perf_counter()
        r = SUITES[name](grid)
        r.seconds = round(time.perf_counter() - t0, 3)
        out.append(r)
    return out
