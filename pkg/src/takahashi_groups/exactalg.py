"""Exact integer linear algebra and Laurent polynomials.

Everything here works on Python ints, so there is no overflow to worry
about; homology orders of cyclic covers grow exponentially with the degree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import zip_longest
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "IntMatrix",
    "SmithForm",
    "AbelianGroup",
    "LaurentPoly",
    "smith_normal_form",
    "cokernel",
    "bareiss_determinant",
    "sylvester_matrix",
    "resultant",
    "cyclotomic_quotient",
]


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([[self[i, j] for i in range(self.rows)] for j in range(self.cols)],
                                   self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        a, b = self.to_rows(), other.to_rows()
        out = [[sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
               for i in range(self.rows)]
        return IntMatrix.from_rows(out, other.cols)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )


@dataclass(frozen=True)
class SmithForm:
    invariant_factors: tuple[int, ...]
    rows: int
    cols: int
    # U @ M @ V == diagonal, only filled in when transforms were requested
    U: IntMatrix | None = field(default=None, compare=False)
    V: IntMatrix | None = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def diagonal(self) -> IntMatrix:
        d = [[0] * self.cols for _ in range(self.rows)]
        for i, f in enumerate(self.invariant_factors):
            d[i][i] = f
        return IntMatrix.from_rows(d, self.cols)


def smith_normal_form(M: IntMatrix, transforms: bool = False) -> SmithForm:
    """Invariant factors of ``M``, pivoting on the least nonzero |entry|.

    With ``transforms=True`` the returned form also carries unimodular ``U``
    and ``V`` such that ``U @ M @ V`` is the Smith diagonal.  The plain path
    works on sparse rows and is much faster on the relation matrices built
    in this package.
    """
    if transforms:
        return _snf_dense(M)
    return SmithForm(tuple(_snf_sparse(M)), M.rows, M.cols)


def _snf_sparse(M: IntMatrix) -> list[int]:
    rows: list[dict[int, int]] = []
    for r in M.to_rows():
        d = {j: x for j, x in enumerate(r) if x}
        if d:
            rows.append(d)
    diag: list[int] = []
    while rows:
        # least |entry| pivot; a unit ends the search early
        best = None
        for ri, r in enumerate(rows):
            for c, x in r.items():
                ax = abs(x)
                if best is None or ax < best[0]:
                    best = (ax, ri, c)
                    if ax == 1:
                        break
            if best[0] == 1:
                break
        _, pr, pc = best
        prow = rows[pr]
        pv = prow[pc]
        clean = True
        # clear the pivot column with row operations
        for ri, r in enumerate(rows):
            if ri == pr:
                continue
            x = r.get(pc)
            if not x:
                continue
            f = x // pv
            if f:
                for c, y in prow.items():
                    v = r.get(c, 0) - f * y
                    if v:
                        r[c] = v
                    else:
                        r.pop(c, None)
            if pc in r:
                clean = False
        # clear the pivot row with column operations
        for c, y in list(prow.items()):
            if c == pc:
                continue
            f = y // pv
            if f:
                for r in rows:
                    x = r.get(pc)
                    if x:
                        v = r.get(c, 0) - f * x
                        if v:
                            r[c] = v
                        else:
                            r.pop(c, None)
            if c in prow:
                clean = False
        if not clean:
            rows = [r for r in rows if r]
            continue
        # pivot isolated; divisibility against the rest is fixed up afterwards
        del rows[pr]
        rows = [r for r in rows if r]
        for r in rows:
            r.pop(pc, None)
        diag.append(abs(pv))
    return _normalize_diagonal(diag)


def _normalize_diagonal(diag: Iterable[int]) -> list[int]:
    """Turn any nonzero diagonal into the divisibility chain it presents."""
    ds = [abs(d) for d in diag if d]
    changed = True
    while changed:
        changed = False
        ds.sort()
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                a, b = ds[i], ds[j]
                if b % a:
                    g = gcd(a, b)
                    ds[i], ds[j] = g, a // g * b
                    changed = True
    ds.sort()
    return ds


def _snf_dense(M: IntMatrix) -> SmithForm:
    m, n = M.rows, M.cols
    A = M.to_rows()
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_add(dst, src, f):  # row dst -= f * row src
        A[dst] = [a - f * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a - f * b for a, b in zip(U[dst], U[src])]

    def col_add(dst, src, f):  # col dst -= f * col src
        for r in A:
            r[dst] -= f * r[src]
        for r in V:
            r[dst] -= f * r[src]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        row_swap(t, i)
        col_swap(t, j)
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    row_add(i, t, A[i][t] // p)
            for j in range(t + 1, n):
                if A[t][j]:
                    col_add(j, t, A[t][j] // p)
            rest = [(abs(A[i][t]), i, "r") for i in range(t + 1, m) if A[i][t]]
            rest += [(abs(A[t][j]), j, "c") for j in range(t + 1, n) if A[t][j]]
            if rest:
                _, k, kind = min(rest)
                if kind == "r":
                    row_swap(t, k)
                else:
                    col_swap(t, k)
                continue
            # pivot must divide the remaining block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            row_add(t, bad[0], -1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    factors = tuple(A[i][i] for i in range(min(m, n)) if A[i][i])
    return SmithForm(factors, m, n, IntMatrix.from_rows(U, m), IntMatrix.from_rows(V, n))


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group ``Z^free_rank + Z/d1 + ... + Z/dk``."""

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        if any(d <= 1 for d in self.torsion):
            raise ValueError(f"torsion factors must exceed 1: {self.torsion}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")
        if self.free_rank < 0:
            raise ValueError("negative free rank")

    @classmethod
    def from_cyclic_orders(cls, orders: Iterable[int]) -> "AbelianGroup":
        """Direct sum of ``Z/d`` for each ``d`` (``Z/0 = Z``, ``Z/1 = 0``)."""
        orders = [abs(d) for d in orders]
        free = sum(1 for d in orders if d == 0)
        chain = _normalize_diagonal(d for d in orders if d)
        return cls(tuple(d for d in chain if d > 1), free)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self) -> str:
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> "AbelianGroup":
        text = text.strip()
        if text == "0":
            return cls()
        orders = []
        for part in text.split("+"):
            part = part.strip()
            if part == "Z":
                orders.append(0)
            elif part.startswith("Z^"):
                orders += [0] * int(part[2:])
            elif part.startswith("Z/"):
                orders.append(int(part[2:]))
            else:
                raise ValueError(f"cannot parse abelian group summand {part!r}")
        return cls.from_cyclic_orders(orders)


def cokernel(M: IntMatrix) -> AbelianGroup:
    """Abelian group presented by ``M`` (rows are relations on the columns)."""
    snf = smith_normal_form(M)
    return AbelianGroup(tuple(d for d in snf.invariant_factors if d > 1), M.cols - snf.rank)


def bareiss_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination determinant."""
    A = [list(r) for r in rows]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


_TERM = re.compile(r"^([+-]?\d*)\*?(t(?:\^(-?\d+))?)?$")


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial ``sum coefficients[i] * t^(min_degree + i)``."""

    min_degree: int = 0
    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(int(x) for x in self.coefficients)
        lo = 0
        while lo < len(c) and c[lo] == 0:
            lo += 1
        hi = len(c)
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        object.__setattr__(self, "coefficients", c[lo:hi])
        object.__setattr__(self, "min_degree", self.min_degree + lo if hi > lo else 0)

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> "LaurentPoly":
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, tuple(terms.get(k, 0) for k in range(lo, hi + 1)))

    @classmethod
    def monomial(cls, coeff: int, degree: int) -> "LaurentPoly":
        return cls(degree, (coeff,))

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def max_degree(self) -> int:
        return self.min_degree + len(self.coefficients) - 1

    @property
    def span(self) -> int:
        return len(self.coefficients) - 1 if self.coefficients else -1

    def terms(self) -> dict[int, int]:
        return {self.min_degree + i: c for i, c in enumerate(self.coefficients) if c}

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_degree, other.min_degree)
        a = (0,) * (self.min_degree - lo) + self.coefficients
        b = (0,) * (other.min_degree - lo) + other.coefficients
        return LaurentPoly(lo, tuple(x + y for x, y in zip_longest(a, b, fillvalue=0)))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.min_degree, tuple(-c for c in self.coefficients))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(self.min_degree, tuple(c * other for c in self.coefficients))
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return LaurentPoly(self.min_degree + other.min_degree, tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        return LaurentPoly(self.min_degree + k, self.coefficients) if self.coefficients else self

    def evaluate(self, x: int) -> int | Fraction:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        if self.min_degree >= 0:
            return acc * x ** self.min_degree
        return Fraction(acc, x ** -self.min_degree) if x else _raise_pole()

    def normalize_shift(self) -> "LaurentPoly":
        """Multiply by a power of ``t`` so the lowest degree is 0."""
        return LaurentPoly(0, self.coefficients)

    def normalize_unit(self) -> "LaurentPoly":
        """Representative modulo units ``+-t^k``: lowest degree 0, leading coefficient > 0."""
        if self.is_zero():
            return self
        c = self.coefficients
        if c[-1] < 0:
            c = tuple(-x for x in c)
        return LaurentPoly(0, c)

    def unit_equal(self, other: "LaurentPoly") -> bool:
        return self.normalize_unit() == other.normalize_unit()

    def reciprocal(self) -> "LaurentPoly":
        """Substitute ``t -> 1/t``."""
        return LaurentPoly(-self.max_degree, tuple(reversed(self.coefficients))) if self.coefficients else self

    def is_palindromic_up_to_unit(self) -> bool:
        return self.unit_equal(self.reciprocal())

    def format(self, descending: bool = False) -> str:
        """Text form such as ``1 - 3*t + t^2`` (ascending) or ``t^2 - 3*t + 1``."""
        items = sorted(self.terms().items(), reverse=descending)
        if not items:
            return "0"
        out = []
        for idx, (k, c) in enumerate(items):
            mag = abs(c)
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if idx == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __str__(self) -> str:
        return self.format()

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        s = re.sub(r"(?<=[^\^])-", "+-", s)
        terms: dict[int, int] = {}
        for tok in filter(None, s.split("+")):
            m = _TERM.match(tok)
            if not m or (not m.group(1).lstrip("+-") and not m.group(2)):
                raise ValueError(f"cannot parse term {tok!r}")
            coeff_s, tpart, exp = m.groups()
            if coeff_s in ("", "+"):
                coeff = 1
            elif coeff_s == "-":
                coeff = -1
            else:
                coeff = int(coeff_s)
            deg = 0 if not tpart else (int(exp) if exp is not None else 1)
            terms[deg] = terms.get(deg, 0) + coeff
        return cls.from_dict(terms)


def _raise_pole():
    raise ZeroDivisionError("Laurent polynomial with negative degrees evaluated at 0")


def sylvester_matrix(f: Sequence[int], g: Sequence[int]) -> list[list[int]]:
    """Sylvester matrix of two coefficient lists given highest degree first."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(f) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(g) + [0] * (size - n - 1 - i))
    return rows


def resultant(f: LaurentPoly, g: LaurentPoly) -> int:
    """Resultant of two nonzero polynomials (``min_degree`` shifted to 0)."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined here")
    fc = list(reversed(f.normalize_shift().coefficients))
    gc = list(reversed(g.normalize_shift().coefficients))
    return bareiss_determinant(sylvester_matrix(fc, gc))


def cyclotomic_quotient(n: int) -> LaurentPoly:
    """``(t^n - 1) / (t - 1) = 1 + t + ... + t^(n-1)``."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return LaurentPoly(0, (1,) * n)
