"""Presentations of generalized Takahashi manifolds from surgery data.

Index conventions used throughout:

* the ``a`` generators are ``a[i][j]`` with ``i`` in ``1..2n`` (taken mod
  ``2n``) and ``j`` in ``1..m``; they are stored ``i``-major, which is also
  the order of the link components ``c_{1,1}, ..., c_{1,m}, c_{2,1}, ...``;
* the coefficient index ``k`` lives in ``Z/n`` represented as ``1..n``;
* ``x[k][j]`` is the meridian of ``c_{2k-1,j}`` and ``y[k][j]`` the meridian
  of ``c_{2k,j}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .exactalg import IntMatrix
from .fpgroup import Presentation
from .twobridge import ConwayEven
from .words import Word, exponent_sums

__all__ = [
    "SurgeryDataError",
    "SurgeryData",
    "PeriodicSurgeryData",
    "theorem1_presentation",
    "corollary2_presentation",
    "wirtinger_presentation",
    "longitude_words",
    "surgered_presentation",
    "bezout_change",
    "linking_matrix",
    "surgery_homology_matrix",
    "cover_surgery_data",
    "parse_surgery_data",
    "format_surgery_data",
]


class SurgeryDataError(ValueError):
    """Invalid surgery coefficients; ``where`` is the 1-based ``(k, j)``."""

    def __init__(self, message: str, where: tuple[int, int] | None = None):
        super().__init__(message)
        self.where = where


def _grid(values, n: int, m: int, label: str) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(x) for x in row) for row in values)
    if len(rows) != n or any(len(r) != m for r in rows):
        raise SurgeryDataError(f"{label} must be an {n}x{m} array")
    return rows


@dataclass(frozen=True)
class SurgeryData:
    """Coefficients ``p/q`` on ``c_{2k-1,j}`` and ``r/s`` on ``c_{2k,j}``.

    Arrays are indexed ``[k-1][j-1]``.
    """

    n: int
    m: int
    p: tuple[tuple[int, ...], ...]
    q: tuple[tuple[int, ...], ...]
    r: tuple[tuple[int, ...], ...]
    s: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise SurgeryDataError(f"need n, m >= 1, got n={self.n}, m={self.m}")
        for name in "pqrs":
            object.__setattr__(self, name, _grid(getattr(self, name), self.n, self.m, name))
        for k in range(self.n):
            for j in range(self.m):
                where = (k + 1, j + 1)
                for a, b, lab in ((self.p[k][j], self.q[k][j], "p/q"),
                                  (self.r[k][j], self.s[k][j], "r/s")):
                    if a < 0:
                        raise SurgeryDataError(
                            f"{lab} at (k,j)={where}: numerator {a} must be >= 0", where)
                    if gcd(a, b) != 1:
                        raise SurgeryDataError(
                            f"{lab} at (k,j)={where}: gcd({a},{b}) != 1", where)

    def pq(self, k: int, j: int) -> tuple[int, int]:
        """Coefficient of ``c_{2k-1,j}``; ``k`` is wrapped mod ``n``."""
        k0 = (k - 1) % self.n
        return self.p[k0][j - 1], self.q[k0][j - 1]

    def rs(self, k: int, j: int) -> tuple[int, int]:
        k0 = (k - 1) % self.n
        return self.r[k0][j - 1], self.s[k0][j - 1]

    def coefficient_list(self) -> list[tuple[int, int]]:
        """``(numerator, denominator)`` per component, in component order."""
        out = []
        for k in range(1, self.n + 1):
            out += [self.pq(k, j) for j in range(1, self.m + 1)]
            out += [self.rs(k, j) for j in range(1, self.m + 1)]
        return out


@dataclass(frozen=True)
class PeriodicSurgeryData:
    n: int
    m: int
    p: tuple[int, ...]
    q: tuple[int, ...]
    r: tuple[int, ...]
    s: tuple[int, ...]

    def __post_init__(self):
        for name in "pqrs":
            v = tuple(int(x) for x in getattr(self, name))
            if len(v) != self.m:
                raise SurgeryDataError(f"{name} must have length m={self.m}")
            object.__setattr__(self, name, v)
        self.periodize()  # validates

    def periodize(self) -> SurgeryData:
        return SurgeryData(self.n, self.m, *((getattr(self, x),) * self.n for x in "pqrs"))


def _a_names(n: int, m: int) -> tuple[str, ...]:
    return tuple(f"a[{i}][{j}]" for i in range(1, 2 * n + 1) for j in range(1, m + 1))


def _a(n: int, m: int, i: int, j: int, e: int = 1) -> Word:
    """``a_{i,j}^e`` with ``i`` wrapped into ``1..2n``."""
    return Word.gen(((i - 1) % (2 * n)) * m + (j - 1), e)


def theorem1_presentation(d: SurgeryData) -> Presentation:
    """Balanced presentation on the ``2nm`` generators ``a[i][j]``.

    For every ``(k, j)`` two relators are emitted, in the order
    ``a_{2k-1,j}^{-p} (a_{2k-2,j}^{s_{k-1,j}} ... a_{2k,j}^{-s_{k,j}})^{-1}`` and
    ``a_{2k,j}^{-r} (a_{2k+1,j}^{q_{k+1,j}} ... a_{2k-1,j}^{-q_{k,j}})^{-1}``.
    """
    n, m = d.n, d.m
    rels = []
    for k in range(1, n + 1):
        for j in range(1, m + 1):
            rhs = Word()
            for jj in range(j, m + 1):
                rhs = rhs * _a(n, m, 2 * k - 2, jj, d.rs(k - 1, jj)[1])
            for jj in range(m, j - 1, -1):
                rhs = rhs * _a(n, m, 2 * k, jj, -d.rs(k, jj)[1])
            rels.append(_a(n, m, 2 * k - 1, j, -d.pq(k, j)[0]) * rhs.inverse())

            rhs = Word()
            for jj in range(j, 0, -1):
                rhs = rhs * _a(n, m, 2 * k + 1, jj, d.pq(k + 1, jj)[1])
            for jj in range(1, j + 1):
                rhs = rhs * _a(n, m, 2 * k - 1, jj, -d.pq(k, jj)[1])
            rels.append(_a(n, m, 2 * k, j, -d.rs(k, j)[0]) * rhs.inverse())
    return Presentation(_a_names(n, m), tuple(rels),
                        {"kind": "takahashi", "n": n, "m": m})


def corollary2_presentation(d: PeriodicSurgeryData) -> Presentation:
    """Periodic case; written out directly rather than via :func:`periodize`."""
    n, m = d.n, d.m
    rels = []
    for k in range(1, n + 1):
        for j in range(1, m + 1):
            rhs = Word()
            for jj in range(j, m + 1):
                rhs = rhs * _a(n, m, 2 * k - 2, jj, d.s[jj - 1])
            for jj in range(m, j - 1, -1):
                rhs = rhs * _a(n, m, 2 * k, jj, -d.s[jj - 1])
            rels.append(_a(n, m, 2 * k - 1, j, -d.p[j - 1]) * rhs.inverse())

            rhs = Word()
            for jj in range(j, 0, -1):
                rhs = rhs * _a(n, m, 2 * k + 1, jj, d.q[jj - 1])
            for jj in range(1, j + 1):
                rhs = rhs * _a(n, m, 2 * k - 1, jj, -d.q[jj - 1])
            rels.append(_a(n, m, 2 * k, j, -d.r[j - 1]) * rhs.inverse())
    return Presentation(_a_names(n, m), tuple(rels),
                        {"kind": "takahashi-periodic", "n": n, "m": m})


# Wirtinger side: generators ordered x[1][*], y[1][*], x[2][*], ... so that the
# generator order matches the component order of the link.

def _xy_names(n: int, m: int) -> tuple[str, ...]:
    names = []
    for k in range(1, n + 1):
        names += [f"x[{k}][{j}]" for j in range(1, m + 1)]
        names += [f"y[{k}][{j}]" for j in range(1, m + 1)]
    return tuple(names)


def _x(n: int, m: int, k: int, j: int, e: int = 1) -> Word:
    return Word.gen(((k - 1) % n) * 2 * m + (j - 1), e)


def _y(n: int, m: int, k: int, j: int, e: int = 1) -> Word:
    return Word.gen(((k - 1) % n) * 2 * m + m + (j - 1), e)


def _h(n: int, m: int, k: int, j: int) -> Word:
    w = Word()
    for jj in range(j, m + 1):
        w = w * _y(n, m, k - 1, jj)
    for jj in range(m, j - 1, -1):
        w = w * _y(n, m, k, jj, -1)
    return w


def _l(n: int, m: int, k: int, j: int) -> Word:
    w = Word()
    for jj in range(j, 0, -1):
        w = w * _x(n, m, k + 1, jj)
    for jj in range(1, j + 1):
        w = w * _x(n, m, k, jj, -1)
    return w


def longitude_words(n: int, m: int) -> dict[tuple[int, int], tuple[Word, Word]]:
    """``(k, j) -> (h_{k,j}, l_{k,j})`` as words in the Wirtinger generators."""
    return {(k, j): (_h(n, m, k, j), _l(n, m, k, j))
            for k in range(1, n + 1) for j in range(1, m + 1)}


def wirtinger_presentation(n: int, m: int) -> Presentation:
    """Link group of ``L_{n,m}`` with one conjugation relator per meridian.

    Relators are ``C x C^-1 x^-1`` with ``C = y_{k,j}..y_{k,m} y_{k-1,m}^-1..y_{k-1,j}^-1``
    and ``D y D^-1 y^-1`` with ``D = x_{k,j}..x_{k,1} x_{k+1,1}^-1..x_{k+1,j}^-1``.
    """
    if n < 1 or m < 1:
        raise ValueError(f"need n, m >= 1, got n={n}, m={m}")
    rels = []
    for k in range(1, n + 1):
        for j in range(1, m + 1):
            c = Word()
            for jj in range(j, m + 1):
                c = c * _y(n, m, k, jj)
            for jj in range(m, j - 1, -1):
                c = c * _y(n, m, k - 1, jj, -1)
            x = _x(n, m, k, j)
            rels.append(c * x * c.inverse() * x.inverse())
        for j in range(1, m + 1):
            dw = Word()
            for jj in range(j, 0, -1):
                dw = dw * _x(n, m, k, jj)
            for jj in range(1, j + 1):
                dw = dw * _x(n, m, k + 1, jj, -1)
            y = _y(n, m, k, j)
            rels.append(dw * y * dw.inverse() * y.inverse())
    return Presentation(_xy_names(n, m), tuple(rels), {"kind": "wirtinger", "n": n, "m": m})


def surgered_presentation(d: SurgeryData) -> Presentation:
    """Wirtinger presentation plus the fillings ``x^p h^q`` and ``y^r l^s``."""
    n, m = d.n, d.m
    W = wirtinger_presentation(n, m)
    rels = list(W.relators)
    for k in range(1, n + 1):
        for j in range(1, m + 1):
            p, q = d.pq(k, j)
            rels.append(_x(n, m, k, j, p) * _h(n, m, k, j) ** q)
        for j in range(1, m + 1):
            r, s = d.rs(k, j)
            rels.append(_y(n, m, k, j, r) * _l(n, m, k, j) ** s)
    return Presentation(W.generators, tuple(rels), {"kind": "surgered", "n": n, "m": m})


def bezout_change(p: int, q: int) -> tuple[int, int]:
    """``(u, v)`` with ``q*u - p*v = 1``, ``|u|`` minimal, ties to the smaller ``u``."""
    if gcd(p, q) != 1:
        raise ValueError(f"gcd({p}, {q}) != 1")
    if p == 0:
        return q, 0  # q = +-1, v is free
    ap = abs(p)
    u0 = pow(q % ap, -1, ap) if ap > 1 else 0
    u = min((u0, u0 - ap), key=lambda x: (abs(x), x))
    v, rem = divmod(q * u - 1, p)
    assert rem == 0
    return u, v


def linking_matrix(n: int, m: int) -> IntMatrix:
    """Linking numbers read off the exponent sums of the longitude words.

    Rows and columns follow the component order, which coincides with the
    Wirtinger generator order.
    """
    N = 2 * n * m
    L = longitude_words(n, m)
    rows = []
    for k in range(1, n + 1):
        rows += [exponent_sums(L[k, j][0], N) for j in range(1, m + 1)]
        rows += [exponent_sums(L[k, j][1], N) for j in range(1, m + 1)]
    return IntMatrix.from_rows(rows, N)


def surgery_homology_matrix(d: SurgeryData) -> IntMatrix:
    """Row ``i`` is ``p_i e_i + q_i * lk_i``; its cokernel is ``H_1``."""
    lk = linking_matrix(d.n, d.m).to_rows()
    rows = []
    for i, (num, den) in enumerate(d.coefficient_list()):
        row = [den * x for x in lk[i]]
        row[i] += num
        rows.append(row)
    return IntMatrix.from_rows(rows, len(lk))


def cover_surgery_data(c: ConwayEven, n: int) -> PeriodicSurgeryData:
    """``T_{n,m}(1/q_j; 1/s_j)`` for the Conway form ``[-2q_1, 2s_1, ...]``."""
    m = c.m
    return PeriodicSurgeryData(n, m, (1,) * m, c.q, (1,) * m, c.s)


_PAIR = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def _parse_pairs(body: str, n: int, m: int, label: str):
    rows = [r for r in body.split(";")]
    if len(rows) != n:
        raise SurgeryDataError(f"{label}: expected {n} rows separated by ';', got {len(rows)}")
    nums, dens = [], []
    for k, row in enumerate(rows, 1):
        pairs = _PAIR.findall(row)
        if len(pairs) != m or _PAIR.sub("", row).strip():
            raise SurgeryDataError(f"{label}: row k={k} must hold exactly {m} pairs '(a,b)'")
        nums.append([int(a) for a, _ in pairs])
        dens.append([int(b) for _, b in pairs])
    return nums, dens


def parse_surgery_data(text: str) -> SurgeryData:
    fields: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, colon, body = line.partition(":")
        if not colon or key.strip() not in ("n", "m", "pq", "rs"):
            raise SurgeryDataError(f"unrecognised line {raw!r}")
        fields[key.strip()] = body.strip()
    missing = [k for k in ("n", "m", "pq", "rs") if k not in fields]
    if missing:
        raise SurgeryDataError(f"missing field(s): {', '.join(missing)}")
    try:
        n, m = int(fields["n"]), int(fields["m"])
    except ValueError:
        raise SurgeryDataError("n and m must be integers") from None
    if n < 1 or m < 1:
        raise SurgeryDataError(f"need n, m >= 1, got n={n}, m={m}")
    p, q = _parse_pairs(fields["pq"], n, m, "pq")
    r, s = _parse_pairs(fields["rs"], n, m, "rs")
    return SurgeryData(n, m, p, q, r, s)


def format_surgery_data(d: SurgeryData) -> str:
    def rows(a, b):
        return " ; ".join(" ".join(f"({x},{y})" for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

    return f"n: {d.n}\nm: {d.m}\npq: {rows(d.p, d.q)}\nrs: {rows(d.r, d.s)}\n"
