"""Two-bridge knots: even Conway forms, fractions, Alexander polynomials."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from math import gcd

from .exactalg import LaurentPoly, cyclotomic_quotient, resultant
from .fpgroup import Presentation
from .words import Word

__all__ = [
    "TwoBridgeError",
    "NotAKnotError",
    "UnknotError",
    "InternalCheckError",
    "ConwayEven",
    "KnotFraction",
    "INFINITE",
    "conway_to_fraction",
    "fraction_to_conway",
    "equivalent_fractions",
    "canonical_fraction",
    "schubert_presentation",
    "schubert_signs",
    "fox_derivative",
    "alexander_polynomial",
    "cover_homology_order",
    "parse_conway",
    "parse_fraction",
]

INFINITE = "infinite"


class TwoBridgeError(ValueError):
    """Invalid two-bridge input."""


class NotAKnotError(TwoBridgeError):
    """Even numerator: a two-bridge link, not a knot."""


class UnknotError(TwoBridgeError):
    """Numerator 1: the trivial knot."""


class InternalCheckError(RuntimeError):
    """A postcondition that valid input can never violate has failed."""


@dataclass(frozen=True)
class ConwayEven:
    """Even Conway parameters ``[-2q_1, 2s_1, ..., -2q_m, 2s_m]``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        e = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", e)
        if len(e) < 2 or len(e) % 2:
            raise TwoBridgeError(f"Conway form needs an even number (>= 2) of entries, got {len(e)}")
        for i, c in enumerate(e):
            if c == 0 or c % 2:
                raise TwoBridgeError(f"Conway entry {i + 1} is {c}; entries must be even and nonzero")

    @classmethod
    def from_qs(cls, q, s) -> "ConwayEven":
        if len(q) != len(s):
            raise TwoBridgeError("q and s must have equal length")
        out = []
        for qj, sj in zip(q, s):
            out += [-2 * qj, 2 * sj]
        return cls(tuple(out))

    @property
    def m(self) -> int:
        return len(self.entries) // 2

    @property
    def q(self) -> tuple[int, ...]:
        return tuple(-c // 2 for c in self.entries[0::2])

    @property
    def s(self) -> tuple[int, ...]:
        return tuple(c // 2 for c in self.entries[1::2])

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.entries) + "]"


@dataclass(frozen=True)
class KnotFraction:
    """``a/b`` with ``a`` odd and at least 3, ``gcd(a, b) = 1``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a <= 0:
            raise TwoBridgeError(f"numerator must be positive, got {self.a}")
        if gcd(self.a, self.b) != 1:
            raise TwoBridgeError(f"{self.a}/{self.b} is not reduced")
        if self.a == 1:
            raise UnknotError(f"{self.a}/{self.b} is the unknot")
        if self.a % 2 == 0:
            raise NotAKnotError(f"{self.a}/{self.b} has even numerator: a two-bridge link")

    def __str__(self) -> str:
        return f"{self.a}/{self.b}"


def conway_to_fraction(c: ConwayEven) -> KnotFraction:
    """Evaluate ``c_1 + 1/(c_2 + 1/(... + 1/c_2m))`` as a reduced fraction."""
    val = Q(c.entries[-1])
    for x in reversed(c.entries[:-1]):
        if val == 0:
            raise TwoBridgeError(f"zero intermediate denominator in {c}")
        val = x + 1 / val
    a, b = val.numerator, val.denominator
    if a < 0:
        a, b = -a, -b
    return KnotFraction(a, b)


def fraction_to_conway(f: KnotFraction) -> ConwayEven:
    """All-even continued fraction of ``a/b'`` for some ``b' = b (mod a)``."""
    a = f.a
    b = f.b % a
    if b % 2:
        b -= a  # even representative in (-a, 0)
    num, den = a, b
    out: list[int] = []
    # |den| strictly decreases, so at most a steps; lengths near a do occur (27/1)
    bound = a + 1
    while den:
        if len(out) > bound:
            raise InternalCheckError(f"even continued fraction of {f} did not terminate")
        c = 2 * _round_half_to_zero(Q(num, 2 * den))
        rem = num - c * den
        if abs(rem) >= abs(den):
            raise InternalCheckError(f"remainder failed to decrease for {f}")
        out.append(c)
        num, den = den, rem
    return ConwayEven(tuple(out))


def _round_half_to_zero(x: Q) -> int:
    fl = x.numerator // x.denominator
    frac = x - fl
    if frac > Q(1, 2):
        return fl + 1
    if frac < Q(1, 2):
        return fl
    return fl if fl >= 0 else fl + 1


def equivalent_fractions(f1: KnotFraction, f2: KnotFraction, up_to_mirror: bool = True) -> bool:
    """Same two-bridge knot: ``a1 == a2`` and ``b2 = b1^(+-1) (mod a)``.

    With ``up_to_mirror`` the sign of ``b`` is ignored as well, so a knot
    and its mirror image compare equal.
    """
    if f1.a != f2.a:
        return False
    a = f1.a
    b1, b2 = f1.b % a, f2.b % a
    cands = {b1, pow(b1, -1, a)}
    if up_to_mirror:
        cands |= {(-x) % a for x in cands}
    return b2 in cands


def canonical_fraction(f: KnotFraction) -> KnotFraction:
    """``0 < b < a`` and ``b = min(b, b^-1 mod a)``."""
    b = f.b % f.a
    return KnotFraction(f.a, min(b, pow(b, -1, f.a)))


def schubert_presentation(f: KnotFraction) -> Presentation:
    """Two-generator one-relator knot group ``<u, v | l u l^-1 v^-1>``.

    ``l = u^e1 v^e2 ... v^e_(a-1)`` with ``e_i = (-1)^floor(i*b/a)``.  The
    formula needs ``b`` odd, so an even ``b`` is replaced by ``a - b``
    (the mirror image, which has the same group).
    """
    if not 0 < f.b < f.a:
        raise TwoBridgeError(f"schubert_presentation needs 0 < b < a, got {f}")
    # u on odd positions, v on even ones
    l = Word((1 - i % 2, e) for i, e in enumerate(schubert_signs(f), 1))
    u, v = Word.gen(0), Word.gen(1)
    rel = l * u * l.inverse() * v.inverse()
    return Presentation(("u", "v"), (rel,), {"kind": "schubert", "fraction": f"{f.a}/{f.b}"})


def schubert_signs(f: KnotFraction) -> tuple[int, ...]:
    """Exponents ``e_1..e_(a-1)`` of the Schubert word, using an odd ``b``."""
    a, b = f.a, f.b
    if b % 2 == 0:
        b = a - b
    return tuple(-1 if (i * b // a) % 2 else 1 for i in range(1, a))


def fox_derivative(w: Word, g: int) -> LaurentPoly:
    """Abelianized Fox derivative ``dw/dg`` with every generator sent to ``t``."""
    terms: dict[int, int] = {}
    deg = 0  # exponent sum of the prefix read so far
    for h, e in w.syllables:
        if h == g:
            if e > 0:
                for k in range(deg, deg + e):
                    terms[k] = terms.get(k, 0) + 1
            else:
                for k in range(deg + e, deg):
                    terms[k] = terms.get(k, 0) - 1
        deg += e
    return LaurentPoly.from_dict(terms)


@lru_cache(maxsize=4096)
def _alexander(a: int, b: int) -> LaurentPoly:
    P = schubert_presentation(KnotFraction(a, b))
    delta = fox_derivative(P.relators[0], 0).normalize_unit()
    if abs(delta.evaluate(1)) != 1:
        raise InternalCheckError(f"Alexander polynomial of {a}/{b} has |D(1)| != 1: {delta}")
    if not delta.is_palindromic_up_to_unit():
        raise InternalCheckError(f"Alexander polynomial of {a}/{b} is not palindromic: {delta}")
    return delta


def alexander_polynomial(f: KnotFraction) -> LaurentPoly:
    """Normalized Alexander polynomial via Fox calculus on the Schubert relator."""
    c = canonical_fraction(f)
    return _alexander(c.a, c.b)


def cover_homology_order(f: KnotFraction, n: int) -> int | str:
    """``|H_1|`` of the n-fold cyclic branched cover, or ``INFINITE``."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    r = abs(resultant(alexander_polynomial(f), cyclotomic_quotient(n)))
    return r if r else INFINITE


def parse_conway(text: str) -> ConwayEven:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise TwoBridgeError(f"Conway form must look like [2,2,-2,4], got {text!r}")
    try:
        entries = tuple(int(x) for x in re.split(r"[,\s]+", body[1:-1].strip()) if x)
    except ValueError:
        raise TwoBridgeError(f"non-integer entry in {text!r}") from None
    return ConwayEven(entries)


def parse_fraction(text: str) -> KnotFraction:
    m = re.fullmatch(r"\s*(-?\d+)\s*/\s*(-?\d+)\s*", text)
    if not m:
        raise TwoBridgeError(f"fraction must look like a/b, got {text!r}")
    a, b = int(m.group(1)), int(m.group(2))
    if a < 0:
        a, b = -a, -b
    return KnotFraction(a, b)
