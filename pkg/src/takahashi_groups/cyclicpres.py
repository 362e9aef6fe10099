"""Cyclic presentations for cyclic branched covers of two-bridge knots.

Starting from the periodic presentation with all ``p_j = r_j = 1`` we write
``d_{k,j} = a_{2k-1,j}`` and ``b_{k,j} = a_{2k,j}``, keep ``x_k = d_{k,1}`` and
eliminate ``b_{k,1}, d_{k,2}, b_{k,2}, ..., d_{k,m}, b_{k,m}`` in that order:

    b_{k,1} = d_{k,1}^{q_1} d_{k+1,1}^{-q_1}
    d_{k,j} = b_{k,j-1}^{-s_{j-1}} d_{k,j-1} b_{k-1,j-1}^{s_{j-1}}
    b_{k,j} = d_{k,j}^{q_j} b_{k,j-1} d_{k+1,j}^{-q_j}

What remains is one relator ``b_{k,m}^{-s_m} d_{k,m} b_{k-1,m}^{s_m}`` per ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .exactalg import LaurentPoly
from .fpgroup import Presentation, make_cyclic_presentation
from .twobridge import ConwayEven
from .words import Word

__all__ = [
    "EliminationState",
    "eliminate",
    "theorem5_word",
    "cyclic_presentation_for_cover",
    "word_polynomial",
    "cover_word_polynomial",
]


@dataclass
class EliminationState:
    """Words ``d[j][k]`` and ``b[j][k]`` over ``x_0..x_{n-1}`` (0-based ``j``, ``k``)."""

    n: int
    q: tuple[int, ...]
    s: tuple[int, ...]
    d: list[list[Word]] = field(default_factory=list)
    b: list[list[Word]] = field(default_factory=list)

    @property
    def m(self) -> int:
        return len(self.q)

    def relator(self, k: int) -> Word:
        """``b_{k,m}^{-s_m} d_{k,m} b_{k-1,m}^{s_m}`` for 0-based ``k``."""
        n, sm = self.n, self.s[-1]
        return self.b[-1][k % n] ** -sm * self.d[-1][k % n] * self.b[-1][(k - 1) % n] ** sm


def eliminate(q: Sequence[int], s: Sequence[int], n: int) -> EliminationState:
    q, s = tuple(q), tuple(s)
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not q or len(q) != len(s):
        raise ValueError("q and s must be nonempty and of equal length")
    for j, (qj, sj) in enumerate(zip(q, s), 1):
        if qj == 0 or sj == 0:
            raise ValueError(f"q_{j} and s_{j} must be nonzero, got q={qj}, s={sj}")
    st = EliminationState(n, q, s)
    d = [Word.gen(k) for k in range(n)]
    b = [d[k] ** q[0] * d[(k + 1) % n] ** -q[0] for k in range(n)]
    st.d.append(d)
    st.b.append(b)
    for j in range(1, len(q)):
        sp, qj = s[j - 1], q[j]
        pd, pb = st.d[-1], st.b[-1]
        d = [pb[k] ** -sp * pd[k] * pb[(k - 1) % n] ** sp for k in range(n)]
        b = [d[k] ** qj * pb[k] * d[(k + 1) % n] ** -qj for k in range(n)]
        st.d.append(d)
        st.b.append(b)
    return st


def theorem5_word(q: Sequence[int], s: Sequence[int], n: int) -> Word:
    """Cyclic relator word at base index ``k = 1`` (generator 0 is ``x1``)."""
    return eliminate(q, s, n).relator(0)


def cyclic_presentation_for_cover(c: ConwayEven, n: int) -> Presentation:
    P = make_cyclic_presentation(n, theorem5_word(c.q, c.s, n))
    return Presentation(P.generators, P.relators,
                        {"kind": "cover", "conway": str(c), "n": n})


def word_polynomial(w: Word, n: int) -> LaurentPoly:
    """``sum_k e_k t^k`` where ``e_k`` is the exponent sum of ``x_{1+k}`` in ``w``.

    Indices are read as centred offsets from ``x1`` (generator ``g`` has
    offset ``g`` or ``g - n``), which is exact as long as the word spans
    fewer than ``n`` consecutive indices.
    """
    terms: dict[int, int] = {}
    half = n // 2
    for g, e in w.syllables:
        off = g if g <= half else g - n
        terms[off] = terms.get(off, 0) + e
    return LaurentPoly.from_dict(terms)


def cover_word_polynomial(q: Sequence[int], s: Sequence[int]) -> LaurentPoly:
    """Exponent-sum polynomial of the unwrapped relator (``n`` large enough)."""
    n = 2 * len(q) + 3
    return word_polynomial(theorem5_word(q, s, n), n)
