"""Finitely presented groups and cyclic presentations."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from .exactalg import AbelianGroup, IntMatrix, cokernel
from .words import Word, exponent_sums, format_word, parse_word

__all__ = [
    "Presentation",
    "ShiftMap",
    "PresentationSyntaxError",
    "abelianization_matrix",
    "homology",
    "apply_shift",
    "is_cyclic_presentation",
    "make_cyclic_presentation",
    "cyclic_names",
    "parse_presentation",
    "format_presentation",
    "format_gap",
]


class PresentationSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    metadata: Mapping[str, object] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be unique")
        n = len(self.generators)
        for r in self.relators:
            for g, _ in r.syllables:
                if not 0 <= g < n:
                    raise ValueError(f"relator refers to generator {g}, only {n} exist")

    @property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.generators)}

    def gen(self, name: str, e: int = 1) -> Word:
        return Word.gen(self.index[name], e)

    def relator_multiset(self) -> Counter:
        return Counter(self.relators)

    def same_relators(self, other: "Presentation") -> bool:
        """Same generators and same relators as multisets of reduced words."""
        return self.generators == other.generators and self.relator_multiset() == other.relator_multiset()

    def __str__(self) -> str:
        return format_presentation(self)


@dataclass(frozen=True)
class ShiftMap:
    """Generator permutation: generator ``i`` goes to ``images[i]``."""

    images: tuple[int, ...]
    period: int

    @classmethod
    def cyclic(cls, n: int) -> "ShiftMap":
        """``x_k -> x_{k+1}`` with indices mod ``n``."""
        return cls(tuple((k + 1) % n for k in range(n)), n)

    @classmethod
    def takahashi(cls, n: int, m: int) -> "ShiftMap":
        """``a_{i,j} -> a_{i+2,j}`` on the ``2n*m`` generators ordered ``(i, j)``."""
        imgs = []
        for i in range(2 * n):
            for j in range(m):
                imgs.append(((i + 2) % (2 * n)) * m + j)
        return cls(tuple(imgs), n)

    def is_bijective(self, ngens: int | None = None) -> bool:
        size = len(self.images) if ngens is None else ngens
        return len(self.images) == size and sorted(self.images) == list(range(size))

    def __call__(self, w: Word) -> Word:
        return w.rename(self.images)


def abelianization_matrix(P: Presentation) -> IntMatrix:
    n = len(P.generators)
    return IntMatrix.from_rows([exponent_sums(r, n) for r in P.relators], n)


def homology(P: Presentation) -> AbelianGroup:
    return cokernel(abelianization_matrix(P))


def apply_shift(P: Presentation, sigma: ShiftMap) -> Presentation:
    if not sigma.is_bijective(len(P.generators)):
        raise ValueError("shift map is not a bijection on the generators")
    return Presentation(P.generators, tuple(sigma(r) for r in P.relators), P.metadata)


def is_cyclic_presentation(P: Presentation, sigma: ShiftMap) -> bool:
    n = sigma.period
    if len(P.generators) != n or len(P.relators) != n:
        return False
    if not sigma.is_bijective(n):
        return False
    rels = P.relators
    return all(sigma(rels[i]) == rels[(i + 1) % n] for i in range(n))


def cyclic_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{k + 1}" for k in range(n))


def make_cyclic_presentation(n: int, w: Word) -> Presentation:
    """``G_n(w)``: relators ``sigma^i(w)`` for ``i = 0..n-1``.

    ``w`` is over the 0-based generators ``0..n-1``, shown as ``x1..xn``.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    bad = [g for g in w.generators() if not 0 <= g < n]
    if bad:
        raise ValueError(f"word uses generator index {min(bad)} outside 0..{n - 1}")
    sigma = ShiftMap.cyclic(n)
    rels = [w]
    for _ in range(n - 1):
        rels.append(sigma(rels[-1]))
    return Presentation(cyclic_names(n), tuple(rels), {"kind": "cyclic", "n": n})


def format_presentation(P: Presentation) -> str:
    lines = ["gens: " + " ".join(P.generators) if P.generators else "gens:"]
    lines += [f"rel: {format_word(r, P.generators)}" for r in P.relators]
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    gens: list[str] | None = None
    rels: list[Word] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, colon, body = line.partition(":")
        if not colon:
            raise PresentationSyntaxError(f"line {lineno}: expected 'gens:' or 'rel:'")
        key = key.strip()
        if key == "gens":
            if gens is not None:
                raise PresentationSyntaxError(f"line {lineno}: duplicate gens line")
            gens = body.split()
        elif key == "rel":
            if gens is None:
                raise PresentationSyntaxError(f"line {lineno}: rel before gens")
            try:
                rels.append(parse_word(body, gens))
            except ValueError as exc:
                raise PresentationSyntaxError(f"line {lineno}: {exc}") from None
        else:
            raise PresentationSyntaxError(f"line {lineno}: unknown key {key!r}")
    if gens is None:
        raise PresentationSyntaxError("missing gens line")
    return Presentation(tuple(gens), tuple(rels))


def _gap_word(w: Word) -> str:
    if not w.syllables:
        return "One(F)"
    return "*".join(f"F.{g + 1}" if e == 1 else f"F.{g + 1}^{e}" for g, e in w.syllables)


def format_gap(P: Presentation) -> str:
    """GAP input: free group on the quoted names, relators as ``F.i`` words.

    The output can be pasted into GAP (``Read`` it or copy the lines) and
    ends with ``G`` bound to the finitely presented group.
    """
    names = ", ".join(f'"{g}"' for g in P.generators)
    lines = [f"F := FreeGroup({names});;" if P.generators else "F := FreeGroup(0);;"]
    lines.append("rels := [")
    if P.relators:
        lines.append(",\n".join(f"  {_gap_word(r)}" for r in P.relators))
    lines.append("];;")
    lines.append("G := F / rels;;")
    return "\n".join(lines) + "\n"
