"""Free-group words in syllable (run-length) form.

A word is an immutable tuple of ``(generator, exponent)`` pairs where the
generator is a nonnegative integer index into some generator table.  Every
public constructor returns the freely reduced normal form: adjacent
syllables use distinct generators and no exponent is zero.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

Syllable = tuple[int, int]

__all__ = [
    "Word",
    "reduce",
    "invert",
    "concat",
    "power",
    "substitute",
    "cyclically_reduce",
    "cyclic_equal",
    "canonical_cyclic",
    "exponent_sums",
    "parse_word",
    "format_word",
    "WordSyntaxError",
]


class WordSyntaxError(ValueError):
    pass


def _reduce_syllables(raw: Iterable[Syllable]) -> tuple[Syllable, ...]:
    stack: list[list[int]] = []
    for g, e in raw:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            stack[-1][1] += e
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([g, e])
    return tuple((g, e) for g, e in stack)


class Word:
    """Freely reduced word; supports ``*``, ``**`` and ``~`` (inverse)."""

    __slots__ = ("syllables", "_hash")

    def __init__(self, syllables: Iterable[Syllable] = ()):
        self.syllables = _reduce_syllables(syllables)
        self._hash = None

    @classmethod
    def _trusted(cls, syllables: tuple[Syllable, ...]) -> "Word":
        w = cls.__new__(cls)
        w.syllables = syllables
        w._hash = None
        return w

    @classmethod
    def gen(cls, g: int, e: int = 1) -> "Word":
        return cls(((g, e),))

    def __len__(self) -> int:
        return len(self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.syllables == other.syllables

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.syllables)
        return self._hash

    def __repr__(self) -> str:
        return f"Word({list(self.syllables)!r})"

    def letter_length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def generators(self) -> set[int]:
        return {g for g, _ in self.syllables}

    def inverse(self) -> "Word":
        return Word._trusted(tuple((g, -e) for g, e in reversed(self.syllables)))

    __invert__ = inverse

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        a, b = self.syllables, other.syllables
        if not a:
            return other
        if not b:
            return self
        # cancel only at the seam; both halves are already reduced
        i, j = len(a), 0
        merged: Syllable | None = None
        while i > 0 and j < len(b):
            g1, e1 = a[i - 1]
            g2, e2 = b[j]
            if g1 != g2:
                break
            if e1 + e2 == 0:
                i -= 1
                j += 1
                continue
            merged = (g1, e1 + e2)
            i -= 1
            j += 1
            break
        mid = (merged,) if merged is not None else ()
        return Word._trusted(a[:i] + mid + b[j:])

    def __pow__(self, e: int) -> "Word":
        if e == 0 or not self.syllables:
            return Word()
        base = self if e > 0 else self.inverse()
        e = abs(e)
        if len(base.syllables) == 1:
            g, x = base.syllables[0]
            return Word._trusted(((g, x * e),))
        out = Word()
        for _ in range(e):
            out = out * base
        return out

    def rename(self, mapping: Mapping[int, int] | Sequence[int]) -> "Word":
        """Apply a generator relabelling (must be injective to stay reduced)."""
        return Word((mapping[g], e) for g, e in self.syllables)


def reduce(raw: Iterable[Syllable]) -> Word:
    return Word(raw)


def invert(w: Word) -> Word:
    return w.inverse()


def concat(words: Iterable[Word]) -> Word:
    out = Word()
    for w in words:
        out = out * w
    return out


def power(w: Word, e: int) -> Word:
    return w ** e


def substitute(w: Word, images: Mapping[int, Word] | Sequence[Word]) -> Word:
    """Apply the homomorphism sending generator ``g`` to ``images[g]``."""
    out = Word()
    for g, e in w.syllables:
        try:
            img = images[g]
        except (KeyError, IndexError):
            raise KeyError(f"no image given for generator {g}") from None
        out = out * (img ** e)
    return out


def cyclically_reduce(w: Word) -> Word:
    """Return a cyclically reduced conjugate of ``w``."""
    s = w.syllables
    i, j = 0, len(s) - 1
    while i < j and s[i][0] == s[j][0] and s[i][1] == -s[j][1]:
        i += 1
        j -= 1
    if i > j:
        return Word()
    if i == j:
        return Word._trusted((s[i],))
    if s[i][0] == s[j][0]:
        g = s[i][0]
        e = s[i][1] + s[j][1]
        inner = s[i + 1:j]
        return Word._trusted(inner + ((g, e),))
    return Word._trusted(s[i:j + 1])


def _least_rotation(s: tuple[Syllable, ...]) -> tuple[Syllable, ...]:
    if not s:
        return s
    return min(s[k:] + s[:k] for k in range(len(s)))


def canonical_cyclic(w: Word, allow_inverse: bool = False) -> tuple[Syllable, ...]:
    """Lexicographically least rotation of the cyclic reduction of ``w``.

    Usable as a hash key for conjugacy-up-to-rotation of cyclic words.
    """
    c = _least_rotation(cyclically_reduce(w).syllables)
    if allow_inverse:
        ci = _least_rotation(cyclically_reduce(w.inverse()).syllables)
        return min(c, ci)
    return c


def cyclic_equal(w1: Word, w2: Word, allow_inverse: bool = False) -> bool:
    return canonical_cyclic(w1, allow_inverse) == canonical_cyclic(w2, allow_inverse)


def exponent_sums(w: Word, ngens: int) -> list[int]:
    v = [0] * ngens
    for g, e in w.syllables:
        v[g] += e
    return v


def parse_word(text: str, names: Sequence[str] | Mapping[str, int]) -> Word:
    """Parse whitespace separated ``name^exp`` tokens; ``1`` is the empty word."""
    if not isinstance(names, Mapping):
        names = {name: i for i, name in enumerate(names)}
    syllables = []
    for tok in text.split():
        if tok == "1":
            continue
        name, caret, exp = tok.rpartition("^")
        if not caret:
            name, exp = tok, "1"
        if name not in names:
            raise WordSyntaxError(f"unknown generator {name!r} in {text!r}")
        try:
            e = int(exp)
        except ValueError:
            raise WordSyntaxError(f"bad exponent in token {tok!r}") from None
        syllables.append((names[name], e))
    return Word(syllables)


def format_word(w: Word, names: Sequence[str]) -> str:
    if not w.syllables:
        return "1"
    return " ".join(names[g] if e == 1 else f"{names[g]}^{e}" for g, e in w.syllables)
