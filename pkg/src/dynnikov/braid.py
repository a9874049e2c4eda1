"""Braid words in Artin generators and their decomposition into bands."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import BraidWordError


@dataclass(frozen=True)
class BraidWord:
    """
    A braid in ``B_n`` as a sequence of signed generator indices.

    Letter ``i > 0`` is ``sigma_i`` and ``-i`` is its inverse. No free
    reduction is ever performed.
    """

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(e) for e in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.n < 3:
            raise BraidWordError(f"need n >= 3 strands, got {self.n}")
        for e in letters:
            if e == 0:
                raise BraidWordError("zero is not a generator")
            if abs(e) > self.n - 1:
                raise BraidWordError(
                    f"generator index {abs(e)} exceeds n-1={self.n - 1}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.n != self.n:
            raise BraidWordError("cannot concatenate words on different strand counts")
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return inverse_word(self) ** (-k)
        return BraidWord(self.n, self.letters * k)

    def __str__(self) -> str:
        return format_word(self)


_SPLIT = re.compile(r"[\s,]+")


def parse_word(text: str, n: int) -> BraidWord:
    """Parse whitespace- or comma-separated signed integers, e.g. ``"1 2 -3"``."""
    tokens = [t for t in _SPLIT.split(text.strip()) if t]
    letters = []
    for t in tokens:
        try:
            letters.append(int(t))
        except ValueError:
            raise BraidWordError(f"not an integer generator: {t!r}") from None
    return BraidWord(n, tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(str(e) for e in w.letters)


def inverse_word(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(-e for e in reversed(w.letters)))


def full_twist(n: int) -> BraidWord:
    """The generator of the centre of ``B_n``: ``(sigma_1 ... sigma_{n-1})^n``."""
    return BraidWord(n, tuple(range(1, n)) * n)


class BandKind(enum.Enum):
    GAMMA = "gamma"      # sigma_k sigma_{k+1} ... sigma_l
    DELTA = "delta"      # sigma_l ... sigma_{k+1} sigma_k
    EPSILON = "epsilon"  # sigma_k^-1 ... sigma_l^-1
    ZETA = "zeta"        # sigma_l^-1 ... sigma_k^-1


@dataclass(frozen=True)
class BandGenerator:
    """A run of contiguous Artin generators over the index range ``[k, l]``."""

    kind: BandKind
    k: int
    l: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "kind", BandKind(self.kind))
        if not 1 <= self.k <= self.l <= self.n - 1:
            raise BraidWordError(
                f"band range [{self.k}, {self.l}] invalid for n={self.n}"
            )

    def letters(self) -> tuple[int, ...]:
        up = tuple(range(self.k, self.l + 1))
        if self.kind is BandKind.GAMMA:
            return up
        if self.kind is BandKind.DELTA:
            return up[::-1]
        if self.kind is BandKind.EPSILON:
            return tuple(-e for e in up)
        return tuple(-e for e in reversed(up))

    def word(self) -> BraidWord:
        return BraidWord(self.n, self.letters())


def decompose_into_bands(w: BraidWord) -> list[BandGenerator]:
    """
    Greedy left-to-right split of ``w`` into maximal monotone runs.

    A run continues while consecutive letters share a sign and their indices
    step by +1 (ascending) or -1 (descending) in the direction fixed by the
    run's first step. Isolated letters become ``GAMMA(i, i)`` or
    ``EPSILON(i, i)``.
    """
    letters = w.letters
    bands = []
    t = 0
    while t < len(letters):
        e = letters[t]
        sign = 1 if e > 0 else -1
        step = 0
        end = t
        if t + 1 < len(letters) and letters[t + 1] * sign > 0:
            d = abs(letters[t + 1]) - abs(e)
            if d in (1, -1):
                step = d
                end = t + 1
                while end + 1 < len(letters) and letters[end + 1] * sign > 0 and \
                        abs(letters[end + 1]) - abs(letters[end]) == step:
                    end += 1
        i, j = abs(letters[t]), abs(letters[end])
        k, l = min(i, j), max(i, j)
        if sign > 0:
            kind = BandKind.DELTA if step == -1 else BandKind.GAMMA
        else:
            kind = BandKind.ZETA if step == -1 else BandKind.EPSILON
        bands.append(BandGenerator(kind, k, l, w.n))
        t = end + 1
    return bands
