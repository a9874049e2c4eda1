"""
Dynnikov and triangle coordinates on the n-punctured disk.

A measured foliation (or an integral lamination) on the disk with ``n``
punctures is recorded by the transverse measures of two families of
reference arcs: the ``2n - 4`` arcs ``alpha`` joining the interior punctures
to the boundary, and the ``n - 1`` arcs ``beta`` running between consecutive
punctures. Dynnikov coordinates are the half-differences

    a_i = (alpha_{2i} - alpha_{2i-1}) / 2,    b_i = (beta_i - beta_{i+1}) / 2

for ``1 <= i <= n - 2``, and they identify foliation classes with
``R^{2n-4} \\ {0}`` (integral laminations with ``Z^{2n-4} \\ {0}``).

Entries are plain Python numbers. Every operation uses only ``+``, ``-``,
``max`` and comparison, so ``int`` gives exact arithmetic of unbounded size and
``float`` gives real-mode arithmetic; ``fractions.Fraction`` also works.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from numbers import Integral
from typing import Iterable, Sequence, Union

from .errors import DegenerateCoordinatesError, DynnikovError, ParityError

Scalar = Union[int, float]


def _is_exact(value) -> bool:
    return isinstance(value, Integral)


def _half(value):
    if _is_exact(value):
        if value % 2:
            raise ParityError(f"odd difference {value} in integer coordinates")
        return value // 2
    return value / 2


@dataclass(frozen=True)
class DynnikovCoordinates:
    """Dynnikov coordinates ``(a_1..a_{n-2}; b_1..b_{n-2})`` of a foliation class."""

    a: tuple
    b: tuple

    def __post_init__(self):
        a, b = tuple(self.a), tuple(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if len(a) != len(b):
            raise DynnikovError(f"length mismatch: |a|={len(a)}, |b|={len(b)}")
        if not a:
            raise DynnikovError("need at least 3 punctures (one a and one b entry)")
        if all(v == 0 for v in a) and all(v == 0 for v in b):
            raise DegenerateCoordinatesError("the zero vector is not a valid coordinate")

    @property
    def n(self) -> int:
        """Number of punctures."""
        return len(self.a) + 2

    @classmethod
    def from_flat(cls, values: Sequence) -> DynnikovCoordinates:
        values = tuple(values)
        if len(values) % 2:
            raise DynnikovError("flat coordinate vector must have even length")
        half = len(values) // 2
        return cls(values[:half], values[half:])

    def flat(self) -> tuple:
        return self.a + self.b

    def is_integral(self) -> bool:
        return all(_is_exact(v) for v in self.flat())

    def scaled(self, factor) -> DynnikovCoordinates:
        return DynnikovCoordinates(
            tuple(factor * v for v in self.a), tuple(factor * v for v in self.b)
        )

    def to_float(self) -> DynnikovCoordinates:
        return DynnikovCoordinates(
            tuple(float(v) for v in self.a), tuple(float(v) for v in self.b)
        )

    def norm(self):
        """Max-norm of the flattened vector."""
        return max(abs(v) for v in self.flat())

    def content(self) -> int:
        """gcd of the entries (integral coordinates only)."""
        return math.gcd(*self.flat())

    def __str__(self) -> str:
        return format_coords(self)


# Integral laminations are Dynnikov coordinates with exact integer entries.
IntegralLamination = DynnikovCoordinates


def lamination(a: Iterable[int], b: Iterable[int]) -> DynnikovCoordinates:
    """Build integral coordinates, rejecting non-integer entries."""
    x = DynnikovCoordinates(tuple(a), tuple(b))
    if not x.is_integral():
        raise DynnikovError("integral lamination needs integer entries")
    return x


@dataclass(frozen=True)
class TriangleCoordinates:
    """
    Arc measures ``(alpha_1..alpha_{2n-4}; beta_1..beta_{n-1})``.

    Lengths are always checked. The geometric invariants (non-negativity,
    ``alpha_i >= |b_ceil(i/2)|`` and at least one of those bounds attained)
    are checked only when assertions are enabled, i.e. not under ``python -O``.
    """

    alpha: tuple
    beta: tuple

    def __post_init__(self):
        alpha, beta = tuple(self.alpha), tuple(self.beta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        if len(beta) < 2 or len(alpha) != 2 * (len(beta) - 1):
            raise DynnikovError(
                f"need 2n-4 alpha and n-1 beta measures, got {len(alpha)} and {len(beta)}"
            )
        if __debug__:
            self.check()

    @property
    def n(self) -> int:
        return len(self.beta) + 1

    def check(self) -> None:
        """Raise ``DynnikovError`` unless the stated inequalities hold."""
        if any(v < 0 for v in self.alpha + self.beta):
            raise DynnikovError("arc measures must be non-negative")
        # Compare 2*alpha with |2b| so integer input never needs halving here.
        tight = any(v == 0 for v in self.beta)
        for i, mu in enumerate(self.alpha):
            c = i // 2
            twice_b = abs(self.beta[c] - self.beta[c + 1])
            if 2 * mu < twice_b:
                raise DynnikovError(f"alpha_{i + 1} = {mu} is below |b_{c + 1}|")
            tight = tight or 2 * mu == twice_b
        if not tight:
            raise DynnikovError("no inequality is attained: boundary-parallel leaf")


def triangle_to_dynnikov(tri: TriangleCoordinates) -> DynnikovCoordinates:
    al, be = tri.alpha, tri.beta
    a = tuple(_half(al[2 * i + 1] - al[2 * i]) for i in range(tri.n - 2))
    b = tuple(_half(be[i] - be[i + 1]) for i in range(tri.n - 2))
    return DynnikovCoordinates(a, b)


def beta_measures(x: DynnikovCoordinates) -> list:
    """Measures of the arcs ``beta_1..beta_{n-1}`` (first half of the inversion)."""
    best = None
    partial = 0
    for ak, bk in zip(x.a, x.b):
        t = abs(ak) + max(bk, 0) + partial
        best = t if best is None else max(best, t)
        partial += bk
    out = [2 * best]
    for bk in x.b:
        out.append(out[-1] - 2 * bk)
    return out


def alpha_measure(x: DynnikovCoordinates, beta: Sequence, i: int, branch: str = "auto"):
    """
    Measure of ``alpha_i`` (1-based) given the beta measures.

    ``branch`` selects the formula: ``"upper"`` uses ``beta_c`` (valid when
    ``b_c >= 0``), ``"lower"`` uses ``beta_{c+1}`` (valid when ``b_c <= 0``),
    where ``c = ceil(i/2)``. ``"auto"`` picks by the sign of ``b_c``; both
    agree when ``b_c == 0``.
    """
    c = (i + 1) // 2
    if branch == "auto":
        branch = "upper" if x.b[c - 1] >= 0 else "lower"
    if branch == "upper":
        half_beta = _half(beta[c - 1])
    elif branch == "lower":
        half_beta = _half(beta[c])
    else:
        raise ValueError(f"unknown branch {branch!r}")
    sign = 1 if i % 2 == 0 else -1
    return sign * x.a[c - 1] + half_beta


def dynnikov_to_triangle(coords: DynnikovCoordinates) -> TriangleCoordinates:
    """Triangle coordinates of the unique class with the given Dynnikov coordinates."""
    beta = beta_measures(coords)
    alpha = tuple(alpha_measure(coords, beta, i) for i in range(1, 2 * coords.n - 3))
    return TriangleCoordinates(alpha, tuple(beta))


class Involution(enum.Enum):
    """Symmetries of the disk, each acting on coordinates as an involution."""

    HORIZONTAL = "horizontal"   # sigma_i -> sigma_i^-1
    VERTICAL = "vertical"       # sigma_i -> sigma_{n-i}^-1
    ROTATION = "rotation"       # sigma_i -> sigma_{n-i}


def _involute(a: list, b: list, kind: Involution) -> tuple[list, list]:
    if kind is Involution.HORIZONTAL:
        return [-v for v in a], list(b)
    if kind is Involution.VERTICAL:
        return a[::-1], [-v for v in reversed(b)]
    if kind is Involution.ROTATION:
        return [-v for v in reversed(a)], [-v for v in reversed(b)]
    raise TypeError(f"not an involution: {kind!r}")


def apply_involution(coords: DynnikovCoordinates, kind: Involution) -> DynnikovCoordinates:
    a, b = _involute(list(coords.a), list(coords.b), Involution(kind))
    return DynnikovCoordinates(a, b)


def _parse_scalar(token: str):
    token = token.strip()
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        raise DynnikovError(f"not a number: {token!r}") from None


def parse_coords(text: str, n: int | None = None) -> DynnikovCoordinates:
    """
    Parse ``"a1,...,a(n-2);b1,...,b(n-2)"``.

    Entries are integers unless any entry is written as a decimal, in which
    case all entries become floats.
    """
    parts = text.split(";")
    if len(parts) != 2:
        raise DynnikovError(f"expected 'a-list;b-list', got {text!r}")
    a, b = ([_parse_scalar(t) for t in p.split(",") if t.strip()] for p in parts)
    if any(isinstance(v, float) for v in a + b):
        a, b = [float(v) for v in a], [float(v) for v in b]
    x = DynnikovCoordinates(a, b)
    if n is not None and x.n != n:
        raise DynnikovError(f"coordinates have {x.n} punctures, expected {n}")
    return x


def _fmt(v) -> str:
    return repr(v) if isinstance(v, float) else str(v)


def format_coords(x: DynnikovCoordinates) -> str:
    return ",".join(map(_fmt, x.a)) + ";" + ",".join(map(_fmt, x.b))


def format_triangle(t: TriangleCoordinates) -> str:
    return ",".join(map(_fmt, t.alpha)) + ";" + ",".join(map(_fmt, t.beta))
