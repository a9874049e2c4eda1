"""
Dynamics of the coordinate action.

Iterating a braid on an integral lamination and measuring how fast the
coordinates grow estimates the topological entropy; for pseudo-Anosov braids
the projectivized orbit is attracted to the unstable foliation and the growth
per step tends to the log of the dilatation. Iteration is exact: entries are
Python ints and each iterate is divided by its integer content, which by
homogeneity of the action does not change later normalized iterates. An
exact projective repeat is therefore a certified periodic orbit.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .braid import BraidWord
from .coords import DynnikovCoordinates
from .errors import DynnikovError, NoRootError, StrandMismatchError
from .update import act_lists, apply_word

DEFAULT_WINDOW = 10
DEFAULT_MAX_ITER = 300
DEFAULT_TOL = 1e-10


class EntropyStatus(enum.Enum):
    CONVERGED = "converged"
    MAX_ITERATIONS = "max_iterations"
    COLLAPSED_TO_PERIODIC = "collapsed_to_periodic"


@dataclass
class EntropyReport:
    estimate: float
    iterations: int
    seed: DynnikovCoordinates
    status: EntropyStatus
    history: list[float] = field(default_factory=list)

    @property
    def dilatation(self) -> float:
        return math.exp(self.estimate)


class OrbitKind(enum.Enum):
    FIXED_POINT = "fixed_point"
    PERIODIC = "periodic"
    GROWING = "growing"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class OrbitClassification:
    kind: OrbitKind
    period: int | None = None
    rate: float | None = None
    iterations: int = 0

    def __str__(self) -> str:
        if self.kind is OrbitKind.PERIODIC:
            return f"periodic({self.period})"
        if self.kind is OrbitKind.GROWING:
            return f"growing({self.rate:.10g})"
        return self.kind.value


@dataclass(frozen=True)
class EigenCheck:
    passed: bool
    max_rel_err: float


def _check_seed(w: BraidWord, seed: DynnikovCoordinates) -> None:
    if w.n != seed.n:
        raise StrandMismatchError(
            f"braid on {w.n} strands cannot act on coordinates with {seed.n} punctures"
        )
    if not seed.is_integral():
        raise DynnikovError("orbit iteration needs an integral seed")


def _normalize(v: list) -> tuple:
    g = math.gcd(*v)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _orbit(w: BraidWord, seed: DynnikovCoordinates) -> Iterator[tuple[tuple, float]]:
    """Yield ``(content-normalized iterate, log growth of the step)`` forever."""
    h = seed.n - 2
    x = _normalize(list(seed.flat()))
    log_norm = math.log(max(abs(v) for v in x))
    while True:
        a, b = act_lists(x[:h], x[h:], w)
        y = a + b
        log_y = math.log(max(abs(v) for v in y))
        x = _normalize(y)
        yield x, log_y - log_norm
        log_norm = math.log(max(abs(v) for v in x))


def _windowed(history: list[float], window: int) -> tuple[float, float]:
    tail = history[-window:]
    return sum(tail) / len(tail), max(tail) - min(tail)


def entropy_estimate(
    w: BraidWord,
    seed: DynnikovCoordinates,
    max_iter: int = DEFAULT_MAX_ITER,
    tol: float = DEFAULT_TOL,
    window: int = DEFAULT_WINDOW,
) -> EntropyReport:
    """
    Growth rate (in nats per application of ``w``) of the orbit of ``seed``.

    The estimate is the mean of the last ``window`` log-growth increments.
    Iteration stops early once those increments differ by less than ``tol``,
    or as soon as the normalized orbit returns to an earlier point, in which
    case the orbit is periodic and the estimate is exactly 0.
    """
    _check_seed(w, seed)
    start = _normalize(list(seed.flat()))
    seen = {start}
    history: list[float] = []
    status = EntropyStatus.MAX_ITERATIONS
    for x, inc in _orbit(w, seed):
        if len(history) >= max_iter:
            break
        history.append(inc)
        if x in seen:
            status = EntropyStatus.COLLAPSED_TO_PERIODIC
            break
        seen.add(x)
        if len(history) >= window and _windowed(history, window)[1] < tol:
            status = EntropyStatus.CONVERGED
            break
    if status is EntropyStatus.COLLAPSED_TO_PERIODIC or not history:
        estimate = 0.0
    else:
        estimate = max(0.0, _windowed(history, window)[0])
    return EntropyReport(estimate, len(history), seed, status, history)


def classify_orbit(
    w: BraidWord,
    seed: DynnikovCoordinates,
    max_iter: int = 1000,
    tol: float = 1e-9,
    window: int = DEFAULT_WINDOW,
) -> OrbitClassification:
    """
    Heuristic witness for the orbit type of ``seed`` under ``w``.

    FIXED_POINT and PERIODIC are certified by exact integer equality (the
    first return of the normalized orbit is to the seed, since the action is
    a bijection). GROWING means the windowed growth rate settled to a
    positive value; it is numerical evidence only. Anything else after
    ``max_iter`` steps is INCONCLUSIVE.
    """
    _check_seed(w, seed)
    start = _normalize(list(seed.flat()))
    seen = {start}
    history: list[float] = []
    for step, (x, inc) in enumerate(_orbit(w, seed), start=1):
        if step > max_iter:
            break
        history.append(inc)
        if x == start:
            if step == 1:
                return OrbitClassification(OrbitKind.FIXED_POINT, period=1, iterations=1)
            return OrbitClassification(OrbitKind.PERIODIC, period=step, iterations=step)
        if x in seen:
            # Unreachable for a bijective action; kept as a guard.
            break
        seen.add(x)
        if len(history) >= window:
            rate, spread = _windowed(history, window)
            if spread < tol and rate > tol:
                return OrbitClassification(OrbitKind.GROWING, rate=rate, iterations=step)
    return OrbitClassification(OrbitKind.INCONCLUSIVE, iterations=len(history))


def fixed_point_check(w: BraidWord, x: DynnikovCoordinates) -> bool:
    return apply_word(x, w) == x


def projective_eigen_check(
    w: BraidWord, x: DynnikovCoordinates, r: float, tol: float = 1e-9
) -> EigenCheck:
    """Relative residual ``max|w(x) - r x| / (r max|x|)`` against ``tol``."""
    if r <= 0:
        raise DynnikovError("eigenvalue must be positive")
    y = apply_word(x, w)
    scale = r * x.norm()
    err = max(abs(yi - r * xi) for yi, xi in zip(y.flat(), x.flat())) / scale
    return EigenCheck(err <= tol, float(err))


def find_root(
    p: Callable[[float], float],
    tol: float = 1e-12,
    lower_offset: float = 1e-9,
    cap: float = 2.0 ** 20,
) -> float:
    """
    Root of ``p`` in ``(1, inf)`` by bisection.

    The bracket starts at ``[1 + lower_offset, 2]`` and its upper end doubles
    until the sign changes. 1 itself is excluded since some of the
    polynomials of interest vanish there.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo, hi = 1.0 + lower_offset, 2.0
    f_lo = p(lo)
    if f_lo == 0:
        return lo
    while True:
        f_hi = p(hi)
        if f_hi == 0:
            return hi
        if (f_lo < 0) != (f_hi < 0):
            break
        hi *= 2
        if hi > cap:
            raise NoRootError(f"no sign change on [{lo}, {cap}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = p(mid)
        if f_mid == 0:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
