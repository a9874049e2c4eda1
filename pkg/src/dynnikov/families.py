"""
Two-parameter braid families and their closed-form invariants.

``Beta(m, n)`` is ``sigma_1 .. sigma_m sigma_{m+1}^-1 .. sigma_{m+n}^-1`` and
``Sigma(m, n)`` is ``sigma_1 .. sigma_m sigma_m .. sigma_1 sigma_1 .. sigma_{m+n}``,
both in ``B_{m+n+1}``. Every ``Beta`` braid is pseudo-Anosov with dilatation
the root in ``(1, inf)`` of

    f(r) = (r - 1)(r^{m+n+1} - 1) - 2r(r^m + r^n),

``Sigma(m, n)`` is pseudo-Anosov for ``n >= m + 2`` with dilatation the root
in ``(1, inf)`` of

    g(r) = (r - 1)(r^{m+n+1} + 1) + 2r(r^m - r^n),

and ``Sigma(m, m + 1)`` is reducible with an explicit invariant curve system.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord
from .coords import DynnikovCoordinates, lamination
from .errors import BranchHypothesisError, DynnikovError, NotPseudoAnosovError
from .spectral import find_root


@dataclass(frozen=True)
class Family:
    m: int
    n: int

    @property
    def strands(self) -> int:
        return self.m + self.n + 1


@dataclass(frozen=True)
class Beta(Family):
    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise DynnikovError(f"Beta needs m, n >= 1, got ({self.m}, {self.n})")


@dataclass(frozen=True)
class Sigma(Family):
    def __post_init__(self):
        if not 1 <= self.m <= self.n:
            raise DynnikovError(f"Sigma needs 1 <= m <= n, got ({self.m}, {self.n})")

    @property
    def pseudo_anosov(self) -> bool:
        return self.n >= self.m + 2


def family_word(fam: Family) -> BraidWord:
    m, n = fam.m, fam.n
    up = list(range(1, m + 1))
    if isinstance(fam, Beta):
        letters = up + [-i for i in range(m + 1, m + n + 1)]
    elif isinstance(fam, Sigma):
        letters = up + up[::-1] + list(range(1, m + n + 1))
    else:
        raise TypeError(f"unknown family {fam!r}")
    return BraidWord(fam.strands, tuple(letters))


@dataclass(frozen=True)
class CharacteristicPolynomial:
    family: Family

    def __call__(self, r: float) -> float:
        return char_poly_eval(self, r)


def char_poly_eval(p: CharacteristicPolynomial | Family, r: float) -> float:
    fam = p.family if isinstance(p, CharacteristicPolynomial) else p
    m, n = fam.m, fam.n
    if isinstance(fam, Beta):
        return (r - 1) * (r ** (m + n + 1) - 1) - 2 * r * (r ** m + r ** n)
    return (r - 1) * (r ** (m + n + 1) + 1) + 2 * r * (r ** m - r ** n)


def _require_pa(fam: Family) -> None:
    if isinstance(fam, Sigma) and not fam.pseudo_anosov:
        raise NotPseudoAnosovError(
            f"Sigma({fam.m}, {fam.n}) is not covered: pseudo-Anosov needs n >= m + 2"
        )


def dilatation(fam: Family, tol: float = 1e-12) -> float:
    _require_pa(fam)
    return find_root(CharacteristicPolynomial(fam), tol)


def unstable_coords(fam: Family, r: float) -> DynnikovCoordinates:
    """
    Coordinates of the unstable foliation, as functions of the dilatation.

    The vector is only an eigenvector when ``r`` is the actual dilatation;
    any ``r > 1`` is accepted so callers can probe the formulas.
    """
    _require_pa(fam)
    if not r > 1:
        raise DynnikovError("r must exceed 1")
    m, n = fam.m, fam.n
    a, b = [], []
    if isinstance(fam, Beta):
        for i in range(1, m + n):
            if i < m:
                a.append(-r * (r ** n + 1) * (r ** i - 1))
                b.append(-(r - 1) * (r ** n + 1) * r ** (i + 1))
            elif i == m:
                a.append(-(r ** (m + 1) - 1) * (r ** (n + 1) - 1))
                b.append(-(r + 1) * (r ** (m + 1) - 1))
            else:
                a.append(-(r ** (m + 1) - 1) * (r ** (m + n + 1 - i) - 1) * r ** (i - m))
                b.append(-(r - 1) * (r ** (m + 1) - 1) * r ** (i - m))
    else:
        for i in range(1, m + n):
            if i < m:
                a.append(r * (r ** n - 1) * (r ** (i + 1) - 1))
                b.append((r - 1) * (r ** n - 1) * r ** (i + 1))
            else:
                a.append((r ** (m + 1) - 1) * (r ** (m + n - i) - 1) * r ** (i + 1 - m))
                b.append((r - 1) * (r ** (m + 1) - 1) * r ** (i - m))
    return DynnikovCoordinates(a, b)


def reducing_system(m: int) -> DynnikovCoordinates:
    """Integral coordinates of the curve system fixed by ``Sigma(m, m + 1)``."""
    if m < 1:
        raise DynnikovError("reducing system needs m >= 1")
    a = [i + 1 for i in range(1, m + 1)] + [2 * m + 1 - i for i in range(m + 1, 2 * m + 1)]
    return lamination(a, [1] * (2 * m))


def _slack(x: DynnikovCoordinates, tol) -> float:
    if tol is not None:
        return tol
    return 0 if x.is_integral() else 1e-9 * x.norm()


def beta_hypotheses(x: DynnikovCoordinates, m: int, n: int, tol=None) -> list[str]:
    """
    Names of the violated inequalities under which ``Beta(m, n)`` acts linearly.

    An empty list means ``resolved_beta_action`` applies. Exact for integer
    input; real input is judged with slack ``tol`` (default ``1e-9`` times the
    max-norm).
    """
    if m < 2 or n < 2:
        raise DynnikovError("the resolved form is stated for m, n >= 2")
    if x.n != m + n + 1:
        raise DynnikovError(f"expected {m + n + 1} punctures, got {x.n}")
    eps = _slack(x, tol)
    A, B = (None, *x.a), (None, *x.b)
    top = m + n - 1
    bad = []
    for i in range(1, top + 1):
        if A[i] > eps:
            bad.append(f"a_{i} <= 0")
        if B[i] > eps:
            bad.append(f"b_{i} <= 0")
    for i in range(1, m - 1):
        if abs(A[i + 1] - (A[i] + B[i])) > eps:
            bad.append(f"a_{i + 1} = a_{i} + b_{i}")
    if A[m] > A[m - 1] + B[m - 1] + eps:
        bad.append(f"a_{m} <= a_{m - 1} + b_{m - 1}")
    if A[m + 1] < A[m] + B[m] - eps:
        bad.append(f"a_{m + 1} >= a_{m} + b_{m}")
    for i in range(m + 1, top):
        if abs(A[i + 1] - (A[i] - B[i])) > eps:
            bad.append(f"a_{i + 1} = a_{i} - b_{i}")
    if A[top] > B[top] + eps:
        bad.append(f"a_{top} <= b_{top}")
    if _xi(A, B, m) < -eps:
        bad.append("xi >= 0")
    return bad


def _xi(A, B, m):
    return -A[1] + (A[m - 1] + B[m - 1] - A[m]) + (A[m + 1] - A[m] - B[m])


def resolved_beta_action(x: DynnikovCoordinates, m: int, n: int, tol=None) -> DynnikovCoordinates:
    """
    ``Beta(m, n)`` acting on ``x`` through its linear form on the branch
    containing the unstable foliation. Raises ``BranchHypothesisError`` when
    ``x`` is off that branch rather than falling back to the general rules.
    """
    bad = beta_hypotheses(x, m, n, tol)
    if bad:
        raise BranchHypothesisError("hypotheses violated: " + ", ".join(bad))
    A, B = (None, *x.a), (None, *x.b)
    top = m + n - 1
    xi = _xi(A, B, m)
    na, nb = [None] * (top + 1), [None] * (top + 1)
    na[1] = B[1]
    for i in range(2, m - 1):
        na[i] = A[i + 1] - A[1]
    if m - 1 >= 2:
        na[m - 1] = A[m - 1] + B[m - 1] - A[1]
    for i in range(m, top):
        na[i] = A[i + 1] - xi
    na[top] = A[top] - B[top] - xi
    for i in range(1, m - 1):
        nb[i] = B[i + 1]
    nb[m - 1] = A[m] - A[m - 1] + B[m] - B[m - 1]
    nb[m] = A[m] - A[m + 1] + B[m] + B[m + 1]
    for i in range(m + 1, top):
        nb[i] = B[i + 1]
    nb[top] = A[top] - B[top]
    return DynnikovCoordinates(na[1:], nb[1:])
