"""
Piecewise-linear action of braids on Dynnikov coordinates.

The update rules are max-plus rational functions. They are written out here
by hand in ordinary arithmetic, reading ``[x + y]`` as ``max(x, y)``,
``[xy]`` as ``x + y``, ``[x / y]`` as ``x - y`` and ``[1]`` as ``0``.

Braids act from the left to the right: the word ``w1 w2`` sends ``x`` to
``w2(w1(x))``.

The private helpers work on 0-based Python lists ``a``, ``b`` of length
``n - 2``. The band rules copy into 1-based lists first so the formulas can
be read against their standard indexing.
"""

from __future__ import annotations

from .braid import BandGenerator, BandKind, BraidWord, decompose_into_bands
from .coords import DynnikovCoordinates, Involution, _involute
from .errors import BraidWordError, StrandMismatchError


def _sigma(a: list, b: list, i: int) -> None:
    """In-place action of ``sigma_i``."""
    if i == 1:
        x, y = a[0], b[0]
        a[0] = x + y - max(x, 0, y)
        b[0] = max(y, 0) - x
    elif i == len(a) + 1:
        x, y = a[-1], b[-1]
        py = max(y, 0)
        a[-1] = max(x + py, y)
        b[-1] = y - x - py
    else:
        j = i - 2
        A, B, x, y = a[j], b[j], a[j + 1], b[j + 1]
        pB, py = max(B, 0), max(y, 0)
        c = max(A + pB + py, x + B)
        a[j] = max(A + pB, x + B)
        b[j] = x + B + y - c
        a[j + 1] = A + x + y - max(A + py, x)
        b[j + 1] = c - x


def _sigma_inv(a: list, b: list, i: int) -> None:
    """In-place action of ``sigma_i^-1``."""
    if i == 1:
        x, y = a[0], b[0]
        py = max(y, 0)
        a[0] = max(0, x + py) - y
        b[0] = x + py
    elif i == len(a) + 1:
        x, y = a[-1], b[-1]
        a[-1] = x - max(x + y, 0, y)
        b[-1] = x + y - max(y, 0)
    else:
        j = i - 2
        A, B, x, y = a[j], b[j], a[j + 1], b[j + 1]
        pB, py = max(B, 0), max(y, 0)
        d = max(A + B, x + pB + py)
        a[j] = A + x - max(A + B, x + pB)
        b[j] = A + B + y - d
        a[j + 1] = max(A, x + py) - y
        b[j + 1] = d - A


def _letter(a: list, b: list, e: int) -> None:
    if e > 0:
        _sigma(a, b, e)
    else:
        _sigma_inv(a, b, -e)


def _gamma(a: list, b: list, k: int, l: int) -> tuple[list, list]:
    """Action of ``sigma_k sigma_{k+1} ... sigma_l`` via prefix tables."""
    m = len(a)  # n - 2
    A = [None, *a]
    B = [None, *b]
    top = min(l, m)

    # P[j] for k-1 <= j <= top: (1 + b_{k-1}) b_k ... b_j, with no leading
    # factor when k = 1 (so P[0] is the max-plus unit).
    P = [None] * (m + 1)
    P[k - 1] = 0 if k == 1 else max(B[k - 1], 0)
    for j in range(k, top + 1):
        P[j] = P[j - 1] + B[j]
    # S[j] for k <= j <= top: running max of (1 + b_i) P_{i-1} / a_i.
    S = [None] * (m + 1)
    run = None
    for j in range(k, top + 1):
        t = max(B[j], 0) + P[j - 1] - A[j]
        run = t if run is None else max(run, t)
        S[j] = run

    na, nb = A[:], B[:]
    last = l if l <= m else m  # inner formulas cover k(-1) <= j < last
    if k > 1:
        K = k - 1
        aK, bK = A[K], B[K]
        if k <= m:
            pK = max(bK, 0)
            na[K] = max(aK + pK, A[k] + bK)
            nb[K] = A[k] + bK + B[k] - max(aK + pK + max(B[k], 0), A[k] + bK)
        for j in range(k, last):
            na[j] = max(A[j + 1] + bK, aK + max(A[j + 1] + S[j], P[j]))
            nb[j] = B[j + 1] + max(bK, aK + S[j]) - max(bK, aK + S[j + 1])
        if l <= m:
            c = max(bK, aK + S[l])
            na[l] = aK + P[l] - max(0, c)
            nb[l] = c
        elif k == m + 1:
            # sigma_{n-1} alone: the S sum is empty.
            na[m] = max(bK, aK + P[m])
            nb[m] = bK - aK - P[m]
        else:
            na[m] = max(bK, aK + max(S[m], P[m]))
            nb[m] = max(bK - aK, S[m]) - P[m]
    else:
        for j in range(1, last):
            na[j] = max(P[j], A[j + 1] + S[j])
            nb[j] = B[j + 1] + S[j] - S[j + 1]
        if l <= m:
            na[l] = P[l] - max(0, S[l])
            nb[l] = S[l]
        else:
            na[m] = max(P[m], S[m])
            nb[m] = S[m] - P[m]
    return na[1:], nb[1:]


def _delta(a: list, b: list, k: int, l: int) -> tuple[list, list]:
    """Action of ``sigma_l ... sigma_{k+1} sigma_k`` via suffix tables."""
    m = len(a)
    A = [None, *a]
    B = [None, *b]
    lo = max(k - 1, 1)

    # Pt[j] for lo <= j <= l: (1 + b_l) / (b_j ... b_l); when l = n-1 the
    # factors involving b_{n-1} drop out and Pt[n-1] is the unit.
    Pt = [None] * (l + 1)
    Pt[l] = 0 if l == m + 1 else max(B[l], 0) - B[l]
    for j in range(l - 1, lo - 1, -1):
        Pt[j] = Pt[j + 1] - B[j]
    # St[j] for lo <= j <= l-1: running max from the right.
    St = [None] * (l + 1)
    run = None
    for j in range(l - 1, lo - 1, -1):
        t = A[j] + max(B[j], 0) + Pt[j + 1] - B[j]
        run = t if run is None else max(run, t)
        St[j] = run

    na, nb = A[:], B[:]
    if l <= m:
        aL, bL = A[l], B[l]
        if k == 1:
            first = 2
            if l == 1:
                # sigma_1 alone: the St sum is empty.
                na[1] = aL + bL - max(aL, bL + Pt[1])
                nb[1] = bL + Pt[1] - aL
            else:
                na[1] = aL + bL - max(aL, bL + max(St[1], Pt[1]))
                nb[1] = bL + Pt[1] - max(aL, bL + St[1])
        else:
            first = k
            K = k - 1
            na[K] = max(aL + max(bL, 0), bL + St[K]) - bL - Pt[K]
            nb[K] = aL + bL - max(aL, bL + St[K])
        if l >= first:
            for j in range(first, l):
                na[j] = A[j - 1] + aL + bL - max(aL, bL + max(St[j], A[j - 1] + Pt[j]))
                nb[j] = B[j - 1] + max(aL, bL + St[j - 1]) - max(aL, bL + St[j])
            p, q = A[l - 1], B[l - 1]
            na[l] = p + aL + bL - max(p + max(bL, 0), aL)
            nb[l] = max(p + max(q, 0) + max(bL, 0), aL + q) - aL
    else:
        first = 2 if k == 1 else k
        for j in range(first, m + 1):
            na[j] = A[j - 1] - max(A[j - 1] + Pt[j], St[j])
            nb[j] = B[j - 1] + St[j - 1] - St[j]
        if k == 1:
            na[1] = -max(Pt[1], St[1])
            nb[1] = Pt[1] - St[1]
        else:
            K = k - 1
            na[K] = max(0, St[K]) - Pt[K]
            nb[K] = -St[K]
    return na[1:], nb[1:]


def _band(a: list, b: list, g: BandGenerator) -> tuple[list, list]:
    n = len(a) + 2
    if g.kind is BandKind.GAMMA:
        return _gamma(a, b, g.k, g.l)
    if g.kind is BandKind.DELTA:
        return _delta(a, b, g.k, g.l)
    if g.kind is BandKind.EPSILON:
        h = Involution.HORIZONTAL
        a, b = _involute(a, b, h)
        a, b = _gamma(a, b, g.k, g.l)
        return _involute(a, b, h)
    v = Involution.VERTICAL
    a, b = _involute(a, b, v)
    a, b = _gamma(a, b, n - g.l, n - g.k)
    return _involute(a, b, v)


def _check_strands(n_word: int, x: DynnikovCoordinates) -> None:
    if n_word != x.n:
        raise StrandMismatchError(
            f"braid on {n_word} strands cannot act on coordinates with {x.n} punctures"
        )


def apply_signed_generator(x: DynnikovCoordinates, e: int) -> DynnikovCoordinates:
    if e == 0 or abs(e) > x.n - 1:
        raise BraidWordError(f"generator {e} out of range for n={x.n}")
    a, b = list(x.a), list(x.b)
    _letter(a, b, e)
    return DynnikovCoordinates(a, b)


def apply_band(x: DynnikovCoordinates, g: BandGenerator) -> DynnikovCoordinates:
    _check_strands(g.n, x)
    a, b = _band(list(x.a), list(x.b), g)
    return DynnikovCoordinates(a, b)


def act_lists(a: list, b: list, w: BraidWord, use_bands: bool = False) -> tuple[list, list]:
    """Apply ``w`` to plain lists; returns new lists and leaves inputs untouched."""
    a, b = list(a), list(b)
    if use_bands:
        for g in decompose_into_bands(w):
            a, b = _band(a, b, g)
    else:
        for e in w.letters:
            _letter(a, b, e)
    return a, b


def apply_word(
    x: DynnikovCoordinates, w: BraidWord, use_bands: bool = False
) -> DynnikovCoordinates:
    """
    Image of ``x`` under ``w``, letters acting left to right.

    With ``use_bands`` the word is first split into monotone runs and each
    run is applied in one pass. The result is identical either way.
    """
    _check_strands(w.n, x)
    a, b = act_lists(x.a, x.b, w, use_bands)
    return DynnikovCoordinates(a, b)
