import pytest
from hypothesis import given, strategies as st

from dynnikov import (
    DegenerateCoordinatesError,
    DynnikovCoordinates,
    DynnikovError,
    Involution,
    ParityError,
    TriangleCoordinates,
    apply_involution,
    dynnikov_to_triangle,
    format_coords,
    parse_coords,
    triangle_to_dynnikov,
)
from dynnikov.coords import alpha_measure, beta_measures

from conftest import coordinates

EXAMPLES = [
    # (alpha, beta, a, b), all evaluated by hand from the half-difference
    # formulas and the inversion formulas.
    ((1, 1), (2, 0), (0,), (1,)),
    ((1, 5, 1, 3), (6, 4, 2), (2, 1), (1, 1)),
    ((0, 2), (2, 2), (1,), (0,)),
]


@pytest.mark.parametrize("alpha, beta, a, b", EXAMPLES)
def test_triangle_to_dynnikov(alpha, beta, a, b):
    assert triangle_to_dynnikov(TriangleCoordinates(alpha, beta)) == DynnikovCoordinates(a, b)


@pytest.mark.parametrize("alpha, beta, a, b", EXAMPLES)
def test_dynnikov_to_triangle(alpha, beta, a, b):
    t = dynnikov_to_triangle(DynnikovCoordinates(a, b))
    assert t.alpha == alpha
    assert t.beta == beta


def test_zero_vector_rejected():
    with pytest.raises(DegenerateCoordinatesError):
        DynnikovCoordinates((0, 0), (0, 0))
    with pytest.raises(DegenerateCoordinatesError):
        triangle_to_dynnikov(_raw_triangle((1, 1), (1, 1)))


def _raw_triangle(alpha, beta):
    t = object.__new__(TriangleCoordinates)
    object.__setattr__(t, "alpha", alpha)
    object.__setattr__(t, "beta", beta)
    return t


def test_parity_error():
    with pytest.raises(ParityError):
        triangle_to_dynnikov(_raw_triangle((1, 2), (2, 0)))


def test_real_mode_halves():
    x = triangle_to_dynnikov(TriangleCoordinates((0.5, 1.5), (2.0, 1.0)))
    assert x == DynnikovCoordinates((0.5,), (0.5,))


def test_length_checks():
    with pytest.raises(DynnikovError):
        DynnikovCoordinates((1, 2), (1,))
    with pytest.raises(DynnikovError):
        DynnikovCoordinates((), ())
    with pytest.raises(DynnikovError):
        TriangleCoordinates((1, 1, 1), (2, 0))


def test_triangle_invariants_checked():
    with pytest.raises(DynnikovError, match="non-negative"):
        TriangleCoordinates((-1, 1), (2, 0))
    with pytest.raises(DynnikovError, match="below"):
        TriangleCoordinates((0, 2), (4, 0))
    with pytest.raises(DynnikovError, match="boundary-parallel"):
        TriangleCoordinates((2, 2), (3, 3))


INVOLUTION_EXAMPLES = [
    (Involution.HORIZONTAL, (-1, -2), (-1, 3)),
    (Involution.VERTICAL, (2, 1), (-3, 1)),
    (Involution.ROTATION, (-2, -1), (-3, 1)),
]


@pytest.mark.parametrize("kind, a, b", INVOLUTION_EXAMPLES)
def test_involution_examples(kind, a, b):
    x = DynnikovCoordinates((1, 2), (-1, 3))
    assert apply_involution(x, kind) == DynnikovCoordinates(a, b)


@given(coordinates(), st.sampled_from(list(Involution)))
def test_involutions_self_inverse(x, kind):
    assert apply_involution(apply_involution(x, kind), kind) == x


@given(coordinates())
def test_round_trip(x):
    assert triangle_to_dynnikov(dynnikov_to_triangle(x)) == x


@given(coordinates())
def test_inversion_output_tight(x):
    # Construction re-checks non-negativity and that some bound is attained.
    t = dynnikov_to_triangle(x)
    t.check()
    assert min(t.alpha + t.beta) >= 0


@given(coordinates(), st.data())
def test_branch_agreement_at_zero_b(x, data):
    c = data.draw(st.integers(0, x.n - 3))
    b = list(x.b)
    b[c] = 0
    x = DynnikovCoordinates(x.a, b) if any(x.a) or any(b) else DynnikovCoordinates((1,) * len(b), b)
    beta = beta_measures(x)
    for i in (2 * c + 1, 2 * c + 2):
        assert alpha_measure(x, beta, i, "upper") == alpha_measure(x, beta, i, "lower")


@given(coordinates(), st.integers(1, 20))
def test_positive_homogeneity(x, lam):
    t, s = dynnikov_to_triangle(x), dynnikov_to_triangle(x.scaled(lam))
    assert s.alpha == tuple(lam * v for v in t.alpha)
    assert s.beta == tuple(lam * v for v in t.beta)


@given(coordinates())
def test_text_round_trip(x):
    assert parse_coords(format_coords(x), x.n) == x


def test_parse_coords():
    assert parse_coords("2,1;1,1") == DynnikovCoordinates((2, 1), (1, 1))
    x = parse_coords("0.5;-1")
    assert x.a == (0.5,) and x.b == (-1.0,)
    with pytest.raises(DynnikovError):
        parse_coords("1,2;3")
    with pytest.raises(DynnikovError):
        parse_coords("1;2", n=4)
    with pytest.raises(DynnikovError):
        parse_coords("x;1")
