import pytest
from hypothesis import strategies as st

from dynnikov import DynnikovCoordinates

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def coordinates(draw, min_n=3, max_n=12, bound=50):
    n = draw(st.integers(min_n, max_n))
    entries = st.integers(-bound, bound)
    a = draw(st.lists(entries, min_size=n - 2, max_size=n - 2))
    b = draw(st.lists(entries, min_size=n - 2, max_size=n - 2))
    if not any(a) and not any(b):
        a[0] = 1
    return DynnikovCoordinates(a, b)


@pytest.fixture
def s1():
    """The curve system fixed by sigma_{1,2} in B_4."""
    return DynnikovCoordinates((2, 1), (1, 1))


def beta_branch_point(rng, m, n, bound=50):
    """
    Random integer point on which Beta(m, n) acts by its resolved linear form.

    Built from the constraints directly: a forward chain a_{i+1} = a_i + b_i
    up to a_{m-1}, a backward chain a_i = a_{i+1} + b_i down to a_{m+1} from
    a_{m+n-1} <= min(b_{m+n-1}, 0), then a_m below every bound it must respect.
    """
    top = m + n - 1
    b = [None] + [rng.randint(-bound, 0) for _ in range(top)]
    a = [None] * (top + 1)
    a[1] = rng.randint(-bound, 0)
    for i in range(1, m - 1):
        a[i + 1] = a[i] + b[i]
    a[top] = min(b[top], 0) - rng.randint(0, bound)
    for i in range(top - 1, m, -1):
        a[i] = a[i + 1] + b[i]
    a[m] = min(a[m - 1] + b[m - 1], a[m + 1] - b[m], 0) - rng.randint(0, bound)
    return DynnikovCoordinates(a[1:], b[1:])
