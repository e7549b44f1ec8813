import pytest
from hypothesis import strategies as st

from nullcert.polynomial import Polynomial, canonicalize
from nullcert.scalar import GaussianRational

ACCEPTANCE_LINES: list[str] = []


def gaussian_ints(bound=2):
    return st.builds(GaussianRational, st.integers(-bound, bound), st.integers(-bound, bound))


def gaussian_rationals():
    from fractions import Fraction

    frac = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 9))
    return st.builds(GaussianRational, frac, frac)


def monomials(n, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * n)


def polynomials(n, max_terms=4, max_exp=3, coeffs=None):
    if coeffs is None:
        coeffs = gaussian_ints()
    return st.lists(st.tuples(coeffs, monomials(n, max_exp)), max_size=max_terms).map(
        lambda raw: canonicalize(n, raw)
    )


def record(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def zero2():
    return Polynomial.zero(2)
