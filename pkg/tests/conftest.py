from fractions import Fraction

from hypothesis import strategies as st

from qgalois.coeff import LaurentCoeff


@st.composite
def laurent(draw, max_terms=4, span=5):
    exps = draw(st.lists(st.integers(-span, span), max_size=max_terms, unique=True))
    coeffs = draw(st.lists(
        st.fractions(min_value=-5, max_value=5, max_denominator=6).filter(bool),
        min_size=len(exps), max_size=len(exps)))
    return LaurentCoeff(dict(zip(exps, coeffs)))


nonzero_rational = st.fractions(min_value=Fraction(-4), max_value=Fraction(4),
                                max_denominator=5).filter(bool)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
