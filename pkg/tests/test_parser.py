from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qgalois import cmod, galois, s7, suq2
from qgalois.cmod import CElement, CIndex
from qgalois.coeff import LaurentCoeff
from qgalois.parser import ParseError, parse, parse_element
from qgalois.s7 import PElement
from qgalois.suq2 import Su2Element

from conftest import laurent

q = LaurentCoeff.q


def test_examples():
    assert parse_element("z1 z4* - z2 z3*", "P") == galois.a_n(0)
    assert parse_element("r[0,0,0]", "C") == CElement.one()
    with pytest.raises(ParseError, match="unknown token"):
        parse("z5", "P")


def test_named_generators():
    gens = galois.b_generators()
    assert parse_element("A", "P") == gens["a"]
    assert parse_element("A*", "P") == gens["a*"]
    assert parse_element("B*", "P") == gens["b*"]
    assert parse_element("RR", "P") == gens["R"]
    assert parse_element("Bn(1)", "P") == galois.b_n(1)
    assert parse_element("An(-2)*", "P") == s7.star(galois.a_n(-2))


def test_coefficients_and_powers():
    x = parse_element("3/2*q^-1*z1^2 z3* - (1 + -1*q^2)*z4 + 2", "P")
    assert x.coefficient(s7.PMonomial(2, 0, 0, 0, 0, 0, 1, 0)) == LaurentCoeff({-1: Fraction(3, 2)})
    assert x.coefficient(s7.PMonomial(0, 0, 0, 1)) == q(2) - 1
    assert x.coefficient(s7.UNIT) == 2
    assert len(x.terms) == 3
    assert parse_element("q*z1", "P") == s7.z(1).scale(q(1))
    assert parse_element("z2 z1", "P") == parse_element("q^-1*z1 z2", "P")


def test_su2_context():
    assert parse_element("d a", "SU2") == suq2.nf("da")
    assert parse_element("b^2 c", "SU2") == suq2.monomial(0, 2, 1)


def test_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        parse("z1 +\n  z7", "P")
    assert (exc.value.line, exc.value.col) == (2, 3)
    with pytest.raises(ParseError, match="negative exponent"):
        parse("z1^-2", "P")
    with pytest.raises(ParseError, match="context violation"):
        parse("a b", "P")
    with pytest.raises(ParseError, match="context violation"):
        parse("z1", "SU2")
    with pytest.raises(ParseError, match="context violation"):
        parse("r[1,0,0]", "P")
    with pytest.raises(ParseError):
        parse_element("r[0,0,0] r[1,0,0]", "C")
    with pytest.raises(ParseError):
        parse("r[0,-1,0]", "C")
    with pytest.raises(ParseError):
        parse("z1 + ", "P")
    with pytest.raises(ParseError):
        parse("(1 + q", "P")
    with pytest.raises(ParseError):
        parse("z1 $", "P")
    with pytest.raises(ValueError):
        parse("z1", "Q")


P_BASIS = [s7.monomial(*m) for m in s7.basis_upto(3)]
C_BASIS = [CElement.basis(CIndex(*k)) for k in cmod.basis_upto(3)]
SU_BASIS = [Su2Element.basis(k) for k in suq2.basis_upto(3)]


def _combo(basis):
    return st.lists(st.tuples(st.sampled_from(basis), laurent(max_terms=3)), max_size=4)


def _sum(pairs, zero):
    out = zero
    for b, c in pairs:
        out = out + b.scale(c)
    return out


@settings(max_examples=150, deadline=None)
@given(_combo(P_BASIS))
def test_round_trip_p(pairs):
    x = _sum(pairs, PElement.zero())
    if x.is_zero():
        return
    assert parse_element(x.render(), "P") == x


@settings(max_examples=100, deadline=None)
@given(_combo(C_BASIS))
def test_round_trip_c(pairs):
    x = _sum(pairs, CElement.zero())
    if x.is_zero():
        return
    assert parse_element(x.render(), "C") == x


@settings(max_examples=100, deadline=None)
@given(_combo(SU_BASIS))
def test_round_trip_su2(pairs):
    x = _sum(pairs, Su2Element.zero())
    if x.is_zero():
        return
    assert parse_element(x.render(), "SU2") == x
