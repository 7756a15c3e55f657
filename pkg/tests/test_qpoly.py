from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from qcomp.qpoly import (
    NEG_INF, NotDivisible, QPoly, TPoly, eval_qpoly, integrate_power_from_q, qpoly_div_exact,
)

q = QPoly.q()

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
qpolys = st.lists(fractions, max_size=6).map(QPoly)
nonzero_qpolys = qpolys.filter(lambda p: not p.is_zero())


def test_arith_examples():
    assert (1 - q) * (1 + q) == QPoly([1, 0, -1])
    p = QPoly([3, Fraction(1, 2)])
    assert p + QPoly() == p
    assert (1 + q) * (1 + q) == QPoly([1, 2, 1])


def test_canonical_form_and_degree():
    assert QPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert QPoly([0, 0]).degree == NEG_INF
    assert QPoly().degree != -1
    assert QPoly([0, 0, 5]).degree == 2
    assert q - q == QPoly()


def test_div_exact_examples():
    assert qpoly_div_exact(1 - q**2, 1 - q) == 1 + q
    assert qpoly_div_exact(QPoly(), 1 - q) == QPoly()
    assert qpoly_div_exact(6 * (1 - q**4), 1 - q) == QPoly([6, 6, 6, 6])


def test_div_exact_rejects_remainder():
    with pytest.raises(NotDivisible):
        qpoly_div_exact(1 + q**2, 1 - q)
    with pytest.raises(ZeroDivisionError):
        qpoly_div_exact(q, QPoly())


def test_integrate_examples():
    one = TPoly([1])
    assert integrate_power_from_q(one, 2) == TPoly([-q**2 / 2, 0, Fraction(1, 2)])
    assert integrate_power_from_q(one, 1) == TPoly([-q, 1])
    # (T - q)^2 / 2
    assert integrate_power_from_q(TPoly([-q, 1]), 1) == TPoly([q**2 / 2, -q, Fraction(1, 2)])


def test_eval_examples():
    assert eval_qpoly(QPoly([1, 3]), 1) == 4
    assert eval_qpoly(QPoly([7, 3, 5]), 0) == 7
    assert eval_qpoly(QPoly([6, 4, 2]), 1) == 12


def test_render():
    assert QPoly([2, 4, 6]).render() == "6q^2+4q+2"
    assert (1 - q).render() == "1-q"
    assert QPoly([Fraction(1, 8), Fraction(1, 4), Fraction(1, 8)]).render() == "(1/8)q^2+(1/4)q+(1/8)"
    assert QPoly().render() == "0"
    assert QPoly([0, -1, 3]).render() == "3q^2-q"


@given(qpolys, qpolys, qpolys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert (a - b) + b == a


@given(qpolys, nonzero_qpolys)
def test_div_exact_inverts_mul(a, b):
    assert qpoly_div_exact(a * b, b) == a


@given(qpolys)
def test_json_round_trip(p):
    data = p.to_json()
    assert all(isinstance(s, str) for s in data)
    assert QPoly.from_json(data) == p
    assert QPoly.from_json(data).to_json() == data


def test_json_form():
    assert QPoly([Fraction(1, 2), -1, 0]).to_json() == ["1/2", "-1"]
    with pytest.raises(ValueError):
        QPoly.from_json(["1", "0"])
    with pytest.raises(ValueError):
        QPoly.from_json(["2/4"])


@settings(max_examples=40, deadline=None)
@given(st.lists(qpolys, min_size=1, max_size=4), st.integers(min_value=1, max_value=6))
def test_integrate_vanishes_at_lower_bound(coeffs, m):
    R = integrate_power_from_q(TPoly(coeffs), m)
    assert R.substitute(q).is_zero()


@settings(max_examples=25, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), max_size=3), min_size=1, max_size=3),
       st.integers(min_value=1, max_value=4))
def test_integrate_matches_sympy(coeffs, m):
    Q, T, t = sympy.symbols("q T t")
    p_expr = sum(sum(c * Q**i for i, c in enumerate(row)) * t**j for j, row in enumerate(coeffs))
    expected = sympy.expand(sympy.integrate(p_expr * t ** (m - 1), (t, Q, T)))
    R = integrate_power_from_q(TPoly([QPoly(row) for row in coeffs]), m)
    got = sum(sum(sympy.Rational(c.numerator, c.denominator) * Q**i for i, c in enumerate(cq.coeffs)) * T**j
              for j, cq in enumerate(R.coeffs))
    assert sympy.expand(got - expected) == 0
