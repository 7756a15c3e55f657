import math
from fractions import Fraction

import pytest

from qcomp.compositions import Composition, compositions_of
from qcomp.permutitions import enumerate_shape
from qcomp.polynomials import (
    PolyTable, check_ad_recursion, g_integral, g_recursive, p_at_zero, reduced_f, reduced_P,
    reduced_table,
)
from qcomp.qpoly import QPoly

q = QPoly.q()

# P_I for n = 4, from the worked table
PAPER_TABLE_4 = {
    (4,): [6, 6, 6, 6],
    (3, 1): [2, 4, 6],
    (2, 2): [3, 6, 3],
    (2, 1, 1): [1, 3],
    (1, 3): [6, 4, 2],
    (1, 2, 1): [2, 2],
    (1, 1, 2): [3, 1],
    (1, 1, 1, 1): [1],
}


def test_g_integral_examples():
    assert g_integral(Composition(2)) == (1 - q**2) / 2
    assert g_integral(Composition(1, 1)) == (1 - q) ** 2 / 2
    assert 24 * g_integral(Composition(1, 3)) == QPoly([6, 4, 2]) * (1 - q) ** 2


def test_g_recursive_examples():
    assert g_recursive(Composition(5)) == (1 - q**5) / 5
    assert g_recursive(Composition(1, 1)) == QPoly([Fraction(1, 2), -1, Fraction(1, 2)])
    assert 24 * g_recursive(Composition(2, 1, 1)) == QPoly([1, 3]) * (1 - q) ** 3


@pytest.mark.parametrize("n", range(1, 11))
def test_g_two_routes_agree(n):
    for I in compositions_of(n):
        g = g_integral(I)
        assert g == g_recursive(I)
        assert g.degree == n


def test_reduced_P_examples():
    assert reduced_P(Composition(4)) == QPoly([6, 6, 6, 6])
    assert reduced_P(Composition(2, 2)) == QPoly([3, 6, 3])
    assert reduced_P(Composition(1, 1, 1, 1)) == QPoly([1])


def test_reduced_table_small():
    t4 = reduced_table(4)
    assert {tuple(I): list(P.coeffs) for I, P in t4} == PAPER_TABLE_4
    assert [tuple(I) for I, _ in t4] == sorted(PAPER_TABLE_4)
    assert reduced_table(1).as_dict() == {(1,): QPoly([1])}
    assert reduced_table(2).as_dict() == {(1, 1): QPoly([1]), (2,): 1 + q}


def test_table_json_round_trip():
    t = reduced_table(5)
    assert PolyTable.from_json(t.to_json()) == t


def test_reduced_f():
    assert reduced_f(Composition(2, 2)) == QPoly([Fraction(1, 8), Fraction(1, 4), Fraction(1, 8)])


@pytest.mark.parametrize("n", range(1, 11))
def test_reduced_properties(n):
    for I in compositions_of(n):
        P = reduced_P(I)
        assert P.degree == n - len(I)
        assert P.is_integral() and P.is_nonnegative()
        assert P(0) == p_at_zero(I)
    assert reduced_P(Composition([1] * n)) == QPoly([1])


@pytest.mark.parametrize("n", range(1, 9))
def test_P_at_one_counts_permutitions(n):
    for I in compositions_of(n):
        assert reduced_P(I)(1) == len(enumerate_shape(I))


def test_total_counts():
    totals = [sum(reduced_P(I)(1) for I in compositions_of(n)) for n in range(1, 5)]
    assert totals == [1, 3, 13, 73]


def test_ad_recursion_examples():
    I = Composition(2, 1, 1)
    P = reduced_P(I)
    lhs = 2 * q * P + reduced_P(Composition(3, 1))
    rhs = 2 * P + 12 * q**2 * reduced_P(Composition(1, 1))
    assert lhs == rhs == QPoly([2, 6, 12])
    assert q + reduced_P(Composition(2)) == 1 + 2 * q * reduced_P(Composition(1))


@pytest.mark.parametrize("n", range(2, 11))
def test_check_ad_recursion(n):
    rep = check_ad_recursion(n)
    assert rep.ok, rep.lines()
    assert rep.info["compositions"] == 2 ** (n - 1) - 1


def test_check_ad_recursion_needs_two():
    with pytest.raises(ValueError):
        check_ad_recursion(1)


def test_p_at_zero_formula():
    assert p_at_zero(Composition(1, 3)) == 6
    assert p_at_zero(Composition(2, 1, 1)) == Fraction(math.factorial(4), 2 * 3 * 4)
