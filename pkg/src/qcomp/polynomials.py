"""Composition polynomials ``g_I``, their reduced forms ``f_I`` and ``P_I``.

``g_I(q)`` is the iterated integral of ``t_1^(i_1-1) ... t_r^(i_r-1)`` over
``q <= t_1 <= ... <= t_r <= 1``. It is divisible by ``(1-q)^r``, and
``P_I = n! g_I / (1-q)^r`` has nonnegative integer coefficients.

>>> from qcomp.compositions import Composition
>>> print(reduced_P(Composition(3, 1)))
6q^2+4q+2
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .compositions import Composition, compositions_of, merge_first_two, tail
from .qpoly import ONE, QPoly, TPoly, integrate_power_from_q, qpoly_div_exact
from .reports import Report

__all__ = [
    "g_integral", "g_recursive", "reduced_f", "reduced_P", "reduced_table",
    "PolyTable", "check_ad_recursion", "NonIntegerCoefficient", "NegativeCoefficient",
    "one_minus_q_power", "p_at_zero",
]

_Q = QPoly.q()


class NonIntegerCoefficient(AssertionError):
    pass


class NegativeCoefficient(AssertionError):
    pass


def one_minus_q_power(r: int) -> QPoly:
    return (1 - _Q) ** r


def g_integral(I: Composition) -> QPoly:
    """``g_I`` by symbolic iterated integration, innermost variable first."""
    I = Composition(I)
    p = TPoly([ONE])
    for part in I:
        p = integrate_power_from_q(p, part)
    return p.substitute(1)


def g_recursive(I: Composition) -> QPoly:
    """``g_I`` from the Ardila-Doker induction.

    ``i_1 g_I = g_{I^1} - q^{i_1} g_{tail(I)}``, with base case
    ``g_(n) = (1 - q^n)/n``.
    """
    return _g_rec(tuple(I))


@lru_cache(maxsize=None)
def _g_rec(parts: tuple[int, ...]) -> QPoly:
    if len(parts) == 1:
        n = parts[0]
        return (1 - QPoly.monomial(n)) / n
    i1 = parts[0]
    merged = (parts[0] + parts[1],) + parts[2:]
    return (_g_rec(merged) - QPoly.monomial(i1) * _g_rec(parts[1:])) / i1


def reduced_P(I: Composition, g: QPoly | None = None) -> QPoly:
    """``P_I = n! g_I / (1-q)^r``, asserted to have nonnegative integer coefficients."""
    I = Composition(I)
    n, r = I.weight, I.length
    if g is None:
        g = g_recursive(I)
    P = qpoly_div_exact(math.factorial(n) * g, one_minus_q_power(r))
    if not P.is_integral():
        raise NonIntegerCoefficient(f"P_{I} = {P} has a non-integer coefficient")
    if not P.is_nonnegative():
        raise NegativeCoefficient(f"P_{I} = {P} has a negative coefficient")
    if P.degree != n - r:
        raise AssertionError(f"P_{I} has degree {P.degree}, expected {n - r}")
    return P


def reduced_f(I: Composition) -> QPoly:
    """``f_I = g_I / (1-q)^r = P_I / n!``."""
    I = Composition(I)
    return reduced_P(I) / math.factorial(I.weight)


def p_at_zero(I: Composition) -> Fraction:
    """``n! / (i_1 (i_1+i_2) ... n)``, the constant term of ``P_I``."""
    denom = math.prod(Composition(I).partial_sums())
    return Fraction(math.factorial(sum(I)), denom)


@dataclass(frozen=True)
class PolyTable:
    n: int
    entries: tuple[tuple[Composition, QPoly], ...]

    def __getitem__(self, I) -> QPoly:
        I = Composition(I)
        for J, P in self.entries:
            if J == I:
                return P
        raise KeyError(I)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def as_dict(self) -> dict[Composition, QPoly]:
        return dict(self.entries)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [
                {"composition": list(I), "coefficients": P.to_json()} for I, P in self.entries
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> PolyTable:
        entries = tuple(
            (Composition(e["composition"]), QPoly.from_json(e["coefficients"]))
            for e in data["entries"]
        )
        return cls(int(data["n"]), entries)


def reduced_table(n: int) -> PolyTable:
    """``P_I`` for every composition of ``n``, in lexicographic order."""
    return PolyTable(n, tuple((I, reduced_P(I)) for I in compositions_of(n)))


def check_ad_recursion(n: int) -> Report:
    """Check ``q i_1 P_I + P_{I^1} = i_1 P_I + n!/(n-i_1)! q^{i_1} P_{tail}`` for all ``I |= n``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    rep = Report(f"recursion n={n}")
    count = 0
    for I in compositions_of(n):
        if len(I) < 2:
            continue
        count += 1
        i1 = I[0]
        P = reduced_P(I)
        lhs = _Q * i1 * P + reduced_P(merge_first_two(I))
        falling = math.factorial(n) // math.factorial(n - i1)
        rhs = i1 * P + falling * QPoly.monomial(i1) * reduced_P(tail(I))
        if lhs != rhs:
            rep.add(f"I={I}", False, f"lhs={lhs} rhs={rhs}", witness=I)
    if rep.ok:
        rep.add(f"{count} compositions of {n}", True)
    rep.info["compositions"] = count
    return rep
