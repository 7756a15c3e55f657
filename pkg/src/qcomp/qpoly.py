"""Exact univariate polynomials in ``q`` over the rationals.

Coefficients are :class:`fractions.Fraction` values stored in ascending order
of exponent with trailing zeros trimmed, so two polynomials are equal exactly
when their coefficient tuples are equal.

>>> q = QPoly.q()
>>> (1 - q) * (1 + q)
QPoly('1 - q^2')
>>> print(6 * (1 - q**4) // (1 - q))
6q^3+6q^2+6q+6

A :class:`TPoly` is a polynomial in an auxiliary integration variable ``t``
whose coefficients are :class:`QPoly` values; it is only used to carry the
iterated integrals that define composition polynomials.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "Rational", "QPoly", "TPoly", "NotDivisible", "NEG_INF",
    "integrate_power_from_q", "eval_qpoly", "qpoly_div_exact",
    "parse_rational", "format_rational",
]

Rational = Fraction

# degree of the zero polynomial
NEG_INF = -math.inf

Scalar = Union[int, Fraction]


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial division leaves a nonzero remainder."""


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def format_rational(c: Fraction) -> str:
    """JSON form of a rational: ``"num/den"``, or ``"num"`` when den is 1."""
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(s: str) -> Fraction:
    num, sep, den = s.partition("/")
    if sep:
        value = Fraction(int(num), int(den))
        if format_rational(value) != s:
            raise ValueError(f"rational not in lowest terms: {s!r}")
        return value
    return Fraction(int(num))


class QPoly:
    """Immutable polynomial in ``q`` with rational coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self._c = _trim(coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> QPoly:
        obj = object.__new__(cls)
        obj._c = coeffs
        obj._hash = None
        return obj

    @classmethod
    def q(cls) -> QPoly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> QPoly:
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def const(cls, c: Scalar) -> QPoly:
        return cls((c,))

    @staticmethod
    def coerce(x) -> QPoly:
        if isinstance(x, QPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return QPoly((x,))
        raise TypeError(f"cannot interpret {type(x).__name__} as QPoly")

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Ascending coefficients, no trailing zeros."""
        return self._c

    @property
    def degree(self) -> int | float:
        """Highest exponent with nonzero coefficient; ``NEG_INF`` for zero."""
        return len(self._c) - 1 if self._c else NEG_INF

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._c)
        return self._hash

    def __add__(self, other) -> QPoly:
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly._raw(tuple(-c for c in self._c))

    def __sub__(self, other) -> QPoly:
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QPoly:
        return QPoly.coerce(other) - self

    def __mul__(self, other) -> QPoly:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return QPoly._raw(tuple(c * other for c in self._c))
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other) -> QPoly:
        if isinstance(other, (int, Fraction)):
            return QPoly._raw(tuple(c / other for c in self._c))
        return NotImplemented

    def __floordiv__(self, other) -> QPoly:
        return qpoly_div_exact(self, QPoly.coerce(other))

    def divmod(self, other: QPoly) -> tuple[QPoly, QPoly]:
        """Euclidean division ``self = quot * other + rem``."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        d = len(other._c) - 1
        lead = other._c[-1]
        if len(rem) <= d:
            return ZERO, self
        quot = [Fraction(0)] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k] / lead
            if c:
                quot[k - d] = c
                for j, y in enumerate(other._c):
                    rem[k - d + j] -= c * y
        return QPoly(quot), QPoly(rem[:d])

    def __call__(self, v: Scalar) -> Fraction:
        return eval_qpoly(self, v)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._c)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self._c]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> QPoly:
        p = cls(parse_rational(s) for s in data)
        if len(p._c) != len(data):
            raise ValueError("trailing zero coefficients in QPoly JSON")
        return p

    def render(self) -> str:
        """Text form in descending powers, e.g. ``6q^2+4q+2``.

        A polynomial with negative leading coefficient is written in
        ascending powers instead, so ``1-q`` rather than ``-q+1``.
        """
        if not self._c:
            return "0"
        parts = []
        order = range(len(self._c) - 1, -1, -1)
        if self._c[-1] < 0:
            order = range(len(self._c))
        for k in order:
            c = self._c[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if a.denominator != 1:
                mag = f"({a.numerator}/{a.denominator})"
            elif a == 1 and mono:
                mag = ""
            else:
                mag = str(a.numerator)
            parts.append((sign, mag + mono))
        text = "".join(s + t for s, t in parts)
        return text[1:] if text.startswith("+") else text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self._c):
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            mag = "" if abs(c) == 1 and mono else str(abs(c))
            terms.append(("-" if c < 0 else "+", mag + mono))
        if not terms:
            return "QPoly('0')"
        text = " ".join(f"{s} {t}" for s, t in terms)
        text = text[2:] if text.startswith("+") else "-" + text[2:]
        return f"QPoly('{text}')"


ZERO = QPoly()
ONE = QPoly((1,))


def qpoly_div_exact(a: QPoly, b: QPoly) -> QPoly:
    """Return ``c`` with ``b * c == a``; raise :class:`NotDivisible` otherwise."""
    quot, rem = a.divmod(b)
    if rem:
        raise NotDivisible(f"{a} is not divisible by {b} (remainder {rem})")
    return quot


def eval_qpoly(p: QPoly, v: Scalar) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return acc


class TPoly:
    """Polynomial in ``t`` with :class:`QPoly` coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        out = [QPoly.coerce(c) for c in coeffs]
        while out and out[-1].is_zero():
            out.pop()
        self._c = tuple(out)

    @property
    def coeffs(self) -> tuple[QPoly, ...]:
        return self._c

    @property
    def degree(self) -> int | float:
        return len(self._c) - 1 if self._c else NEG_INF

    def __eq__(self, other) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return "TPoly([" + ", ".join(repr(c) for c in self._c) + "])"

    def substitute(self, v) -> QPoly:
        """Evaluate at ``t = v`` where ``v`` is a scalar or a QPoly."""
        v = QPoly.coerce(v)
        acc = ZERO
        for c in reversed(self._c):
            acc = acc * v + c
        return acc


def integrate_power_from_q(p: TPoly, m: int) -> TPoly:
    """One layer of the iterated integral: ``T -> int_q^T p(t) t^(m-1) dt``.

    The antiderivative is evaluated at the lower bound ``t = q`` and its
    value, a polynomial in q, is folded into the constant coefficient.

    >>> integrate_power_from_q(TPoly([1]), 2).substitute(1)
    QPoly('1/2 - 1/2q^2')
    """
    if m < 1:
        raise ValueError("exponent m must be >= 1")
    upper = [ZERO] * (m + len(p.coeffs))
    lower = ZERO
    for j, c in enumerate(p.coeffs):
        e = j + m
        term = c / e
        upper[e] = term
        lower = lower + term * QPoly.monomial(e)
    upper[0] = -lower
    return TPoly(upper)
