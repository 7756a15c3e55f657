"""Noncommutative symmetric functions in the basis of products of power sums.

A degree-``n`` element is a linear combination of words
``Psi^I = Psi_{i_1} ... Psi_{i_r}`` indexed by compositions ``I`` of ``n``,
with coefficients in ``Q[q]``. Products concatenate words.

The complete functions have the expansion

    S_n = sum_{I |= n} Psi^I / (i_1 (i_1+i_2) ... (i_1+...+i_r)),

``Lambda_k`` denotes the degree-``k`` component of ``sigma_t^{-1}``, and the
``(1-q)``-transform of ``S_n`` is the degree-``n`` part of
``sigma_{qt}^{-1} sigma_t``.

>>> print(S_1mq_psi(2))
((1/2)q^2-q+(1/2)) Psi^1,1 + ((1/2)-(1/2)q^2) Psi^2
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .compositions import Composition, compositions_of
from .qpoly import ONE, QPoly, ZERO
from .reports import Report

__all__ = [
    "PsiExpansion", "DegreeMismatch", "psi_mul", "psi_word", "S_psi", "Lambda_psi",
    "S_1mq_psi", "coefficient", "qbracket", "check_qbracket_identity", "check_ode",
    "check_inversion", "check_prop1", "qbracket_rhs",
]

_Q = QPoly.q()


class DegreeMismatch(ValueError):
    pass


class PsiExpansion:
    """Homogeneous element of degree ``n``; the key ``()`` is the unit in degree 0."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping = ()):
        self.degree = degree
        clean = {}
        for key, c in dict(terms).items():
            key = tuple(key)
            if sum(key) != degree:
                raise DegreeMismatch(f"word {key} does not have degree {degree}")
            c = QPoly.coerce(c)
            if c:
                clean[key] = c
        self._terms = clean

    @property
    def terms(self) -> Mapping[tuple[int, ...], QPoly]:
        return MappingProxyType(self._terms)

    @classmethod
    def unit(cls) -> PsiExpansion:
        return cls(0, {(): ONE})

    @classmethod
    def zero(cls, degree: int) -> PsiExpansion:
        return cls(degree)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PsiExpansion):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __add__(self, other: PsiExpansion) -> PsiExpansion:
        if self.degree != other.degree:
            raise DegreeMismatch("cannot add elements of different degrees")
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, ZERO) + c
        return PsiExpansion(self.degree, out)

    def __neg__(self) -> PsiExpansion:
        return PsiExpansion(self.degree, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: PsiExpansion) -> PsiExpansion:
        return self + (-other)

    def scale(self, c) -> PsiExpansion:
        c = QPoly.coerce(c)
        return PsiExpansion(self.degree, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, PsiExpansion):
            return psi_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def map_coefficients(self, f) -> PsiExpansion:
        return PsiExpansion(self.degree, {k: f(c) for k, c in self._terms.items()})

    def items(self):
        """Terms in lexicographic order of words."""
        return sorted(self._terms.items())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            word = "1" if not k else "Psi^" + ",".join(map(str, k))
            parts.append(f"({c}) {word}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"PsiExpansion({self.degree}, {{{', '.join(f'{k}: {c!r}' for k, c in self.items())}}})"

    def to_json(self) -> list[dict]:
        return [{"composition": list(k), "coefficients": c.to_json()} for k, c in self.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> PsiExpansion:
        terms = {tuple(d["composition"]): QPoly.from_json(d["coefficients"]) for d in data}
        degree = sum(next(iter(terms))) if terms else 0
        return cls(degree, terms)


def psi_word(*parts: int) -> PsiExpansion:
    """The single word ``Psi_{i_1} ... Psi_{i_r}``."""
    return PsiExpansion(sum(parts), {tuple(parts): ONE})


def psi_mul(a: PsiExpansion, b: PsiExpansion) -> PsiExpansion:
    out: dict[tuple[int, ...], QPoly] = {}
    for ka, ca in a._terms.items():
        for kb, cb in b._terms.items():
            k = ka + kb
            out[k] = out.get(k, ZERO) + ca * cb
    return PsiExpansion(a.degree + b.degree, out)


@lru_cache(maxsize=None)
def S_psi(n: int) -> PsiExpansion:
    if n < 0:
        raise ValueError("degree must be >= 0")
    if n == 0:
        return PsiExpansion.unit()
    return PsiExpansion(n, {
        tuple(I): QPoly.const(Fraction(1, math.prod(I.partial_sums())))
        for I in compositions_of(n)
    })


@lru_cache(maxsize=None)
def Lambda_psi(k: int) -> PsiExpansion:
    """Degree-``k`` part of ``sigma_t^{-1}``: ``Lambda_k = -sum_{a<k} Lambda_a S_{k-a}``."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    if k == 0:
        return PsiExpansion.unit()
    acc = PsiExpansion.zero(k)
    for a in range(k):
        acc = acc + psi_mul(Lambda_psi(a), S_psi(k - a))
    return -acc


@lru_cache(maxsize=None)
def S_1mq_psi(n: int) -> PsiExpansion:
    """``S_n((1-q)A) = sum_k q^k Lambda_k S_{n-k}``."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    acc = PsiExpansion.zero(n)
    for k in range(n + 1):
        acc = acc + psi_mul(Lambda_psi(k), S_psi(n - k)).scale(QPoly.monomial(k))
    return acc


def coefficient(e: PsiExpansion, I) -> QPoly:
    I = tuple(I)
    if sum(I) != e.degree:
        raise DegreeMismatch(f"{I} has weight {sum(I)}, element has degree {e.degree}")
    return e.terms.get(I, ZERO)


def qbracket(a: PsiExpansion, b: PsiExpansion, p) -> PsiExpansion:
    """``[a, b]_p = ab - p ba``."""
    return psi_mul(a, b) - psi_mul(b, a).scale(p)


def qbracket_rhs(n: int) -> PsiExpansion:
    """``sum_I (1-q^{i_1}) [...[[Psi_{i_1}, Psi_{i_2}]_{q^{i_2}}, ...], Psi_{i_r}]_{q^{i_r}} / (i_1 (i_1+i_2) ...)``."""
    acc = PsiExpansion.zero(n)
    for I in compositions_of(n):
        term = psi_word(I[0])
        for part in I[1:]:
            term = qbracket(term, psi_word(part), QPoly.monomial(part))
        scalar = (1 - QPoly.monomial(I[0])) / math.prod(I.partial_sums())
        acc = acc + term.scale(scalar)
    return acc


def _first_difference(lhs: PsiExpansion, rhs: PsiExpansion):
    for k in sorted(set(lhs.terms) | set(rhs.terms)):
        a, b = lhs.terms.get(k, ZERO), rhs.terms.get(k, ZERO)
        if a != b:
            return k, a, b
    return None


def check_qbracket_identity(n: int) -> Report:
    if n < 1:
        raise ValueError("n must be >= 1")
    rep = Report(f"qbracket n={n}")
    diff = _first_difference(S_1mq_psi(n), qbracket_rhs(n))
    if diff is None:
        rep.add(f"S_{n}((1-q)A) equals the q-bracket sum", True)
    else:
        k, a, b = diff
        rep.add(f"S_{n}((1-q)A) equals the q-bracket sum", False,
                f"coefficient of Psi^{Composition(k)}: lhs={a} rhs={b}", witness=Composition(k))
    return rep


def check_ode(n: int) -> Report:
    """``n S_n = sum_{j<n} S_j Psi_{n-j}``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rep = Report(f"ode n={n}")
    rhs = PsiExpansion.zero(n)
    for j in range(n):
        rhs = rhs + psi_mul(S_psi(j), psi_word(n - j))
    diff = _first_difference(S_psi(n).scale(n), rhs)
    rep.add(f"{n} S_{n} = sum S_j Psi_(n-j)", diff is None,
            "" if diff is None else f"first difference at {diff[0]}", diff)
    return rep


def check_inversion(n: int) -> Report:
    """Both one-sided relations ``sum Lambda_a S_b = sum S_a Lambda_b = 0`` in degree ``n``."""
    rep = Report(f"inversion n={n}")
    left = right = PsiExpansion.zero(n)
    for a in range(n + 1):
        left = left + psi_mul(Lambda_psi(a), S_psi(n - a))
        right = right + psi_mul(S_psi(a), Lambda_psi(n - a))
    rep.add(f"sum Lambda_a S_(n-a) = 0 (n={n})", not left.terms)
    rep.add(f"sum S_a Lambda_(n-a) = 0 (n={n})", not right.terms)
    return rep


def check_prop1(n: int) -> Report:
    """Coefficient of ``Psi^I`` in ``S_n((1-q)A)`` against both computations of ``g_I``."""
    from .polynomials import g_integral, g_recursive

    rep = Report(f"psi coefficients n={n}")
    e = S_1mq_psi(n)
    bad = None
    count = 0
    for I in compositions_of(n):
        count += 1
        c = coefficient(e, I)
        gi, gr = g_integral(I), g_recursive(I)
        if not (c == gi == gr):
            bad = (I, c, gi, gr)
            break
    rep.add(f"coefficient = g_integral = g_recursive ({count} compositions of {n})", bad is None,
            "" if bad is None else f"I={bad[0]}: coeff={bad[1]} integral={bad[2]} recursive={bad[3]}",
            None if bad is None else bad[0])
    return rep
