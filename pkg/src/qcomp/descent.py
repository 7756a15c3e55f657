"""Images of noncommutative symmetric functions in symmetric group algebras.

Elements are linear combinations of permutations of ``[n]`` written as
words. Graded pieces are multiplied by the split-and-standardize
convolution: the coefficient of ``w`` in ``f * g`` is
``f[std(w_1..w_p)] * g[std(w_{p+1}..w_{p+r})]``. Under this product
``Psi_n`` goes to the Dynkin element ``[...[[1,2],3],...,n]``.

>>> print(dynkin(3))
123 - 213 - 312 + 321
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from types import MappingProxyType
from typing import Mapping

from .nsym import PsiExpansion, S_1mq_psi, S_psi
from .permutitions import standardize
from .qpoly import ONE, QPoly, ZERO
from .reports import Report

__all__ = [
    "PermAlgebraElement", "convolution", "convolution_bruteforce", "dynkin", "q_dynkin",
    "psi_to_perm", "check_dynkin_identities", "identity_element",
]

Word = tuple[int, ...]


class PermAlgebraElement:
    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping = ()):
        self.degree = degree
        clean = {}
        for w, c in dict(terms).items():
            w = tuple(w)
            if sorted(w) != list(range(1, degree + 1)):
                raise ValueError(f"{w} is not a permutation of 1..{degree}")
            c = QPoly.coerce(c)
            if c:
                clean[w] = c
        self._terms = clean

    @classmethod
    def _raw(cls, degree: int, terms: dict) -> PermAlgebraElement:
        obj = object.__new__(cls)
        obj.degree = degree
        obj._terms = {w: c for w, c in terms.items() if c}
        return obj

    @property
    def terms(self) -> Mapping[Word, QPoly]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, w) -> QPoly:
        return self._terms.get(tuple(w), ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermAlgebraElement):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __add__(self, other: PermAlgebraElement) -> PermAlgebraElement:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, ZERO) + c
        return PermAlgebraElement._raw(self.degree, out)

    def __neg__(self) -> PermAlgebraElement:
        return PermAlgebraElement._raw(self.degree, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: PermAlgebraElement) -> PermAlgebraElement:
        return self + (-other)

    def scale(self, c) -> PermAlgebraElement:
        c = QPoly.coerce(c)
        return PermAlgebraElement._raw(self.degree, {w: v * c for w, v in self._terms.items()})

    def map_coefficients(self, f) -> PermAlgebraElement:
        return PermAlgebraElement._raw(
            self.degree, {w: QPoly.coerce(f(c)) for w, c in self._terms.items()})

    def items(self):
        return sorted(self._terms.items())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for w, c in self.items():
            word = "".join(map(str, w)) if self.degree <= 9 else ",".join(map(str, w))
            if c == 1:
                out.append(("+", word))
            elif c == -1:
                out.append(("-", word))
            else:
                out.append(("+", f"({c}){word}"))
        text = " ".join(f"{s} {t}" for s, t in out)
        return text[2:] if text.startswith("+") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"PermAlgebraElement({self.degree}, {{{', '.join(f'{w}: {c!r}' for w, c in self.items())}}})"

    def to_json(self) -> list[dict]:
        return [{"word": list(w), "coefficients": c.to_json()} for w, c in self.items()]


def identity_element(n: int) -> PermAlgebraElement:
    return PermAlgebraElement._raw(n, {tuple(range(1, n + 1)): ONE})


def convolution(f: PermAlgebraElement, g: PermAlgebraElement) -> PermAlgebraElement:
    """Split-and-standardize product, computed by distributing values.

    Each ``w`` with ``std(prefix) = s`` and ``std(suffix) = t`` is determined
    by the set of values occupying the prefix, so the result is a sum over
    terms of ``f``, terms of ``g`` and ``p``-subsets of ``[p+r]``.
    """
    p, r = f.degree, g.degree
    n = p + r
    out: dict[Word, QPoly] = {}
    values = range(1, n + 1)
    for A in combinations(values, p):
        Aset = set(A)
        B = [v for v in values if v not in Aset]
        for s, cf in f._terms.items():
            head = tuple(A[i - 1] for i in s)
            for t, cg in g._terms.items():
                w = head + tuple(B[i - 1] for i in t)
                out[w] = out.get(w, ZERO) + cf * cg
    return PermAlgebraElement._raw(n, out)


def convolution_bruteforce(f: PermAlgebraElement, g: PermAlgebraElement) -> PermAlgebraElement:
    """The same product, by running over every permutation of ``[p+r]``."""
    p, r = f.degree, g.degree
    out = {}
    for w in permutations(range(1, p + r + 1)):
        out[w] = f[standardize(w[:p])] * g[standardize(w[p:])]
    return PermAlgebraElement._raw(p + r, out)


def _bracket_words(terms: dict[Word, QPoly], letter: int, p: QPoly) -> dict[Word, QPoly]:
    # [a, letter]_p = a.letter - p letter.a on words
    out: dict[Word, QPoly] = {}
    for w, c in terms.items():
        out[w + (letter,)] = out.get(w + (letter,), ZERO) + c
        out[(letter,) + w] = out.get((letter,) + w, ZERO) - p * c
    return out


@lru_cache(maxsize=None)
def _iterated_bracket(n: int, p: QPoly) -> PermAlgebraElement:
    if n < 1:
        raise ValueError("n must be >= 1")
    terms = {(1,): ONE}
    for letter in range(2, n + 1):
        terms = _bracket_words(terms, letter, p)
    return PermAlgebraElement._raw(n, terms)


def dynkin(n: int) -> PermAlgebraElement:
    """``[...[[1,2],3],...,n]`` expanded into signed permutations."""
    return _iterated_bracket(n, ONE)


def q_dynkin(n: int) -> PermAlgebraElement:
    """``(1-q) [...[[1,2]_q,3]_q,...,n]_q`` with ``[a,b]_q = ab - q ba``."""
    return _iterated_bracket(n, QPoly.q()).scale(1 - QPoly.q())


@lru_cache(maxsize=None)
def _psi_word_image(parts: tuple[int, ...]) -> PermAlgebraElement:
    if not parts:
        return PermAlgebraElement._raw(0, {(): ONE})
    if len(parts) == 1:
        return dynkin(parts[0])
    return convolution(_psi_word_image(parts[:-1]), dynkin(parts[-1]))


def psi_to_perm(e: PsiExpansion) -> PermAlgebraElement:
    """Linear extension of ``Psi^I -> dynkin(i_1) * ... * dynkin(i_r)``."""
    out: dict[Word, QPoly] = {}
    for I, c in e.terms.items():
        for w, v in _psi_word_image(I)._terms.items():
            out[w] = out.get(w, ZERO) + c * v
    return PermAlgebraElement._raw(e.degree, out)


def _first_difference(a: PermAlgebraElement, b: PermAlgebraElement):
    for w in sorted(set(a.terms) | set(b.terms)):
        if a[w] != b[w]:
            return w, a[w], b[w]
    return None


def check_dynkin_identities(n: int) -> Report:
    """``S_n`` maps to the identity, then ``S_n((1-q)A)`` maps to ``q_dynkin(n)``.

    The second check runs only once the first has passed, since it is
    meaningless under a wrong embedding convention.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rep = Report(f"dynkin n={n}")
    diff = _first_difference(psi_to_perm(S_psi(n)), identity_element(n))
    rep.add(f"image of S_{n} is the identity", diff is None,
            "" if diff is None else f"convention mismatch at {diff[0]}: {diff[1]} vs {diff[2]}",
            None if diff is None else diff[0])
    if diff is not None:
        rep.add(f"image of S_{n}((1-q)A) is q_dynkin({n})", False, "skipped: convention check failed")
        return rep
    diff = _first_difference(psi_to_perm(S_1mq_psi(n)), q_dynkin(n))
    rep.add(f"image of S_{n}((1-q)A) is q_dynkin({n})", diff is None,
            "" if diff is None else f"first difference at {diff[0]}: {diff[1]} vs {diff[2]}",
            None if diff is None else diff[0])
    return rep
