"""The weight-preserving bijection behind the recursion for ``P_I``.

For a composition ``I`` with at least two parts, three finite sets carry the
two sides of

    q i_1 P_I + P_{I^1} = i_1 P_I + n!/(n-i_1)! q^{i_1} P_{(i_2,...,i_r)}

* ``E1``: pairs ``(tau, x)`` with ``c(tau) = I`` and ``x`` in the first block;
* ``E2``: permutitions of shape ``I^1``;
* ``E3``: pairs ``(pi, w)`` with ``pi`` standard of shape ``(i_2,...,i_r)``
  and ``w`` an injective word of length ``i_1`` over ``[n]``.

``phi1: E1 -> E1 + E3`` and ``phi2: E2 -> E1 + E3`` together form a bijection
``E1 + E2 -> E1 + E3``. An image is returned as an :class:`E1Element` or an
:class:`E3Element`; the element type is the tag.

>>> from qcomp.permutitions import parse_permutition as P
>>> I = Composition(3, 2, 3)
>>> print(phi1(E1Element(P("361|74|258"), 3), I))
(42|135, 163)
>>> print(phi2(E2Element(P("36174|258")), I))
(163|74|258, 1)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations
from typing import Union

from .compositions import Composition, merge_first_two, tail
from .permutitions import (
    Permutition, enumerate_shape, format_word, std_suffix,
)
from .qpoly import QPoly, ZERO
from .reports import Report

__all__ = [
    "E1Element", "E2Element", "E3Element", "InvalidElement", "Provenance",
    "phi", "phi1", "phi2", "image_predicate", "phi_inverse", "side_weight",
    "enumerate_E1", "enumerate_E2", "enumerate_E3", "verify_bijection",
    "trace_rows", "format_monomial",
]


class InvalidElement(ValueError):
    pass


class Provenance(enum.Enum):
    PHI1 = "phi1"
    PHI2 = "phi2"


@dataclass(frozen=True)
class E1Element:
    tau: Permutition
    x: int

    def __str__(self) -> str:
        return f"({str(self.tau)[1:-1]}, {self.x})"


@dataclass(frozen=True)
class E2Element:
    tau: Permutition

    def __str__(self) -> str:
        return str(self.tau)


@dataclass(frozen=True)
class E3Element:
    pi: Permutition
    w: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.pi.n + len(self.w)

    def __str__(self) -> str:
        return f"({str(self.pi)[1:-1]}, {format_word(self.w, self.n)})"


Image = Union[E1Element, E3Element]


def _check_E1(e: E1Element, I: Composition) -> None:
    if len(I) < 2:
        raise InvalidElement(f"{I} needs at least two parts")
    if e.tau.shape() != I:
        raise InvalidElement(f"{e.tau} does not have shape {I}")
    if e.x not in e.tau.blocks[0]:
        raise InvalidElement(f"{e.x} is not in the first block of {e.tau}")


def _swap(word: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    return tuple(b if c == a else a if c == b else c for c in word)


def _relabel(pi: Permutition, w: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    # increasing map [n - len(w)] -> [n] \ w
    n = pi.n + len(w)
    used = set(w)
    free = [v for v in range(1, n + 1) if v not in used]
    return tuple(tuple(free[c - 1] for c in b) for b in pi.blocks)


def phi1(e: E1Element, I: Composition) -> Image:
    _check_E1(e, I)
    first = e.tau.blocks[0]
    last = first[-1]
    if last == min(first):
        w = _swap(first, e.x, last)
        return E3Element(std_suffix(e.tau, 1), w)
    m = max(s for s in first if s < last)
    swapped = _swap(first, m, last)
    return E1Element(Permutition((swapped,) + e.tau.blocks[1:]), e.x)


def phi2(e: E2Element, I: Composition) -> Image:
    if len(I) < 2:
        raise InvalidElement(f"{I} needs at least two parts")
    if e.tau.shape() != merge_first_two(I):
        raise InvalidElement(f"{e.tau} does not have shape {merge_first_two(I)}")
    i1 = I[0]
    merged = e.tau.blocks[0]
    prefix, middle = merged[:i1], merged[i1:]
    L = merged[-1]
    rest = e.tau.blocks[1:]
    if all(a > L for a in prefix):
        suffix = std_suffix(Permutition((middle,) + rest), 0)
        return E3Element(suffix, prefix)
    k = max(s for s in prefix if s < L)
    new_prefix = _swap(prefix, k, prefix[-1])
    return E1Element(Permutition((new_prefix, middle) + rest), prefix[-1])


def phi(e: E1Element | E2Element, I: Composition) -> Image:
    if isinstance(e, E1Element):
        return phi1(e, I)
    if isinstance(e, E2Element):
        return phi2(e, I)
    raise InvalidElement(f"not an element of E1 or E2: {e!r}")


def image_predicate(img: Image, I: Composition) -> Provenance:
    """Which of ``phi1``, ``phi2`` an image element comes from, read off the element alone."""
    if isinstance(img, E1Element):
        first = img.tau.blocks[0]
        L2 = img.tau.blocks[1][-1]
        below = [s for s in first if s < L2]
        if below and first[-1] == max(below):
            return Provenance.PHI2
        return Provenance.PHI1
    if isinstance(img, E3Element):
        relabeled_last = _relabel(img.pi, img.w)[0][-1]
        if min(img.w) < relabeled_last:
            return Provenance.PHI1
        return Provenance.PHI2
    raise InvalidElement(f"not an image element: {img!r}")


def phi_inverse(img: Image, I: Composition) -> E1Element | E2Element:
    which = image_predicate(img, I)
    if isinstance(img, E1Element):
        first = img.tau.blocks[0]
        last = first[-1]
        if which is Provenance.PHI1:
            succ = min(s for s in first if s > last)
            return E1Element(Permutition((_swap(first, last, succ),) + img.tau.blocks[1:]), img.x)
        prefix = _swap(first, img.x, last)
        merged = prefix + img.tau.blocks[1]
        return E2Element(Permutition((merged,) + img.tau.blocks[2:]))
    blocks = _relabel(img.pi, img.w)
    if which is Provenance.PHI1:
        w = img.w
        prefix = _swap(w, min(w), w[-1])
        return E1Element(Permutition((prefix,) + blocks), w[-1])
    return E2Element(Permutition((img.w + blocks[0],) + blocks[1:]))


def side_weight(elem, side: str, I: Composition) -> QPoly:
    """Monomial weight of an element on the left (``"LHS"``) or right (``"RHS"``) side."""
    if side == "LHS":
        if isinstance(elem, E1Element):
            return QPoly.monomial(elem.tau.sinv() + 1)
        if isinstance(elem, E2Element):
            return QPoly.monomial(elem.tau.sinv())
    elif side == "RHS":
        if isinstance(elem, E1Element):
            return QPoly.monomial(elem.tau.sinv())
        if isinstance(elem, E3Element):
            return QPoly.monomial(elem.pi.sinv() + I[0])
    raise ValueError(f"no {side} weight for {type(elem).__name__}")


def enumerate_E1(I: Composition) -> list[E1Element]:
    return [E1Element(t, x) for t in enumerate_shape(I) for x in sorted(t.blocks[0])]


def enumerate_E2(I: Composition) -> list[E2Element]:
    return [E2Element(t) for t in enumerate_shape(merge_first_two(I))]


def enumerate_E3(I: Composition) -> list[E3Element]:
    n, i1 = I.weight, I[0]
    suffixes = enumerate_shape(tail(I))
    return [E3Element(p, w) for p in suffixes for w in permutations(range(1, n + 1), i1)]


def _sinv_shift_ok(src, img, i1: int) -> bool:
    if isinstance(src, E1Element):
        s = src.tau.sinv()
        if isinstance(img, E1Element):
            return img.tau.sinv() == s + 1
        return s == img.pi.sinv() + i1 - 1
    s = src.tau.sinv()
    if isinstance(img, E1Element):
        return s == img.tau.sinv()
    return s == img.pi.sinv() + i1


def verify_bijection(I: Composition) -> Report:
    """Exhaustively check that ``phi`` is a sinv-compatible bijection for ``I``."""
    I = Composition(I)
    if len(I) < 2:
        raise ValueError(f"{I} needs at least two parts")
    rep = Report(f"bijection I={I}")
    i1 = I[0]
    E1, E2, E3 = enumerate_E1(I), enumerate_E2(I), enumerate_E3(I)
    rep.info.update(E1=len(E1), E2=len(E2), E3=len(E3))
    target = set(E1) | set(E3)

    images: dict = {}
    total = injective = predicate = shifts = roundtrip = None
    lhs_counts: dict[int, int] = {}
    for src in (*E1, *E2):
        try:
            img = phi(src, I)
        except Exception as exc:  # noqa: BLE001 - reported as a witness
            total = total or (src, repr(exc))
            continue
        if img not in target and total is None:
            total = (src, f"image {img} outside E1+E3")
        if img in images and injective is None:
            injective = (src, images[img], img)
        images[img] = src
        origin = Provenance.PHI1 if isinstance(src, E1Element) else Provenance.PHI2
        if image_predicate(img, I) is not origin and predicate is None:
            predicate = (src, img)
        if not _sinv_shift_ok(src, img, i1) and shifts is None:
            shifts = (src, img)
        if phi_inverse(img, I) != src and roundtrip is None:
            roundtrip = (src, img)
        k = side_weight(src, "LHS", I).degree
        lhs_counts[k] = lhs_counts.get(k, 0) + 1
    rhs_counts: dict[int, int] = {}
    for el in E1:
        k = el.tau.sinv()
        rhs_counts[k] = rhs_counts.get(k, 0) + 1
    for el in E3:
        k = el.pi.sinv() + i1
        rhs_counts[k] = rhs_counts.get(k, 0) + 1
    lhs_sum = _counts_poly(lhs_counts)
    rhs_sum = _counts_poly(rhs_counts)

    rep.add("totality", total is None, "" if total is None else f"{total[0]}: {total[1]}", total)
    rep.add("injectivity", injective is None,
            "" if injective is None else f"{injective[0]} and {injective[1]} -> {injective[2]}", injective)
    covered = set(images) == target
    missing = next(iter(target - set(images)), None)
    rep.add("images partition E1+E3", covered and len(images) == len(E1) + len(E2),
            "" if covered else f"not hit: {missing}", missing)
    rep.add("image predicates", predicate is None,
            "" if predicate is None else f"{predicate[0]} -> {predicate[1]}", predicate)
    rep.add("sinv shifts", shifts is None,
            "" if shifts is None else f"{shifts[0]} -> {shifts[1]}", shifts)
    rep.add("inverse round trip", roundtrip is None,
            "" if roundtrip is None else f"{roundtrip[0]} -> {roundtrip[1]}", roundtrip)
    rep.add("weighted identity", lhs_sum == rhs_sum, f"lhs={lhs_sum} rhs={rhs_sum}")
    rep.info["lhs"] = str(lhs_sum)
    rep.info["rhs"] = str(rhs_sum)
    return rep


def _counts_poly(counts: dict[int, int]) -> QPoly:
    if not counts:
        return ZERO
    return QPoly([counts.get(k, 0) for k in range(max(counts) + 1)])


def format_monomial(k: int) -> str:
    return "1" if k == 0 else "q" if k == 1 else f"q^{k}"


def _raw_sinv(elem) -> int:
    return elem.pi.sinv() if isinstance(elem, E3Element) else elem.tau.sinv()


def trace_rows(I: Composition) -> list[str]:
    """One line per element of ``E1`` then ``E2``: ``src -> image  (q^sinv, q^sinv)``.

    The pair shows the raw sinv statistics of source and image, as in the
    hand-written tables that accompany the bijection.
    """
    I = Composition(I)
    rows = []
    for src in (*enumerate_E1(I), *enumerate_E2(I)):
        img = phi(src, I)
        rows.append(
            f"{src} -> {img}  ({format_monomial(_raw_sinv(src))}, {format_monomial(_raw_sinv(img))})"
        )
    return rows
