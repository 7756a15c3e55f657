"""Integer compositions.

A :class:`Composition` is a tuple of positive integers, so it hashes, sorts
lexicographically and serializes to JSON as a plain array.

>>> list(compositions_of(3))
[Composition(1, 1, 1), Composition(1, 2), Composition(2, 1), Composition(3)]
>>> merge_first_two(Composition(2, 1, 1))
Composition(3, 1)
"""

from __future__ import annotations

from typing import Iterator

__all__ = [
    "Composition", "TooShort", "CompositionParseError",
    "compositions_of", "merge_first_two", "tail", "parse_composition",
]


class TooShort(ValueError):
    """Raised when an operation needs at least two parts."""


class CompositionParseError(ValueError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        super().__init__(f"cannot parse composition {text!r} at position {position}: {reason}")


class Composition(tuple):
    """A nonempty sequence of positive integers ``(i_1, ..., i_r)``."""

    def __new__(cls, *parts: int):
        if len(parts) == 1 and not isinstance(parts[0], int):
            parts = tuple(parts[0])
        if not parts:
            raise ValueError("a composition has at least one part")
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"composition parts must be positive integers, got {p!r}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def partial_sums(self) -> list[int]:
        """``[i_1, i_1+i_2, ..., n]``."""
        out, acc = [], 0
        for p in self:
            acc += p
            out.append(acc)
        return out

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Composition({', '.join(map(str, self))})"


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def compositions_of(n: int) -> Iterator[Composition]:
    """All ``2**(n-1)`` compositions of ``n`` in lexicographic order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    for parts in _compositions(n):
        yield Composition(parts)


def merge_first_two(I: Composition) -> Composition:
    """``(i_1+i_2, i_3, ..., i_r)``."""
    if len(I) < 2:
        raise TooShort(f"{I} has fewer than two parts")
    return Composition((I[0] + I[1],) + tuple(I[2:]))


def tail(I: Composition) -> Composition:
    """``(i_2, ..., i_r)``."""
    if len(I) < 2:
        raise TooShort(f"{I} has fewer than two parts")
    return Composition(tuple(I[1:]))


def parse_composition(text: str) -> Composition:
    """Parse the text form ``"2,1,1"`` (no brackets, no spaces)."""
    if not text:
        raise CompositionParseError(text, 0, "empty input")
    parts = []
    pos = 0
    for field in text.split(","):
        if not field.isdigit() or not field.isascii():
            raise CompositionParseError(text, pos, f"expected a positive integer, got {field!r}")
        if int(field) == 0:
            raise CompositionParseError(text, pos, "parts must be positive")
        parts.append(int(field))
        pos += len(field) + 1
    return Composition(parts)
