"""Permutitions: set partitions of ``[n]`` with a total order inside each block.

A permutition is stored in canonical form, as a segmented permutation whose
blocks are sorted by increasing last letter.

>>> pi = canonicalize([(5, 3), (4, 6, 1, 2), (9, 7, 8)])
>>> print(pi)
(4612|53|978)
>>> pi.shape(), pi.sinv()
(Composition(4, 2, 3), 4)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .compositions import Composition, compositions_of
from .qpoly import QPoly

__all__ = [
    "Permutition", "NotAPartition", "canonicalize", "standardize", "std_suffix",
    "enumerate_permutitions", "enumerate_shape", "sinv_polynomial", "format_word",
    "parse_permutition", "A000262",
]

# A000262, offset 0
A000262 = (
    1, 1, 3, 13, 73, 501, 4051, 37633, 394353, 4596553,
    58941091, 824073141, 12470162233, 202976401213,
)


class NotAPartition(ValueError):
    """Blocks do not partition ``{1, ..., n}``."""


def format_word(word: Sequence[int], n: int) -> str:
    if n <= 9:
        return "".join(map(str, word))
    return ",".join(map(str, word))


@dataclass(frozen=True, order=False)
class Permutition:
    blocks: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def word(self) -> tuple[int, ...]:
        """Letters read left to right, bars forgotten."""
        return tuple(x for b in self.blocks for x in b)

    def shape(self) -> Composition:
        if not self.blocks:
            raise ValueError("the empty permutition has no shape")
        return Composition(tuple(len(b) for b in self.blocks))

    def sinv(self) -> int:
        """Number of letters greater than the last letter of their block."""
        return sum(sum(1 for x in b if x > b[-1]) for b in self.blocks)

    def last_letters(self) -> tuple[int, ...]:
        return tuple(b[-1] for b in self.blocks)

    def sort_key(self):
        return (tuple(len(b) for b in self.blocks), self.word)

    def __str__(self) -> str:
        n = self.n
        return "(" + "|".join(format_word(b, n) for b in self.blocks) + ")"

    def to_json(self, with_sinv: bool = False) -> dict:
        out = {"blocks": [list(b) for b in self.blocks]}
        if with_sinv:
            out["sinv"] = self.sinv()
        return out


def canonicalize(blocks: Iterable[Sequence[int]]) -> Permutition:
    """Validate ``blocks`` and sort them by last letter."""
    blocks = [tuple(b) for b in blocks]
    letters = [x for b in blocks for x in b]
    if any(not b for b in blocks):
        raise NotAPartition("empty block")
    if sorted(letters) != list(range(1, len(letters) + 1)):
        raise NotAPartition(f"letters {sorted(letters)} are not exactly 1..{len(letters)}")
    blocks.sort(key=lambda b: b[-1])
    return Permutition(tuple(blocks))


def parse_permutition(text: str) -> Permutition:
    """Parse ``"(4612|53|978)"`` or ``"1,10|2"`` style text."""
    text = text.strip().strip("()")
    blocks = []
    for field in text.split("|"):
        if "," in text:
            blocks.append(tuple(int(x) for x in field.split(",")))
        else:
            blocks.append(tuple(int(c) for c in field))
    return canonicalize(blocks)


def standardize(word: Sequence[int]) -> tuple[int, ...]:
    """Replace each letter by its rank: ``362 -> 231``."""
    rank = {x: i for i, x in enumerate(sorted(word), start=1)}
    if len(rank) != len(word):
        raise ValueError("standardization needs distinct letters")
    return tuple(rank[x] for x in word)


def std_suffix(pi: Permutition, from_block: int) -> Permutition:
    """Drop the first ``from_block`` blocks and standardize what is left jointly.

    ``from_block = 0`` standardizes the whole permutition.
    """
    if not 0 <= from_block <= len(pi.blocks):
        raise IndexError("from_block out of range")
    rest = pi.blocks[from_block:]
    flat = standardize([x for b in rest for x in b])
    out, pos = [], 0
    for b in rest:
        out.append(flat[pos:pos + len(b)])
        pos += len(b)
    return Permutition(tuple(out))


def _shape_blocks(parts: tuple[int, ...], avail: tuple[int, ...], floor: int):
    # blocks of the given lengths on letters `avail`, each last letter > previous
    if not parts:
        yield ()
        return
    size, rest = parts[0], parts[1:]
    remaining_lasts = len(rest)
    for chosen in combinations(avail, size):
        others = tuple(x for x in avail if x not in chosen)
        for last in chosen:
            if last <= floor:
                continue
            # later blocks need last letters above this one
            if sum(1 for x in others if x > last) < remaining_lasts:
                continue
            body = [x for x in chosen if x != last]
            for arrangement in permutations(body):
                block = arrangement + (last,)
                for tail_blocks in _shape_blocks(rest, others, last):
                    yield (block,) + tail_blocks


def enumerate_shape(I: Composition) -> list[Permutition]:
    """All permutitions ``pi`` with ``c(pi) = I``, sorted by flattened word."""
    I = Composition(I)
    return list(_enumerate_shape_cached(tuple(I)))


@lru_cache(maxsize=256)
def _enumerate_shape_cached(parts: tuple[int, ...]) -> tuple[Permutition, ...]:
    n = sum(parts)
    found = [Permutition(bl) for bl in _shape_blocks(parts, tuple(range(1, n + 1)), 0)]
    found.sort(key=Permutition.sort_key)
    return tuple(found)


def enumerate_permutitions(n: int) -> Iterator[Permutition]:
    """All permutitions of ``[n]``, ordered by (shape, flattened word)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield Permutition(())
        return
    for I in compositions_of(n):
        yield from _shape_blocks_sorted(I)


def _shape_blocks_sorted(I: Composition) -> list[Permutition]:
    # uncached path so that large n does not pin memory
    found = [Permutition(bl) for bl in _shape_blocks(tuple(I), tuple(range(1, I.weight + 1)), 0)]
    found.sort(key=Permutition.sort_key)
    return found


def sinv_polynomial(I: Composition) -> QPoly:
    """Generating polynomial of ``sinv`` over permutitions of shape ``I``."""
    I = Composition(I)
    counts = [0] * (I.weight - I.length + 1)
    for bl in _shape_blocks(tuple(I), tuple(range(1, I.weight + 1)), 0):
        counts[sum(sum(1 for x in b if x > b[-1]) for b in bl)] += 1
    return QPoly(counts)
