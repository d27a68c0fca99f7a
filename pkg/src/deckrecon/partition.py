"""Partitions, Ferrers-diagram cells and Young's lattice operations.

Rows, columns and parts are 1-indexed throughout the public API: ``lam.part(1)``
is the largest part and ``Cell(1, 1)`` is the top-left cell of the diagram.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import zip_longest
from typing import Iterable, Iterator

from .errors import (
    IncreasingPartsError,
    NegativePartError,
    NotAddableError,
    NotAnInnerCornerError,
    NotContainedError,
    PartitionError,
    WeightOverflowError,
)

U64_MAX = 2**64 - 1


@dataclass(frozen=True, order=True)
class Cell:
    """A (row, col) position in a Ferrers diagram, both starting at 1."""

    row: int
    col: int

    def __post_init__(self):
        if self.row < 1 or self.col < 1:
            raise ValueError(f"cell coordinates must be >= 1, got ({self.row},{self.col})")

    def __str__(self):
        return f"({self.row},{self.col})"


@dataclass(frozen=True, order=True)
class Partition:
    """A nonincreasing tuple of positive integers.

    ``Partition((4, 3, 1))`` is checked on construction; use :func:`normalize`
    for raw sequences that may carry zeros.  Ordering compares the part tuples
    lexicographically, so ``sorted(..., reverse=True)`` yields the canonical
    descending-lexicographic order used for decks.
    """

    parts: tuple[int, ...]
    weight: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for p in parts:
            if p < 0:
                raise NegativePartError(f"negative part {p} in {list(parts)}")
            if p == 0:
                raise PartitionError(f"zero part in {list(parts)}; use normalize()")
            if p > U64_MAX:
                raise WeightOverflowError(f"part {p} exceeds the 64-bit range")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise IncreasingPartsError(f"parts must be nonincreasing, got {list(parts)}")
        total = sum(parts)
        if total > U64_MAX:
            raise WeightOverflowError(f"weight {total} exceeds the 64-bit range")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", total)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """Return the i-th part (1-indexed); rows past the end read as 0."""
        if i < 1:
            raise IndexError(f"row index must be >= 1, got {i}")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __contains__(self, cell) -> bool:
        return 1 <= cell.row <= len(self.parts) and 1 <= cell.col <= self.parts[cell.row - 1]

    def __bool__(self):
        return bool(self.parts)

    def cells(self) -> Iterator[Cell]:
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield Cell(i, j)

    def __str__(self):
        return " ".join(map(str, self.parts)) if self.parts else "-"

    def __repr__(self):
        return f"Partition({self.parts!r})"


EMPTY = Partition(())


def normalize(raw: Iterable[int]) -> Partition:
    """Build a Partition from a raw sequence, dropping zero entries."""
    values = [int(x) for x in raw]
    for x in values:
        if x < 0:
            raise NegativePartError(f"negative entry {x} in {values}")
    return Partition(tuple(x for x in values if x > 0))


def contains(mu: Partition, lam: Partition) -> bool:
    """True when the diagram of ``mu`` fits inside the diagram of ``lam``."""
    if mu.length > lam.length:
        return False
    return all(a <= b for a, b in zip(mu.parts, lam.parts))


def skew_size(lam: Partition, mu: Partition) -> int:
    """Number of cells in lam/mu."""
    if not contains(mu, lam):
        raise NotContainedError(f"{mu!r} is not contained in {lam!r}")
    return lam.weight - mu.weight


def join(mu: Partition, lam: Partition) -> Partition:
    return Partition(tuple(max(a, b) for a, b in zip_longest(mu.parts, lam.parts, fillvalue=0)))


def meet(mu: Partition, lam: Partition) -> Partition:
    return Partition(tuple(min(a, b) for a, b in zip(mu.parts, lam.parts)))


def conjugate(lam: Partition) -> Partition:
    """Transpose the diagram: part j of the result counts parts of lam that are >= j."""
    if not lam.parts:
        return lam
    cols = []
    row = lam.length
    for j in range(1, lam.parts[0] + 1):
        while lam.parts[row - 1] < j:
            row -= 1
        cols.append(row)
    return Partition(tuple(cols))


def inner_corners(lam: Partition) -> frozenset[Cell]:
    parts = lam.parts
    return frozenset(
        Cell(i, p)
        for i, p in enumerate(parts, start=1)
        if i == len(parts) or parts[i] < p
    )


def remove_cell(lam: Partition, cell: Cell) -> Partition:
    i, j = cell.row, cell.col
    if cell not in lam or j != lam.part(i) or lam.part(i + 1) >= j:
        raise NotAnInnerCornerError(f"{cell} is not an inner corner of {lam!r}")
    parts = list(lam.parts)
    parts[i - 1] -= 1
    return normalize(parts)


def is_addable(lam: Partition, cell: Cell) -> bool:
    i, j = cell.row, cell.col
    if i > lam.length + 1 or j != lam.part(i) + 1:
        return False
    return i == 1 or lam.part(i - 1) >= j


def add_cell(lam: Partition, cell: Cell) -> Partition:
    if not is_addable(lam, cell):
        raise NotAddableError(f"{cell} cannot be added to {lam!r}")
    parts = list(lam.parts)
    if cell.row > len(parts):
        parts.append(1)
    else:
        parts[cell.row - 1] += 1
    return Partition(tuple(parts))


def distinct_part_count(lam: Partition) -> int:
    return len(set(lam.parts))
