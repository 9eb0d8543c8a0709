"""Integer partitions, Young diagrams and hook lengths.

Cells use 1-based ``(row, col)`` coordinates throughout the package.
Partitions enumerate in descending lexicographic order.
"""

from __future__ import annotations

import re
from functools import cache
from typing import Iterable, Iterator, NamedTuple


class CellOutsideDiagramError(ValueError):
    pass


class Cell(NamedTuple):
    row: int
    col: int

    def transpose(self) -> Cell:
        return Cell(self.col, self.row)


class Partition:
    """A weakly decreasing tuple of positive integers.

    Ill-formed input (zeros, negatives, increasing parts) is rejected rather
    than normalized.
    """

    __slots__ = ("parts", "_hash")

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise TypeError(f"partition parts must be ints, got {p!r}")
            if p < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        self.parts = parts
        self._hash = hash(parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    size = n

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def part(self, i: int) -> int:
        """1-based row length, 0 past the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def __str__(self) -> str:
        return format_partition(self)

    @classmethod
    def parse(cls, text: str) -> Partition:
        return parse_partition(text)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def cells(self) -> Diagram:
        return diagram_of(self)


class Diagram:
    """A finite set of cells with row-major canonical order."""

    __slots__ = ("cells", "_set")

    def __init__(self, cells: Iterable[tuple[int, int]] = ()):
        cellset = frozenset(Cell(*c) for c in cells)
        for c in cellset:
            if c.row < 1 or c.col < 1:
                raise ValueError(f"cell coordinates are 1-based: {tuple(c)}")
        self._set = cellset
        self.cells = tuple(sorted(cellset))

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __contains__(self, cell) -> bool:
        return cell in self._set

    def __eq__(self, other) -> bool:
        if isinstance(other, Diagram):
            return self._set == other._set
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._set)

    def __lt__(self, other: Diagram) -> bool:
        return self.cells < other.cells

    def __repr__(self) -> str:
        return f"Diagram({[tuple(c) for c in self.cells]})"

    def as_set(self) -> frozenset[Cell]:
        return self._set

    def to_json(self) -> list[list[int]]:
        return [[c.row, c.col] for c in self.cells]


_EMPTY = Partition()


def diagram_of(lam: Partition) -> Diagram:
    return Diagram((i, j) for i, row in enumerate(lam, 1) for j in range(1, row + 1))


@cache
def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return _EMPTY
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff the diagram of ``mu`` is a subset of the diagram of ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def remove_corners(lam: Partition) -> list[Partition]:
    """Partitions obtained by deleting one removable cell, top row first."""
    parts = lam.parts
    out = []
    for i, row in enumerate(parts):
        if row > lam.part(i + 2):
            shrunk = parts[:i] + (row - 1,) + parts[i + 1 :]
            out.append(Partition(p for p in shrunk if p))
    return out


def in_diagram(lam: Partition, u: tuple[int, int]) -> bool:
    i, j = u
    return 1 <= i <= len(lam) and 1 <= j <= lam[i - 1]


def hook_length(lam: Partition, u: tuple[int, int]) -> int:
    if not in_diagram(lam, u):
        raise CellOutsideDiagramError(f"cell {tuple(u)} is not in {lam.parts}")
    i, j = u
    return lam[i - 1] - i + conjugate(lam).part(j) - j + 1


@cache
def hook_table(lam: Partition) -> dict[Cell, int]:
    """Hook length of every cell of ``lam``."""
    conj = conjugate(lam)
    return {
        Cell(i, j): row - i + conj[j - 1] - j + 1
        for i, row in enumerate(lam, 1)
        for j in range(1, row + 1)
    }


@cache
def hook_product_full(lam: Partition) -> int:
    """Product of all hook lengths of ``lam``."""
    prod = 1
    for h in hook_table(lam).values():
        prod *= h
    return prod


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@cache
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return list(_partitions_cached(n))


@cache
def _subpartitions_cached(lam: Partition, m: int) -> tuple[Partition, ...]:
    out = []

    def rec(i: int, remaining: int, cap: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(acc))
            return
        if i >= len(lam):
            return
        for part in range(min(cap, lam[i], remaining), 0, -1):
            acc.append(part)
            rec(i + 1, remaining - part, part, acc)
            acc.pop()

    rec(0, m, m, [])
    return tuple(out)


def subpartitions_of_size(lam: Partition, m: int) -> list[Partition]:
    """All ``mu`` of size ``m`` contained in ``lam``, descending lexicographic."""
    if not 0 <= m <= lam.n:
        raise ValueError(f"m must lie in [0, {lam.n}], got {m}")
    return list(_subpartitions_cached(lam, m))


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"2,2,2,1"`` or the shorthand ``"2^3,1"``; ``""`` is empty."""
    text = text.strip()
    if not text:
        return _EMPTY
    parts: list[int] = []
    for token in text.split(","):
        m = _TOKEN.match(token)
        if m is None:
            raise ValueError(f"cannot parse partition token {token!r} in {text!r}")
        part = int(m.group(1))
        reps = int(m.group(2)) if m.group(2) is not None else 1
        parts.extend([part] * reps)
    return Partition(parts)


def format_partition(lam: Partition, exponents: bool = True) -> str:
    """Inverse of :func:`parse_partition`; ``exponents`` selects ``2^3,1`` form."""
    if not exponents:
        return ",".join(map(str, lam))
    chunks = []
    i = 0
    parts = lam.parts
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        reps = j - i
        chunks.append(f"{parts[i]}^{reps}" if reps > 1 else str(parts[i]))
        i = j
    return ",".join(chunks)
