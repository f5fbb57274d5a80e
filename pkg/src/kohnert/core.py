"""Weak compositions, cell diagrams, Kohnert moves, and closure search.

Cells are ``(row, col)`` pairs with row 1 at the bottom and column 1 at the
left.  Every value is immutable and hashable; operations return new objects,
so results can be cached and shared freely.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

Cell = tuple[int, int]
Composition = tuple[int, ...]


class TheoremViolation(Exception):
    """A mathematical invariant the library relies on failed to hold.

    Raised for situations that are provably impossible on valid inputs (a
    closure diagram with zero or two labelings, an unlock step disagreeing
    with rectification, ...).  These abort loudly instead of returning None,
    because None is reserved for legitimately inapplicable operations.
    """


def composition(parts: Iterable[int]) -> Composition:
    """Normalize to a tuple of nonnegative ints; trailing zeros are kept."""
    comp = tuple(int(p) for p in parts)
    if any(p < 0 for p in comp):
        raise ValueError(f"composition parts must be nonnegative, got {comp}")
    return comp


def flatten(a: Composition) -> Composition:
    """Drop the zero parts of a weak composition, keeping their order."""
    return tuple(p for p in a if p > 0)


@dataclass(frozen=True, order=True)
class Diagram:
    """A finite set of cells, stored sorted row-major (bottom row first)."""

    cells: tuple[Cell, ...] = ()

    def __post_init__(self) -> None:
        cells = tuple(sorted({(int(r), int(c)) for r, c in self.cells}))
        if cells and min(min(r, c) for r, c in cells) < 1:
            raise ValueError("cells must have row >= 1 and col >= 1")
        object.__setattr__(self, "cells", cells)

    @cached_property
    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.cells)

    @cached_property
    def max_row(self) -> int:
        return max((r for r, _ in self.cells), default=0)

    @cached_property
    def max_col(self) -> int:
        return max((c for _, c in self.cells), default=0)

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.cell_set

    def __len__(self) -> int:
        return len(self.cells)

    def row(self, r: int) -> tuple[Cell, ...]:
        """Cells in row ``r``, left to right."""
        return tuple(cell for cell in self.cells if cell[0] == r)

    def column(self, c: int) -> tuple[Cell, ...]:
        """Cells in column ``c``, bottom to top."""
        return tuple(cell for cell in self.cells if cell[1] == c)

    def occupied_rows(self) -> tuple[int, ...]:
        return tuple(sorted({r for r, _ in self.cells}))

    def move(self, src: Cell, dst: Cell) -> "Diagram":
        """Return a copy with the cell at ``src`` relocated to ``dst``."""
        if src not in self.cell_set:
            raise ValueError(f"no cell at {src}")
        if dst in self.cell_set:
            raise ValueError(f"cell already at {dst}")
        return Diagram(tuple(dst if cell == src else cell for cell in self.cells))

    def to_json(self) -> list[list[int]]:
        return [[r, c] for r, c in self.cells]

    @classmethod
    def from_json(cls, data: object) -> "Diagram":
        if not isinstance(data, list) or not all(
            isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p)
            for p in data
        ):
            raise ValueError("diagram JSON must be a list of [row, col] pairs")
        return cls(tuple((r, c) for r, c in data))

    def ascii(self) -> str:
        return grid_ascii({cell: "x" for cell in self.cells})


def grid_ascii(marks: dict[Cell, str]) -> str:
    """Render cell markings top row first, with a baseline under row 1."""
    max_row = max((r for r, _ in marks), default=0)
    max_col = max((c for _, c in marks), default=0)
    width = max((len(s) for s in marks.values()), default=1)
    lines = []
    for r in range(max_row, 0, -1):
        lines.append(
            " ".join(marks.get((r, c), ".").rjust(width) for c in range(1, max_col + 1))
        )
    lines.append("-" * max(1, max_col * (width + 1) - 1))
    return "\n".join(lines)


def weight(d: Diagram) -> Composition:
    """Cells per row, from row 1 up to the highest nonempty row."""
    counts = [0] * d.max_row
    for r, _ in d.cells:
        counts[r - 1] += 1
    return tuple(counts)


def padded_weight(d: Diagram, n: int) -> Composition:
    """Weight extended with zeros to length ``n`` (rows above must be empty)."""
    w = weight(d)
    if len(w) > n:
        raise ValueError(f"diagram occupies row {len(w)} > {n}")
    return w + (0,) * (n - len(w))


def key_diagram(a: Composition) -> Diagram:
    """The unique left-justified diagram of weight ``a``."""
    return Diagram(tuple((i + 1, c) for i, part in enumerate(a) for c in range(1, part + 1)))


def lock_diagram(a: Composition) -> Diagram:
    """The unique right-justified diagram of weight ``a``."""
    m = max(a, default=0)
    return Diagram(
        tuple((i + 1, c) for i, part in enumerate(a) for c in range(m - part + 1, m + 1))
    )


def kohnert_move(d: Diagram, row: int) -> Diagram | None:
    """Drop the rightmost cell of ``row`` to the first open cell below it.

    The cell falls within its column, jumping over occupied cells, and lands
    in the highest empty position strictly below.  Returns None when the row
    is empty or the column is blocked all the way to the floor.
    """
    if row < 1:
        raise ValueError("row must be positive")
    row_cells = d.row(row)
    if not row_cells:
        return None
    src = row_cells[-1]
    c = src[1]
    for r in range(row - 1, 0, -1):
        if (r, c) not in d.cell_set:
            return d.move(src, (r, c))
    return None


@lru_cache(maxsize=None)
def kohnert_closure(d: Diagram) -> tuple[Diagram, ...]:
    """All diagrams reachable from ``d`` by Kohnert moves, including ``d``.

    Breadth-first search with a visited set; the result is sorted so that
    iteration order (and anything serialized from it) is deterministic.
    """
    seen = {d}
    frontier = deque([d])
    while frontier:
        cur = frontier.popleft()
        for row in cur.occupied_rows():
            nxt = kohnert_move(cur, row)
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return tuple(sorted(seen))
