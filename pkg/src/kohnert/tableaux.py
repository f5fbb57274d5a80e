"""Labeled diagrams: key and lock Kohnert tableaux.

A labeled diagram assigns one positive integer label to each cell.  The two
tableau families share conditions (1)-(3) of their definitions (column
support per label, the flagged bound, weakly descending strings) and differ
in condition (4): keys use the inversion rule, locks strict column decrease.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations

from .core import (
    Cell,
    Composition,
    Diagram,
    TheoremViolation,
    flatten,
    grid_ascii,
    key_diagram,
    kohnert_closure,
    lock_diagram,
    weight,
)

Entry = tuple[Cell, int]


@dataclass(frozen=True, order=True)
class LabeledDiagram:
    """Immutable cell-to-label map, stored sorted row-major."""

    entries: tuple[Entry, ...] = ()

    def __post_init__(self) -> None:
        entries = tuple(sorted(((int(r), int(c)), int(l)) for (r, c), l in self.entries))
        cells = [cell for cell, _ in entries]
        if len(set(cells)) != len(cells):
            raise ValueError("duplicate cell in labeled diagram")
        if any(l < 1 for _, l in entries):
            raise ValueError("labels must be positive")
        object.__setattr__(self, "entries", entries)

    @cached_property
    def diagram(self) -> Diagram:
        return Diagram(tuple(cell for cell, _ in self.entries))

    @cached_property
    def entry_map(self) -> dict[Cell, int]:
        return dict(self.entries)

    @cached_property
    def strings(self) -> dict[int, tuple[Cell, ...]]:
        """Cells per label, ordered by column (then row)."""
        out: dict[int, list[Cell]] = {}
        for cell, label in self.entries:
            out.setdefault(label, []).append(cell)
        return {
            label: tuple(sorted(cells, key=lambda rc: (rc[1], rc[0])))
            for label, cells in sorted(out.items())
        }

    def label_at(self, cell: Cell) -> int:
        return self.entry_map[cell]

    def content(self) -> Composition:
        """Multiplicity of each label from 1 up to the largest present."""
        top = max((l for _, l in self.entries), default=0)
        counts = [0] * top
        for _, l in self.entries:
            counts[l - 1] += 1
        return tuple(counts)

    def column_entries(self, c: int) -> tuple[tuple[int, int], ...]:
        """(row, label) pairs in column ``c``, bottom to top."""
        return tuple((r, l) for (r, cc), l in self.entries if cc == c)

    def to_json(self) -> list[list[int]]:
        return [[r, c, l] for (r, c), l in self.entries]

    @classmethod
    def from_json(cls, data: object) -> "LabeledDiagram":
        if not isinstance(data, list) or not all(
            isinstance(p, list) and len(p) == 3 and all(isinstance(x, int) for x in p)
            for p in data
        ):
            raise ValueError("labeled diagram JSON must be a list of [row, col, label]")
        return cls(tuple(((r, c), l) for r, c, l in data))

    def ascii(self) -> str:
        return grid_ascii({cell: str(l) for cell, l in self.entries})

    def compact(self) -> str:
        """One-line form, top row first, rows joined by '/'."""
        marks = {cell: str(l) for cell, l in self.entries}
        max_row = self.diagram.max_row
        max_col = self.diagram.max_col
        rows = [
            "".join(marks.get((r, c), ".") for c in range(1, max_col + 1))
            for r in range(max_row, 0, -1)
        ]
        return "/".join(rows) if rows else "()"


def _string_columns_ok(t: LabeledDiagram, a: Composition, first_col) -> bool:
    """Condition (1): label i fills columns first_col(i)..a-side bound, once each."""
    n = len(a)
    strings = t.strings
    if any(label > n for label in strings):
        return False
    for i in range(1, n + 1):
        lo, hi = first_col(i)
        cols = sorted(c for _, c in strings.get(i, ()))
        if cols != list(range(lo, hi + 1)):
            return False
    return True


def _flagged(t: LabeledDiagram) -> bool:
    """Condition (2): each entry in row r is at least r."""
    return all(l >= r for (r, _), l in t.entries)


def _weakly_descending_strings(t: LabeledDiagram) -> bool:
    """Condition (3): each string's rows weakly descend left to right."""
    for cells in t.strings.values():
        rows = [r for r, _ in cells]
        if any(rows[k] < rows[k + 1] for k in range(len(rows) - 1)):
            return False
    return True


def _inversions_ok(column: dict[int, int], next_column: dict[int, int]) -> bool:
    """Key condition (4) for one column against the column to its right.

    ``column`` and ``next_column`` map row -> label.  Whenever a smaller
    label sits above a larger one, the smaller label must reappear in the
    next column strictly above the larger one's row.
    """
    for r1, l1 in column.items():
        for r2, l2 in column.items():
            if l1 < l2 and r1 > r2:
                if not any(l == l1 and r > r2 for r, l in next_column.items()):
                    return False
    return True


def validate_kkt(t: LabeledDiagram, a: Composition) -> bool:
    """Check all four key Kohnert tableau conditions for content ``a``."""
    if not _string_columns_ok(t, a, lambda i: (1, a[i - 1])):
        return False
    if not _flagged(t) or not _weakly_descending_strings(t):
        return False
    max_col = t.diagram.max_col
    for c in range(1, max_col + 1):
        cur = {r: l for r, l in t.column_entries(c)}
        nxt = {r: l for r, l in t.column_entries(c + 1)}
        if not _inversions_ok(cur, nxt):
            return False
    return True


def validate_lkt(t: LabeledDiagram, a: Composition) -> bool:
    """Check all four lock Kohnert tableau conditions for content ``a``."""
    m = max(a, default=0)
    if not _string_columns_ok(t, a, lambda i: (m - a[i - 1] + 1, m)):
        return False
    if not _flagged(t) or not _weakly_descending_strings(t):
        return False
    for c in range(1, t.diagram.max_col + 1):
        col = t.column_entries(c)
        if any(col[k][1] >= col[k + 1][1] for k in range(len(col) - 1)):
            return False
    return True


@lru_cache(maxsize=None)
def label_key(d: Diagram, a: Composition) -> LabeledDiagram | None:
    """Find the key Kohnert tableau labeling of ``d`` with content ``a``.

    Condition (1) already fixes which labels each column holds (label i
    occupies columns 1..a_i), so only the vertical arrangement within each
    column is free.  Columns are filled left to right by backtracking over
    arrangements, pruning with the flagged, descent, and inversion rules;
    the search runs to exhaustion so that a second labeling, which would
    contradict uniqueness, is detected.

    Returns None when no labeling exists; raises TheoremViolation if two do.
    """
    n = len(a)
    max_col = max(a, default=0)
    if d.max_col > max_col:
        return None
    col_labels = {c: [i for i in range(1, n + 1) if a[i - 1] >= c] for c in range(1, max_col + 1)}
    col_rows = {c: [r for r, _ in d.column(c)] for c in range(1, max_col + 1)}
    if any(len(col_rows[c]) != len(col_labels[c]) for c in range(1, max_col + 1)):
        return None

    solutions: list[LabeledDiagram] = []
    placed: list[dict[int, int]] = []  # per column: row -> label

    def descent_ok(prev: dict[int, int], cur: dict[int, int]) -> bool:
        # Every label in this column also sits in the previous one.
        rows_by_label = {l: r for r, l in prev.items()}
        return all(rows_by_label[l] >= r for r, l in cur.items())

    def place(c: int) -> None:
        if len(solutions) > 1:
            return
        if c > max_col:
            if not placed or _inversions_ok(placed[-1], {}):
                entries = tuple(
                    ((r, col + 1), l)
                    for col, assignment in enumerate(placed)
                    for r, l in assignment.items()
                )
                solutions.append(LabeledDiagram(entries))
            return
        rows = col_rows[c]
        for perm in permutations(col_labels[c]):
            cur = dict(zip(rows, perm))
            if any(l < r for r, l in cur.items()):
                continue
            if placed and not descent_ok(placed[-1], cur):
                continue
            if placed and not _inversions_ok(placed[-1], cur):
                continue
            placed.append(cur)
            place(c + 1)
            placed.pop()

    place(1)
    if len(solutions) > 1:
        raise TheoremViolation(
            f"two key labelings of {d.cells} for content {a}: "
            f"{solutions[0].entries} and {solutions[1].entries}"
        )
    return solutions[0] if solutions else None


@lru_cache(maxsize=None)
def label_lock(d: Diagram, a: Composition) -> LabeledDiagram | None:
    """Find the lock Kohnert tableau labeling of ``d`` with content ``a``.

    Closed form: each column's label set is forced, and strict column
    decrease forces their order (largest label on top).  The remaining
    flagged and descent conditions are then checked.
    """
    n = len(a)
    m = max(a, default=0)
    if d.max_col > m:
        return None
    entries = []
    for c in range(1, m + 1):
        labels = sorted((i for i in range(1, n + 1) if a[i - 1] >= m - c + 1), reverse=True)
        rows = sorted((r for r, _ in d.column(c)), reverse=True)
        if len(rows) != len(labels):
            return None
        entries.extend(((r, c), l) for r, l in zip(rows, labels))
    t = LabeledDiagram(tuple(entries))
    return t if validate_lkt(t, a) else None


@lru_cache(maxsize=None)
def enumerate_kkt(a: Composition) -> tuple[LabeledDiagram, ...]:
    """All key Kohnert tableaux of content ``a``, in canonical order."""
    out = []
    for d in kohnert_closure(key_diagram(a)):
        t = label_key(d, a)
        if t is None:
            raise TheoremViolation(f"closure diagram {d.cells} of {a} has no key labeling")
        out.append(t)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def enumerate_lkt(a: Composition) -> tuple[LabeledDiagram, ...]:
    """All lock Kohnert tableaux of content ``a``, in canonical order."""
    out = []
    for d in kohnert_closure(lock_diagram(a)):
        t = label_lock(d, a)
        if t is None:
            raise TheoremViolation(f"closure diagram {d.cells} of {a} has no lock labeling")
        out.append(t)
    return tuple(sorted(out))


def lock_source_tableau(a: Composition) -> LabeledDiagram:
    """The unique lock Kohnert tableau of content ``a`` and weight flatten(a)."""
    target = flatten(a)
    found = [t for t in enumerate_lkt(a) if weight(t.diagram) == target]
    if len(found) != 1:
        raise TheoremViolation(f"{len(found)} lock tableaux of weight {target} for {a}")
    return found[0]


def truncate_below(t: LabeledDiagram, bound: int) -> LabeledDiagram:
    """Delete every box whose label is ``bound`` or larger."""
    return LabeledDiagram(tuple((cell, l) for cell, l in t.entries if l < bound))
