"""Vertical pairing, raising/lowering operators, and crystal graphs.

Raising pushes a box from row i+1 down to row i; lowering is its partial
inverse.  On key tableaux the operators act through the underlying diagram
and relabeling; on lock tableaux the moved box keeps its label, with an
extra same-label stop condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .core import Cell, Composition, Diagram, TheoremViolation, padded_weight
from .poly import SparsePolynomial
from .tableaux import (
    LabeledDiagram,
    enumerate_kkt,
    enumerate_lkt,
    label_key,
    label_lock,
    validate_lkt,
)


@dataclass(frozen=True)
class VerticalPairing:
    """Outcome of pairing rows i and i+1 of a diagram.

    ``pairs`` holds (lower, upper) cell pairs; the unpaired lists are
    ordered left to right.
    """

    row: int
    pairs: tuple[tuple[Cell, Cell], ...]
    unpaired_lower: tuple[Cell, ...]
    unpaired_upper: tuple[Cell, ...]


def match_lines(
    prev_cells: tuple[Cell, ...],
    next_cells: tuple[Cell, ...],
    pos: Callable[[Cell], int],
) -> tuple[dict[Cell, Cell], list[Cell], list[Cell]]:
    """Shared matching routine for vertical and horizontal pairings.

    ``prev`` is the line matched against (row i / column i) and ``next`` the
    line whose boxes seek partners (row i+1 / column i+1).  ``pos`` maps a
    cell to its ordering coordinate: column for row pairing, negated row for
    column pairing, so that "earlier" means left of / above the seeker.
    Same-position boxes pair first; then each unpaired next-line box pairs
    with the nearest earlier unpaired prev-line box whenever every box
    strictly between them is already paired, iterated to a fixpoint.

    Returns the pairing as a dict (prev cell -> next cell) plus the leftover
    cells of each line sorted by ``pos``.
    """
    prev_at = {pos(cell): cell for cell in prev_cells}
    next_at = {pos(cell): cell for cell in next_cells}
    paired_prev: dict[Cell, Cell] = {}
    paired_next: set[Cell] = set()
    for p, seeker in next_at.items():
        if p in prev_at:
            paired_prev[prev_at[p]] = seeker
            paired_next.add(seeker)

    def all_between_paired(lo: int, hi: int) -> bool:
        for p in range(lo + 1, hi):
            if p in prev_at and prev_at[p] not in paired_prev:
                return False
            if p in next_at and next_at[p] not in paired_next:
                return False
        return True

    changed = True
    while changed:
        changed = False
        for p in sorted(next_at, reverse=True):
            seeker = next_at[p]
            if seeker in paired_next:
                continue
            free = [q for q, cell in prev_at.items() if q < p and cell not in paired_prev]
            if not free:
                continue
            q = max(free)
            if all_between_paired(q, p):
                paired_prev[prev_at[q]] = seeker
                paired_next.add(seeker)
                changed = True
    unpaired_prev = [prev_at[q] for q in sorted(prev_at) if prev_at[q] not in paired_prev]
    unpaired_next = [next_at[q] for q in sorted(next_at) if next_at[q] not in paired_next]
    return paired_prev, unpaired_prev, unpaired_next


def vertical_pairing(d: Diagram, i: int) -> VerticalPairing:
    """Pair the boxes of rows i and i+1: same column first, then each
    unpaired upper box with the rightmost unpaired lower box to its left
    whenever everything between is already paired."""
    if i < 1:
        raise ValueError("row index must be positive")
    paired, unpaired_lower, unpaired_upper = match_lines(
        d.row(i), d.row(i + 1), lambda cell: cell[1]
    )
    pairs = tuple(sorted(paired.items()))
    return VerticalPairing(i, pairs, tuple(unpaired_lower), tuple(unpaired_upper))


def raise_diagram(d: Diagram, i: int) -> Diagram | None:
    """Push the rightmost vertically unpaired box of row i+1 down to row i."""
    vp = vertical_pairing(d, i)
    if not vp.unpaired_upper:
        return None
    _, c = vp.unpaired_upper[-1]
    return d.move((i + 1, c), (i, c))


def lower_diagram(d: Diagram, i: int) -> Diagram | None:
    """Push the leftmost vertically unpaired box of row i up to row i+1."""
    vp = vertical_pairing(d, i)
    if not vp.unpaired_lower:
        return None
    _, c = vp.unpaired_lower[0]
    return d.move((i, c), (i + 1, c))


def raise_kkt(t: LabeledDiagram, a: Composition, i: int) -> LabeledDiagram | None:
    """Raising on a key Kohnert tableau: raise the diagram, then relabel."""
    d2 = raise_diagram(t.diagram, i)
    if d2 is None:
        return None
    t2 = label_key(d2, a)
    if t2 is None:
        raise TheoremViolation(f"raised key diagram {d2.cells} lost its labeling for {a}")
    return t2


def raise_lkt(t: LabeledDiagram, a: Composition, i: int) -> LabeledDiagram | None:
    """Raising on a lock Kohnert tableau.

    The rightmost unpaired box of row i+1 moves down one row keeping its
    label, unless a box to its right in the same row carries the same
    label, in which case the operator returns None even though the
    underlying diagram could still be raised.
    """
    vp = vertical_pairing(t.diagram, i)
    if not vp.unpaired_upper:
        return None
    box = vp.unpaired_upper[-1]
    label = t.label_at(box)
    r, c = box
    if any(cc > c and t.label_at((r, cc)) == label for _, cc in t.diagram.row(r)):
        return None
    entries = tuple(((i, c) if cell == box else cell, l) for cell, l in t.entries)
    t2 = LabeledDiagram(entries)
    if not validate_lkt(t2, a):
        raise TheoremViolation(
            f"lock raising of {t.entries} by color {i} produced an invalid tableau"
        )
    return t2


def lower_kkt(t: LabeledDiagram, a: Composition, i: int) -> LabeledDiagram | None:
    """Partial inverse of raise_kkt: the unique tableau raising back to ``t``."""
    d2 = lower_diagram(t.diagram, i)
    if d2 is None:
        return None
    t2 = label_key(d2, a)
    if t2 is None or raise_kkt(t2, a, i) != t:
        return None
    return t2


def lower_lkt(t: LabeledDiagram, a: Composition, i: int) -> LabeledDiagram | None:
    """Partial inverse of raise_lkt; None when no lock tableau raises to ``t``."""
    d2 = lower_diagram(t.diagram, i)
    if d2 is None:
        return None
    t2 = label_lock(d2, a)
    if t2 is None or raise_lkt(t2, a, i) != t:
        return None
    return t2


@dataclass(frozen=True)
class CrystalGraph:
    """Tableau vertices plus colored edges; an edge (u, v, i) means the
    color-i lowering operator sends vertex u to vertex v."""

    kind: str
    content: Composition
    vertices: tuple[LabeledDiagram, ...]
    edges: tuple[tuple[int, int, int], ...]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "content": list(self.content),
            "vertices": [v.to_json() for v in self.vertices],
            "edges": [list(e) for e in self.edges],
        }

    def to_dot(self) -> str:
        palette = ("blue", "purple", "violet", "red", "darkgreen", "orange", "brown")
        lines = [
            "digraph crystal {",
            "  rankdir=TB;",
            '  node [shape=box, fontname="monospace"];',
        ]
        for idx, v in enumerate(self.vertices):
            lines.append(f'  t{idx} [label="{v.compact()}"];')
        for src, dst, color in self.edges:
            style = palette[(color - 1) % len(palette)]
            lines.append(f'  t{src} -> t{dst} [label="{color}", color="{style}"];')
        lines.append("}")
        return "\n".join(lines)


@lru_cache(maxsize=None)
def crystal_graph(a: Composition, kind: str) -> CrystalGraph:
    """Build the key or lock crystal of content ``a``.

    Raising is applied to every vertex and every color 1..len(a)-1, so a
    disconnected graph would be constructed faithfully rather than hidden
    by a search from one source.
    """
    if kind == "key":
        vertices = enumerate_kkt(a)
        raiser = raise_kkt
    elif kind == "lock":
        vertices = enumerate_lkt(a)
        raiser = raise_lkt
    else:
        raise ValueError(f"kind must be 'key' or 'lock', got {kind!r}")
    index = {v: k for k, v in enumerate(vertices)}
    edges = []
    for v_idx, v in enumerate(vertices):
        for color in range(1, len(a)):
            u = raiser(v, a, color)
            if u is not None:
                edges.append((index[u], v_idx, color))
    return CrystalGraph(kind, a, vertices, tuple(sorted(edges)))


def is_connected(g: CrystalGraph) -> bool:
    """Whether the underlying undirected graph has at most one component."""
    count = len(g.vertices)
    if count <= 1:
        return True
    parent = list(range(count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for src, dst, _ in g.edges:
        parent[find(src)] = find(dst)
    return len({find(x) for x in range(count)}) == 1


def character(g: CrystalGraph) -> SparsePolynomial:
    """Generating polynomial of the vertex weights."""
    n = len(g.content)
    counts: dict[tuple[int, ...], int] = {}
    for v in g.vertices:
        w = padded_weight(v.diagram, n)
        counts[w] = counts.get(w, 0) + 1
    return SparsePolynomial.from_dict(n, counts)
