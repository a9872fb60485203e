"""Semistandard-tableaux oracle: Kostka vectors as a second equivalence test."""

from __future__ import annotations

from dataclasses import dataclass

from .shapes import Diagram, Partition, SkewShape, partitions_of, to_skew_shape

DEFAULT_MAX_CELLS = 10


@dataclass(frozen=True)
class KostkaVector:
    """Nonzero Kostka numbers of a skew shape, content partitions as keys."""

    degree: int
    entries: tuple[tuple[Partition, int], ...]

    def count(self, nu: Partition) -> int:
        return dict(self.entries).get(tuple(nu), 0)

    def to_json_obj(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"partition": list(nu), "kostka": k} for nu, k in self.entries],
        }


def _cell_grid(shape: SkewShape):
    """Row-major cells plus, per cell, the indices of its left and upper
    neighbours inside the shape (or None)."""
    index = {}
    cells = []
    for i, (top, bottom) in enumerate(zip(shape.lam, shape.mu)):
        for j in range(bottom, top):
            index[(i, j)] = len(cells)
            cells.append((i, j))
    lefts = [index.get((i, j - 1)) for i, j in cells]
    ups = [index.get((i - 1, j)) for i, j in cells]
    return cells, lefts, ups


def count_fillings(shape: SkewShape, content: Partition) -> int:
    """Semistandard fillings of the shape with exactly `content`: rows
    weakly increase, columns strictly increase."""
    if sum(content) != shape.size:
        return 0
    cells, lefts, ups = _cell_grid(shape)
    remaining = list(content)
    values = [0] * len(cells)
    top = len(content)

    def backtrack(idx: int) -> int:
        if idx == len(cells):
            return 1
        low = 1
        if lefts[idx] is not None:
            low = values[lefts[idx]]
        if ups[idx] is not None:
            low = max(low, values[ups[idx]] + 1)
        total = 0
        for v in range(low, top + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            values[idx] = v
            total += backtrack(idx + 1)
            remaining[v - 1] += 1
        return total

    return backtrack(0)


def kostka_vector(shape: SkewShape, max_cells: int = DEFAULT_MAX_CELLS) -> KostkaVector:
    """Kostka numbers of the shape for every content partition of its size.

    Enumeration only; refuses shapes above `max_cells`.
    """
    n = shape.size
    if n > max_cells:
        raise ValueError(
            f"shape has {n} cells, above the enumeration guard {max_cells}"
        )
    entries = []
    for nu in partitions_of(n):
        k = count_fillings(shape, nu)
        if k:
            entries.append((nu, k))
    return KostkaVector(n, tuple(entries))


def count_standard_tableaux(shape: SkewShape) -> int:
    """Standard fillings, counted as linear extensions of the cell poset.

    Independent of count_fillings: dynamic programming over subsets,
    removing one maximal cell at a time.
    """
    cells, _, _ = _cell_grid(shape)
    index = {cell: i for i, cell in enumerate(cells)}
    rights = [index.get((i, j + 1)) for i, j in cells]
    downs = [index.get((i + 1, j)) for i, j in cells]
    memo = {0: 1}

    def ways(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        total = 0
        for c in range(len(cells)):
            if not (mask >> c) & 1:
                continue
            r, d = rights[c], downs[c]
            if (r is None or not (mask >> r) & 1) and (
                d is None or not (mask >> d) & 1
            ):
                total += ways(mask & ~(1 << c))
        memo[mask] = total
        return total

    return ways((1 << len(cells)) - 1)


def equivalent_by_kostka(
    d: Diagram, e: Diagram, max_cells: int = DEFAULT_MAX_CELLS
) -> bool:
    """Equality of skew Schur functions via Kostka vectors."""
    if d.m != e.m:
        raise ValueError("diagrams must share the same block width m")
    return kostka_vector(to_skew_shape(d), max_cells) == kostka_vector(
        to_skew_shape(e), max_cells
    )
