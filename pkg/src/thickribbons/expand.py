"""h-basis expansions of thickened-ribbon skew Schur functions.

Three independent routes compute the same expansion: a peel-off recursion
on the last row, a signed sum over the coarsening poset, and the symbolic
Jacobi-Trudi determinant of the embedded skew shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .shapes import (
    Diagram,
    Partition,
    SkewShape,
    as_thick,
    coarsenings,
    to_skew_shape,
)


def _with_part(lam: Partition, x: int) -> Partition:
    """Insert x into a weakly decreasing tuple."""
    for i, p in enumerate(lam):
        if p < x:
            return lam[:i] + (x,) + lam[i:]
    return lam + (x,)


def _monomial(lam: Partition) -> str:
    if not lam:
        return "1"
    chunks = []
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        chunks.append(f"h{lam[i]}" + (f"^{j - i}" if j - i > 1 else ""))
        i = j
    return "*".join(chunks)


@dataclass(frozen=True)
class HExpansion:
    """A skew Schur function written in products of h's, exact integers.

    `terms` holds (partition, coefficient) pairs with nonzero coefficients,
    sorted by partition in reverse-lexicographic order.
    """

    degree: int
    terms: tuple[tuple[Partition, int], ...]

    @classmethod
    def from_dict(cls, degree: int, table: dict[Partition, int]) -> "HExpansion":
        items = sorted(((lam, c) for lam, c in table.items() if c), reverse=True)
        for lam, _ in items:
            if sum(lam) != degree:
                raise ValueError(f"term {lam} breaks homogeneity of degree {degree}")
        return cls(degree, tuple(items))

    @cached_property
    def _table(self) -> dict[Partition, int]:
        return dict(self.terms)

    def coeff(self, lam: Partition) -> int:
        return self._table.get(tuple(lam), 0)

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.terms)

    def to_json_obj(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"partition": list(lam), "coeff": c} for lam, c in self.terms],
        }

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for lam, c in self.terms:
            mono = _monomial(lam)
            if abs(c) == 1:
                body = mono
            elif mono == "1":
                body = str(abs(c))
            else:
                body = f"{abs(c)}*{mono}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(("+ " if c > 0 else "- ") + body)
        return " ".join(chunks)


def expand_recursive(diagram: Diagram) -> HExpansion:
    """Expand by peeling the top row.

    With a plain adjacency on top the function splits as (rest) * h_top
    minus (rest with the top two rows merged); across a box-dot the merged
    term also picks up a factor h_{m-1} and the merge loses m-1 cells.
    """
    thick = as_thick(diagram)
    parts, dots, m = thick.parts, thick.dots, thick.m
    memo: dict[tuple[int, int], dict[Partition, int]] = {}

    def rec(j: int, x: int) -> dict[Partition, int]:
        # rows parts[:j] plus a top row of x cells, adjacencies dots[:j]
        if j == 0:
            return {(x,): 1}
        key = (j, x)
        cached = memo.get(key)
        if cached is not None:
            return cached
        below = parts[j - 1]
        acc: dict[Partition, int] = {}
        for lam, c in rec(j - 1, below).items():
            mu = _with_part(lam, x)
            acc[mu] = acc.get(mu, 0) + c
        if dots[j - 1]:
            merged = rec(j - 1, below + x - m + 1)
            w = m - 1
            for lam, c in merged.items():
                mu = _with_part(lam, w)
                acc[mu] = acc.get(mu, 0) - c
        else:
            merged = rec(j - 1, below + x)
            for lam, c in merged.items():
                acc[lam] = acc.get(lam, 0) - c
        result = {lam: c for lam, c in acc.items() if c}
        memo[key] = result
        return result

    return HExpansion.from_dict(thick.size, rec(len(parts) - 1, parts[-1]))


def expand_poset(diagram: Diagram) -> HExpansion:
    """Expand as the signed sum of h_{m-1}^k * h_{sorted parts} over all
    coarsenings, with sign (-1)^(length of D + length of the coarsening)."""
    thick = as_thick(diagram)
    m = thick.m
    base_len = thick.length
    acc: dict[Partition, int] = {}
    for coarse, k in coarsenings(thick):
        lam = tuple(sorted(coarse.parts + (m - 1,) * k, reverse=True))
        sign = -1 if (base_len + coarse.length) % 2 else 1
        acc[lam] = acc.get(lam, 0) + sign
    return HExpansion.from_dict(thick.size, {l: c for l, c in acc.items() if c})


def expand_determinant(shape: SkewShape) -> HExpansion:
    """Expand det(h_{lam_i - mu_j - i + j}) by memoized Laplace expansion.

    Subdeterminants are keyed on the set of still-unused columns; entries
    h_0 = 1 and h_negative = 0.
    """
    lam, mu = shape.lam, shape.mu
    size = len(lam)
    memo: dict[int, dict[Partition, int]] = {0: {(): 1}}

    def det(mask: int) -> dict[Partition, int]:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        row = size - bin(mask).count("1")
        acc: dict[Partition, int] = {}
        sign = 1
        for j in range(size):
            if not (mask >> j) & 1:
                continue
            entry = lam[row] - mu[j] - row + j
            if entry >= 0:
                sub = det(mask & ~(1 << j))
                if entry == 0:
                    for p, c in sub.items():
                        acc[p] = acc.get(p, 0) + sign * c
                else:
                    for p, c in sub.items():
                        q = _with_part(p, entry)
                        acc[q] = acc.get(q, 0) + sign * c
            sign = -sign
        result = {p: c for p, c in acc.items() if c}
        memo[mask] = result
        return result

    return HExpansion.from_dict(shape.size, det((1 << size) - 1))


_METHODS = {
    "recursive": expand_recursive,
    "poset": expand_poset,
    "det": lambda d: expand_determinant(to_skew_shape(d)),
}


def expand(diagram: Diagram, method: str = "recursive") -> HExpansion:
    try:
        return _METHODS[method](diagram)
    except KeyError:
        raise ValueError(f"unknown expansion method {method!r}") from None


def equivalent(d: Diagram, e: Diagram, method: str = "recursive") -> bool:
    """Whether the two diagrams have equal skew Schur functions."""
    if as_thick(d).m != as_thick(e).m:
        raise ValueError("diagrams must share the same block width m")
    return expand(d, method) == expand(e, method)
