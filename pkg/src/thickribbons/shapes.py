"""Compositions, partitions, box-dotted compositions and skew shapes.

A composition lists the row sizes of a ribbon bottom row first.  A box-dot
between two components marks a pair of adjacent rows overlapping in m
columns (a 2 x m block); both components touching a dot must be >= m.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

Composition = tuple[int, ...]
Partition = tuple[int, ...]


def cut_set(alpha: Composition) -> frozenset[int]:
    """Proper partial sums of alpha, a subset of {1, ..., n-1}."""
    cuts = []
    total = 0
    for part in alpha[:-1]:
        total += part
        cuts.append(total)
    return frozenset(cuts)


def composition_from_cuts(cuts: Iterable[int], n: int) -> Composition:
    """Rebuild the composition of n whose proper partial sums are `cuts`."""
    marks = sorted(set(cuts))
    if marks and not (1 <= marks[0] and marks[-1] <= n - 1):
        raise ValueError(f"cut positions must lie in 1..{n - 1}, got {marks}")
    bounds = [0] + marks + [n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def reverse(alpha: Composition) -> Composition:
    return alpha[::-1]


def conjugate(lam: Partition) -> Partition:
    """Transpose of a partition's diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n == 0:
        return [()]
    cap = n if max_part is None else min(max_part, n)
    out = []
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


@dataclass(frozen=True)
class ThickRibbon:
    """An m-regular thickened ribbon, stored as a box-dotted composition.

    `segments` are the maximal plain-ribbon runs; consecutive segments are
    separated by a box-dot.
    """

    segments: tuple[Composition, ...]
    m: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("block width m must be at least 2")
        if not self.segments or any(not seg for seg in self.segments):
            raise ValueError("segments must be nonempty")
        for seg in self.segments:
            if any(part < 1 for part in seg):
                raise ValueError(f"parts must be positive, got {seg}")
        for left, right in zip(self.segments, self.segments[1:]):
            if left[-1] < self.m or right[0] < self.m:
                raise ValueError(
                    f"box-dot neighbours must be >= m={self.m}: "
                    f"{left[-1]}|{right[0]}"
                )
        # a row between two box-dots meets both blocks; anything shorter
        # than 2m-1 would stack three rows over two shared columns
        for seg in self.segments[1:-1]:
            if len(seg) == 1 and seg[0] < 2 * self.m - 1:
                raise ValueError(
                    f"row of {seg[0]} between two box-dots needs >= {2 * self.m - 1}"
                )

    @property
    def parts(self) -> Composition:
        return tuple(p for seg in self.segments for p in seg)

    @property
    def dots(self) -> tuple[bool, ...]:
        """For each adjacency of `parts`, whether it carries a box-dot."""
        flags = []
        for seg in self.segments[:-1]:
            flags.extend([False] * (len(seg) - 1) + [True])
        flags.extend([False] * (len(self.segments[-1]) - 1))
        return tuple(flags)

    @property
    def size(self) -> int:
        return sum(p for seg in self.segments for p in seg)

    @property
    def length(self) -> int:
        return sum(len(seg) for seg in self.segments)

    def __str__(self) -> str:
        return "|".join(",".join(str(p) for p in seg) for seg in self.segments)

    def one_dot(self) -> "OneDotRibbon":
        if len(self.segments) != 2:
            raise ValueError("diagram does not have exactly one box-dot")
        return OneDotRibbon(self.segments[0], self.segments[1], self.m)


@dataclass(frozen=True)
class OneDotRibbon:
    """A thickened ribbon alpha [dot] beta with exactly one 2 x m block."""

    alpha: Composition
    beta: Composition
    m: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("block width m must be at least 2")
        if not self.alpha or not self.beta:
            raise ValueError("alpha and beta must be nonempty")
        if any(p < 1 for p in self.alpha + self.beta):
            raise ValueError("parts must be positive")
        if self.alpha[-1] < self.m or self.beta[0] < self.m:
            raise ValueError(
                f"box-dot neighbours must be >= m={self.m}: "
                f"{self.alpha[-1]}|{self.beta[0]}"
            )

    @property
    def size_alpha(self) -> int:
        return sum(self.alpha)

    @property
    def size_beta(self) -> int:
        return sum(self.beta)

    @property
    def size(self) -> int:
        return self.size_alpha + self.size_beta

    def ribbon(self) -> ThickRibbon:
        return ThickRibbon((self.alpha, self.beta), self.m)

    def __str__(self) -> str:
        return str(self.ribbon())


Diagram = Union[ThickRibbon, OneDotRibbon]


def as_thick(diagram: Diagram) -> ThickRibbon:
    if isinstance(diagram, ThickRibbon):
        return diagram
    return diagram.ribbon()


def parse_ribbon(text: str, m: int) -> ThickRibbon:
    """Parse the `a,b|c,d` grammar; whitespace is ignored."""
    compact = "".join(text.split())
    if not compact:
        raise ValueError("empty diagram")
    segments = []
    for chunk in compact.split("|"):
        if not chunk:
            raise ValueError(f"empty segment in {text!r}")
        try:
            seg = tuple(int(tok) for tok in chunk.split(","))
        except ValueError:
            raise ValueError(f"malformed diagram {text!r}") from None
        segments.append(seg)
    return ThickRibbon(tuple(segments), m)


def parse_one_dot(text: str, m: int) -> OneDotRibbon:
    return parse_ribbon(text, m).one_dot()


def sorted_partition(obj) -> Partition:
    """The partition obtained by sorting the parts weakly decreasing."""
    parts = obj if isinstance(obj, tuple) else as_thick(obj).parts
    return tuple(sorted(parts, reverse=True))


def antipodal(diagram: Diagram) -> Diagram:
    """Rotate the diagram by 180 degrees."""
    if isinstance(diagram, OneDotRibbon):
        return OneDotRibbon(reverse(diagram.beta), reverse(diagram.alpha), diagram.m)
    return ThickRibbon(
        tuple(reverse(seg) for seg in reversed(diagram.segments)), diagram.m
    )


class CoarsePair(NamedTuple):
    diagram: ThickRibbon
    k: int


def coarsenings(diagram: Diagram) -> list[CoarsePair]:
    """All pairs (S; k) coarsening the diagram, including (D; 0).

    Each of the length-1 adjacencies is independently merged or kept;
    merging across a box-dot consumes it (k counts consumed dots and the
    merged component loses m-1).  The list has 2^(length-1) entries.
    """
    thick = as_thick(diagram)
    parts, dots, m = thick.parts, thick.dots, thick.m
    n_adj = len(parts) - 1
    out = []
    for mask in range(1 << n_adj):
        segments: list[list[int]] = [[]]
        current = parts[0]
        consumed = 0
        for i in range(n_adj):
            if (mask >> i) & 1:
                current += parts[i + 1]
                if dots[i]:
                    current -= m - 1
                    consumed += 1
            else:
                segments[-1].append(current)
                current = parts[i + 1]
                if dots[i]:
                    segments.append([])
        segments[-1].append(current)
        coarse = ThickRibbon(tuple(tuple(seg) for seg in segments), m)
        out.append(CoarsePair(coarse, consumed))
    return out


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram lam/mu; mu is zero-padded to the length of lam."""

    lam: Partition
    mu: Partition = ()

    def __post_init__(self):
        mu = self.mu + (0,) * (len(self.lam) - len(self.mu))
        object.__setattr__(self, "mu", mu)
        if len(mu) != len(self.lam):
            raise ValueError("mu longer than lam")
        for seq in (self.lam, mu):
            if any(a < b for a, b in zip(seq, seq[1:])):
                raise ValueError("rows must be weakly decreasing")
        if any(m_ > l_ or m_ < 0 for l_, m_ in zip(self.lam, mu)):
            raise ValueError("mu must be contained in lam")

    @property
    def size(self) -> int:
        return sum(self.lam) - sum(self.mu)

    def cells(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, j)
            for i, (top, bottom) in enumerate(zip(self.lam, self.mu))
            for j in range(bottom, top)
        )


def to_skew_shape(diagram: Diagram) -> SkewShape:
    """Embed the diagram in the plane as a skew shape.

    Rows are placed bottom-up; a higher row overlaps the one below in one
    column inside a segment and in m columns across a box-dot.
    """
    thick = as_thick(diagram)
    parts, dots, m = thick.parts, thick.dots, thick.m
    lefts, rights = [0], [parts[0] - 1]
    for i, part in enumerate(parts[1:]):
        overlap = m if dots[i] else 1
        left = rights[-1] - overlap + 1
        lefts.append(left)
        rights.append(left + part - 1)
    lam = tuple(r + 1 for r in reversed(rights))
    mu = tuple(l for l in reversed(lefts))
    shape = SkewShape(lam, mu)
    assert shape.size == thick.size
    return shape


def transpose(shape: SkewShape) -> SkewShape:
    """Reflect the shape along the main diagonal."""
    mu = tuple(p for p in shape.mu if p > 0)
    return SkewShape(conjugate(shape.lam), conjugate(mu))
