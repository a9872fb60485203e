"""Gluing ribbons into one-box-dot diagrams and factoring them back.

A two-row ribbon S = (p, q) and a ribbon T combine into a diagram built
from p + q overlapping copies of T; the inverse direction reads the
gcd-period factorization off the sign table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .shapes import (
    Composition,
    OneDotRibbon,
    antipodal,
    composition_from_cuts,
    reverse,
)
from .structure import period, sign_table

HORIZONTAL = "horizontal"
VERTICAL = "vertical"


@dataclass(frozen=True)
class RibbonType:
    """How the bottom and top glue rows of m-1 cells sit in a ribbon."""

    bottom: str
    top: str

    def __str__(self) -> str:
        def arrow(kind):
            return "->" if kind == HORIZONTAL else "^"

        return f"W{arrow(self.bottom)}O{arrow(self.top)}W"


def ribbon_type(t: Composition, m: int) -> RibbonType:
    """Attachment type of the glue rows: an extreme row of >= m cells
    carries the glue row horizontally, one of exactly m-1 cells is the
    glue row itself (vertical attachment)."""
    if not t:
        raise ValueError("empty ribbon")
    if sum(t) < m:
        raise ValueError(f"ribbon of {sum(t)} cells cannot host two glue rows")

    def end(part: int) -> str:
        if part >= m:
            return HORIZONTAL
        if part == m - 1:
            return VERTICAL
        raise ValueError(
            f"extreme row of {part} cells cannot contain a glue row of {m - 1}"
        )

    return RibbonType(end(t[0]), end(t[-1]))


def _ribbon_cells(t: Composition) -> tuple[list[tuple[int, int]], int]:
    """Cells of a ribbon, bottom row at height 0 starting in column 0;
    consecutive rows overlap in one column.  Also returns the rightmost
    column of the top row."""
    cells = []
    left = 0
    for row, size in enumerate(t):
        cells.extend((row, left + j) for j in range(size))
        left += size - 1
    return cells, left


def _read_one_dot(cells: set[tuple[int, int]], m: int) -> OneDotRibbon:
    rows: dict[int, list[int]] = {}
    for r, c in cells:
        rows.setdefault(r, []).append(c)
    row_ids = sorted(rows)
    if row_ids != list(range(row_ids[0], row_ids[-1] + 1)):
        raise ValueError("cells do not form consecutive rows")
    spans = []
    for r in row_ids:
        cols = sorted(rows[r])
        if cols[-1] - cols[0] + 1 != len(cols):
            raise ValueError(f"row {r} is not contiguous")
        spans.append((cols[0], cols[-1]))
    parts = [hi - lo + 1 for lo, hi in spans]
    dot_at = None
    for i in range(len(spans) - 1):
        overlap = spans[i][1] - spans[i + 1][0] + 1
        if overlap == 1:
            continue
        if overlap == m:
            if dot_at is not None:
                raise ValueError("more than one 2 x m block")
            dot_at = i
        else:
            raise ValueError(f"rows {i},{i + 1} overlap in {overlap} columns")
    if dot_at is None:
        raise ValueError("no 2 x m block")
    return OneDotRibbon(
        tuple(parts[: dot_at + 1]), tuple(parts[dot_at + 1 :]), m
    )


def compose(p: int, q: int, t: Composition, m: int) -> OneDotRibbon:
    """Glue p + q copies of the ribbon t along a two-row ribbon (p, q).

    Copies chain by identifying the upper glue row of one with the lower
    glue row of the next.  At the single vertical step the next copy
    shifts one position northwest (both glue rows horizontal), one
    position southeast (both vertical), or is chained as usual with an
    extra glue row dropped southeast / northwest of the identified one
    (mixed types).
    """
    if p < 1 or q < 1:
        raise ValueError("row sizes of the gluing ribbon must be positive")
    kind = ribbon_type(t, m)
    base, top_right = _ribbon_cells(t)
    step = (len(t) - 1, top_right - (m - 2))  # lower glue row -> upper glue row
    offsets = [(0, 0)]
    for _ in range(p - 1):
        offsets.append((offsets[-1][0] + step[0], offsets[-1][1] + step[1]))
    glue = (offsets[-1][0] + step[0], offsets[-1][1] + step[1])
    extra: list[tuple[int, int]] = []
    if kind == RibbonType(HORIZONTAL, HORIZONTAL):
        offsets.append((glue[0] + 1, glue[1] - 1))
    elif kind == RibbonType(VERTICAL, VERTICAL):
        offsets.append((glue[0] - 1, glue[1] + 1))
    elif kind == RibbonType(HORIZONTAL, VERTICAL):
        offsets.append(glue)
        extra = [(glue[0] - 1, glue[1] + 1 + j) for j in range(m - 1)]
    else:
        offsets.append(glue)
        extra = [(glue[0] + 1, glue[1] - 1 + j) for j in range(m - 1)]
    for _ in range(q - 1):
        offsets.append((offsets[-1][0] + step[0], offsets[-1][1] + step[1]))
    cells = set(extra)
    for dr, dc in offsets:
        cells.update((r + dr, c + dc) for r, c in base)
    expected = (p + q) * (sum(t) - m + 1) + 2 * (m - 1)
    if len(cells) != expected:
        raise ValueError("cell collision: invalid gluing data")
    return _read_one_dot(cells, m)


@dataclass(frozen=True)
class Factorization:
    """D = (p, q) glued along copies of t, with p*r' and q*r' recovering
    the reduced row sums; t has r' + m - 1 cells for the period r'."""

    s: tuple[int, int]
    t: Composition
    m: int


def factorize(diagram: OneDotRibbon) -> Optional[Factorization]:
    """Gcd-period factorization, present iff the sign table is constant on
    every residue class mod r away from the two forced positions.

    t is rebuilt from the + positions below r: their cut composition gets
    m-1 added to its last component when residue 0 carries -, and a new
    trailing component m-1 when it carries +.  The residue-0 value is read
    off a non-forced multiple of r; in the one corner with none (both row
    sums 2m-2) the two candidates are disambiguated by round-trip.
    """
    table = sign_table(diagram)
    r = period(diagram)
    a, m = diagram.size_alpha, diagram.m
    forced = {a - m + 1, a}
    top = diagram.size - m
    seen: dict[int, bool] = {}
    for x in range(1, top + 1):
        if x in forced:
            continue
        value = table.is_plus(x)
        if seen.setdefault(x % r, value) != value:
            return None
    plus_cuts = [x for x in range(1, r) if table.is_plus(x)]
    comp = composition_from_cuts(plus_cuts, r)
    with_taller_row = comp[:-1] + (comp[-1] + m - 1,)
    with_new_row = comp + (m - 1,)
    residue0 = seen.get(0)
    if residue0 is None:
        candidates = (with_taller_row, with_new_row)
    else:
        candidates = (with_new_row,) if residue0 else (with_taller_row,)
    s = ((a - m + 1) // r, (diagram.size_beta - m + 1) // r)
    for t in candidates:
        if compose(s[0], s[1], t, m) == diagram:
            return Factorization(s, t, m)
    raise AssertionError(
        f"periodic sign table but no factorization round-trips: {diagram}"
    )


class Orbit(NamedTuple):
    members: frozenset[OneDotRibbon]
    kappa: int


def equivalence_orbit(diagram: OneDotRibbon) -> Orbit:
    """Predicted equivalence class: reverse either factor of the gcd
    factorization, or just {D, D*} when only the trivial one exists."""
    fact = factorize(diagram)
    if fact is None:
        members = frozenset({diagram, antipodal(diagram)})
        return Orbit(members, 0 if len(members) == 1 else 1)
    p, q = fact.s
    t = fact.t
    members = frozenset(
        {
            compose(p, q, t, fact.m),
            compose(p, q, reverse(t), fact.m),
            compose(q, p, t, fact.m),
            compose(q, p, reverse(t), fact.m),
        }
    )
    kappa = int(p != q) + int(t != reverse(t))
    return Orbit(members, kappa)
