"""Structural invariants of one-box-dot diagrams.

The sign function records which two-row coarsenings consuming the box-dot
exist; its symmetry classes of positions and their A/B/C/D taxonomy drive
the classification of equivalent diagrams.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .shapes import OneDotRibbon, coarsenings, composition_from_cuts, cut_set


def period(diagram: OneDotRibbon) -> int:
    """gcd of |alpha| - m + 1 and |beta| - m + 1."""
    m = diagram.m
    return math.gcd(diagram.size_alpha - m + 1, diagram.size_beta - m + 1)


@dataclass(frozen=True)
class SignTable:
    """Signs of positions 1 .. n - m; `plus` holds the + positions."""

    n: int
    m: int
    size_alpha: int
    size_beta: int
    plus: frozenset[int]

    @property
    def domain(self) -> range:
        return range(1, self.n - self.m + 1)

    def is_plus(self, x: int) -> bool:
        if not 1 <= x <= self.n - self.m:
            raise ValueError(f"position {x} outside 1..{self.n - self.m}")
        return x in self.plus

    def sign(self, x: int) -> str:
        return "+" if self.is_plus(x) else "-"


def sign_table(diagram: OneDotRibbon) -> SignTable:
    """Signs via the glued cut set: + exactly on the partial sums of alpha
    and the shifted partial sums of beta."""
    a, m = diagram.size_alpha, diagram.m
    shift = a - m + 1
    plus = set(cut_set(diagram.alpha))
    plus.update(shift + t for t in cut_set(diagram.beta))
    return SignTable(
        n=diagram.size,
        m=m,
        size_alpha=a,
        size_beta=diagram.size_beta,
        plus=frozenset(plus),
    )


def sign_table_from_coarsenings(diagram: OneDotRibbon) -> SignTable:
    """Slow reference path: + at x iff the two-row pair (x, n-m+1-x; 1)
    coarsens the diagram."""
    plus = set()
    for coarse, k in coarsenings(diagram):
        if k == 1 and coarse.length == 2:
            plus.add(coarse.parts[0])
    return SignTable(
        n=diagram.size,
        m=diagram.m,
        size_alpha=diagram.size_alpha,
        size_beta=diagram.size_beta,
        plus=frozenset(plus),
    )


def element_type(table: SignTable, x: int) -> int:
    """Number of + signs among position x and its mirror n - m + 1 - x."""
    mirror = table.n - table.m + 1 - x
    return int(table.is_plus(x)) + int(table.is_plus(mirror))


@dataclass(frozen=True)
class IntegerClasses:
    """Partition of {1, .., n - m} under the three position involutions."""

    r: int
    blocks: tuple[tuple[int, ...], ...]

    def block_of(self, x: int) -> tuple[int, ...]:
        for block in self.blocks:
            if x in block:
                return block
        raise ValueError(f"position {x} not classified")


def integer_classes(diagram: OneDotRibbon) -> IntegerClasses:
    """Transitive closure of x ~ n-m+1-x, x ~ |alpha|-x (x < |alpha|), and
    x ~ |alpha|+n-2m+2-x (x > |alpha|-m+1), restricted to 1..n-m."""
    a, m, n = diagram.size_alpha, diagram.m, diagram.size
    top = n - m
    parent = list(range(top + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        parent[find(x)] = find(y)

    for i in range(1, top + 1):
        union(i, n - m + 1 - i)
    for i in range(1, a):
        union(i, a - i)
    for i in range(a - m + 2, top + 1):
        union(i, a + n - 2 * m + 2 - i)
    groups: dict[int, list[int]] = {}
    for i in range(1, top + 1):
        groups.setdefault(find(i), []).append(i)
    blocks = tuple(sorted(tuple(sorted(g)) for g in groups.values()))
    return IntegerClasses(period(diagram), blocks)


@dataclass(frozen=True)
class Taxonomy:
    """Class labels, one per block, keyed by the block's smallest element."""

    case: str  # "equal" or "unequal"
    r: int
    blocks: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def label_of(self, x: int) -> str:
        for block, label in zip(self.blocks, self.labels):
            if x in block:
                return label
        raise ValueError(f"position {x} not classified")

    def as_dict(self) -> dict[int, str]:
        return {block[0]: label for block, label in zip(self.blocks, self.labels)}

    def labelled(self, wanted: str) -> list[tuple[int, ...]]:
        return [b for b, l in zip(self.blocks, self.labels) if l == wanted]


def _generic_label(table: SignTable, block: tuple[int, ...], r: int) -> str:
    types = {element_type(table, x) for x in block}
    if types == {1}:
        top = table.n - table.m
        periodic = all(
            table.is_plus(j) == table.is_plus(j + r) for j in block if j + r <= top
        )
        return "A" if periodic else "B"
    if 1 in types:
        return "B"
    return "C" if len(types) == 1 else "D"


def classify_unequal(diagram: OneDotRibbon) -> Taxonomy:
    """Four-way taxonomy of position classes for |alpha| != |beta|.

    Generic blocks: A if all of type 1 with r-periodic signs, B on a type-1
    member with any break, C if purely type 0 or purely type 2, D if types
    0 and 2 mix.  The block containing m-1 also holds the two positions
    with forced - signs, so it is labelled by the dedicated rules keyed on
    the type of m-1 and the two residue-wise constancy conditions.
    """
    a, b = diagram.size_alpha, diagram.size_beta
    if a == b:
        raise ValueError("equal row sums: use classify_equal")
    table = sign_table(diagram)
    classes = integer_classes(diagram)
    r = classes.r
    n, m = table.n, table.m
    top = n - m

    def cond_residues() -> tuple[bool, bool]:
        same_as_m1 = all(
            table.is_plus(j) == table.is_plus(m - 1)
            for j in range(1, top + 1)
            if j % r == (m - 1) % r and j != a
        )
        anchor = n - 2 * m + 2
        same_as_top = all(
            table.is_plus(j) == table.is_plus(anchor)
            for j in range(1, top + 1)
            if j % r == 0 and j != a - m + 1
        )
        return same_as_m1, same_as_top

    labels = []
    for block in classes.blocks:
        if m - 1 not in block:
            labels.append(_generic_label(table, block, r))
            continue
        ty = element_type(table, m - 1)
        if ty == 0:
            labels.append(_generic_label(table, block, r))
            continue
        cond_i, cond_ii = cond_residues()
        if ty == 1:
            labels.append("A" if cond_i and cond_ii else "B")
            continue
        forced = {a - m + 1, a, n - a - m + 1, n - a}
        stray_type1 = any(
            element_type(table, x) == 1 for x in block if x not in forced
        )
        if stray_type1:
            labels.append("B")
        else:
            labels.append("C" if cond_i and cond_ii else "D")
    return Taxonomy("unequal", r, classes.blocks, tuple(labels))


def classify_equal(diagram: OneDotRibbon) -> Taxonomy:
    """Three-way taxonomy for |alpha| = |beta|: a pure type-1 block is A
    when the signs at its representative i and at |alpha| - i disagree and
    B when they agree; blocks mixing type 1 with even types are B; purely
    even blocks are C."""
    a = diagram.size_alpha
    if a != diagram.size_beta:
        raise ValueError("unequal row sums: use classify_unequal")
    table = sign_table(diagram)
    classes = integer_classes(diagram)
    labels = []
    for block in classes.blocks:
        types = {element_type(table, x) for x in block}
        if types == {1}:
            i = block[0]
            labels.append("A" if table.is_plus(i) != table.is_plus(a - i) else "B")
        elif 1 in types:
            labels.append("B")
        else:
            labels.append("C")
    return Taxonomy("equal", classes.r, classes.blocks, tuple(labels))


def classify(diagram: OneDotRibbon) -> Taxonomy:
    if diagram.size_alpha == diagram.size_beta:
        return classify_equal(diagram)
    return classify_unequal(diagram)


def is_canonical(diagram: OneDotRibbon) -> bool:
    """Pick the distinguished member of {D, D*}.

    Unequal row sums: |alpha| < |beta|.  Equal: the smallest type-1
    element of a B block (or, with no B, of an A block) must carry +; with
    neither label present the diagram is its own rotation and canonical.
    """
    a, b = diagram.size_alpha, diagram.size_beta
    if a != b:
        return a < b
    table = sign_table(diagram)
    tax = classify_equal(diagram)
    for wanted in ("B", "A"):
        candidates = [
            x
            for block, label in zip(tax.blocks, tax.labels)
            if label == wanted
            for x in block
            if element_type(table, x) == 1
        ]
        if candidates:
            return table.is_plus(min(candidates))
    return True


def recovered_components(table: SignTable):
    """Rebuild (alpha, beta) from a sign table: the + positions below
    |alpha| cut alpha, the shifted + positions cut beta."""
    a, b, m = table.size_alpha, table.size_beta, table.m
    alpha_cuts = [x for x in range(1, a) if table.is_plus(x)]
    beta_cuts = [x for x in range(1, b) if table.is_plus(a - m + 1 + x)]
    return (
        composition_from_cuts(alpha_cuts, a),
        composition_from_cuts(beta_cuts, b),
    )
