"""Exhaustive desk-scale verification of the classification theorem.

Enumerates every one-box-dot diagram of a given size, groups by exact
h-expansion, and compares each group with the orbit predicted from the
gcd-period factorization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .expand import expand_determinant, expand_recursive
from .factor import equivalence_orbit
from .shapes import (
    OneDotRibbon,
    composition_from_cuts,
    sorted_partition,
    to_skew_shape,
    transpose,
)
from .structure import is_canonical, sign_table

DEFAULT_BUDGET = {2: 14, 3: 15}


def default_max_size(m: int) -> int:
    return DEFAULT_BUDGET.get(m, 2 * m + 8)


def _compositions_last_at_least(total: int, m: int):
    free = total - m  # cuts allowed in 1..total-m keep the last part >= m
    for mask in range(1 << free):
        cuts = [i + 1 for i in range(free) if (mask >> i) & 1]
        yield composition_from_cuts(cuts, total)


def _compositions_first_at_least(total: int, m: int):
    free = total - m  # cuts allowed in m..total-1 keep the first part >= m
    for mask in range(1 << free):
        cuts = [m + i for i in range(free) if (mask >> i) & 1]
        yield composition_from_cuts(cuts, total)


@lru_cache(maxsize=16)
def _all_diagrams(n: int, m: int) -> tuple[OneDotRibbon, ...]:
    if n < 2 * m:
        return ()
    out = []
    for a in range(m, n - m + 1):
        for alpha in _compositions_last_at_least(a, m):
            for beta in _compositions_first_at_least(n - a, m):
                out.append(OneDotRibbon(alpha, beta, m))
    return tuple(out)


def all_diagrams(n: int, m: int) -> list[OneDotRibbon]:
    """Every diagram alpha|beta with |alpha| + |beta| = n, in a fixed order."""
    return list(_all_diagrams(n, m))


@lru_cache(maxsize=8)
def _equivalence_classes(n: int, m: int) -> tuple[tuple[OneDotRibbon, ...], ...]:
    groups: dict[tuple, list[OneDotRibbon]] = {}
    for diagram in _all_diagrams(n, m):
        key = expand_recursive(diagram).terms
        groups.setdefault(key, []).append(diagram)
    return tuple(
        tuple(sorted(group, key=lambda d: (d.alpha, d.beta)))
        for group in groups.values()
    )


def equivalence_classes(n: int, m: int) -> list[list[OneDotRibbon]]:
    """Diagrams of size n grouped by equal h-expansion."""
    return [list(group) for group in _equivalence_classes(n, m)]


@dataclass
class VerificationReport:
    n: int
    m: int
    diagram_count: int
    class_count: int
    size_histogram: dict[str, int]
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "diagrams": self.diagram_count,
            "classes": self.class_count,
            "size_histogram": dict(self.size_histogram),
            "failures": self.failures,
        }

    def summary(self) -> str:
        hist = " ".join(f"{k}:{v}" for k, v in self.size_histogram.items() if v)
        return (
            f"n={self.n} m={self.m}: diagrams={self.diagram_count} "
            f"classes={self.class_count} sizes[{hist}] "
            f"failures={len(self.failures)}"
        )


def check_theorem(n: int, m: int) -> VerificationReport:
    """Compare every equivalence class with the orbit predicted for one of
    its members; class sizes must be 1, 2 or 4 and equal 2^kappa."""
    classes = _equivalence_classes(n, m)
    histogram = {"1": 0, "2": 0, "4": 0, "other": 0}
    failures = []
    total = 0
    for group in classes:
        size = len(group)
        total += size
        histogram[str(size) if size in (1, 2, 4) else "other"] += 1
        orbit, kappa = equivalence_orbit(group[0])
        if set(group) != set(orbit) or size != 2**kappa:
            failures.append(
                {
                    "class": [str(d) for d in group],
                    "predicted": sorted(str(d) for d in orbit),
                    "kappa": kappa,
                }
            )
    return VerificationReport(
        n=n,
        m=m,
        diagram_count=total,
        class_count=len(classes),
        size_histogram=histogram,
        failures=failures,
    )


def check_lambda_invariance(n: int, m: int) -> bool:
    """Equivalent diagrams share the sorted multiset of their row sizes."""
    for group in _equivalence_classes(n, m):
        if len({sorted_partition(d) for d in group}) != 1:
            return False
    return True


def check_transpose_duality(n: int, m: int, class_limit: int = 12) -> bool:
    """On a deterministic sample, equivalence decided on the transposed
    shapes by the determinant route matches equivalence of the originals."""
    classes = _equivalence_classes(n, m)[:class_limit]
    transposed = [
        [expand_determinant(transpose(to_skew_shape(d))) for d in group[:2]]
        for group in classes
    ]
    for row in transposed:
        if len(row) == 2 and row[0] != row[1]:
            return False
    for left, right in zip(transposed, transposed[1:]):
        if left[0] == right[0]:
            return False
    return True


def canonical_members(group) -> list[OneDotRibbon]:
    return [d for d in group if is_canonical(d)]


def undetermined_elements(
    diagram: OneDotRibbon, group: list[OneDotRibbon] | None = None
) -> frozenset[int]:
    """Positions whose sign differs across the canonical members of the
    diagram's equivalence class, found by brute-force comparison."""
    if not is_canonical(diagram):
        raise ValueError("reference diagram must be canonical")
    if group is None:
        target = expand_recursive(diagram)
        lam = sorted_partition(diagram.alpha + diagram.beta)
        group = [
            d
            for d in all_diagrams(diagram.size, diagram.m)
            # row-multiset equality is necessary, so skip the rest cheaply
            if sorted_partition(d.alpha + d.beta) == lam
            and expand_recursive(d) == target
        ]
    tables = [sign_table(d).plus for d in canonical_members(group)]
    base = sign_table(diagram)
    return frozenset(
        x
        for x in base.domain
        if any((x in plus) != base.is_plus(x) for plus in tables)
    )
