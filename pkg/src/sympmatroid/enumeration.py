"""Exhaustive desk-scale sweeps cross-validating the two
characterizations: every candidate family is classified by the greedy
definition and by the augmentation axiom, and any disagreement is a
mismatch (there must be none)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, TextIO

from .axioms import (
    IndependenceFamily,
    axiom_holds,
    downward_closure,
    is_symplectic_matroid_by_definition,
    maximal_sets,
)
from .greedy import BasisFamily
from .orderings import all_admissible_orderings
from .signed_sets import check_ground_size, format_family

SWEEP_BUDGET = "sweep budget is n <= 3, or (n, k) = (4, 1)"
DOWNSET_BUDGET = "downset sweep budget is n <= 2"


class BudgetExceededError(ValueError):
    """Raised instead of running an unbounded enumeration."""


@dataclass
class EnumerationReport:
    n: int
    k: Optional[int]
    total_families: int
    matroid_count: int
    mismatches: list[int] = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [
            f"n: {self.n}",
            f"k: {'-' if self.k is None else self.k}",
            f"total families: {self.total_families}",
            f"matroid count: {self.matroid_count}",
            f"mismatches: {len(self.mismatches)}",
        ]
        if self.mismatches:
            out.append("mismatch ids: " + " ".join(map(str, self.mismatches)))
        return out


def admissible_k_subsets(n: int, k: int) -> list[frozenset[int]]:
    """All C(n,k) * 2^k admissible k-subsets of E±n, deterministic
    order: magnitude combinations lexicographic, then sign vectors."""
    check_ground_size(n)
    if not 0 <= k <= n:
        raise ValueError(f"k must be in 0..{n}, got {k}")
    out = []
    for mags in itertools.combinations(range(1, n + 1), k):
        for signs in itertools.product((1, -1), repeat=k):
            out.append(frozenset(s * m for s, m in zip(signs, mags)))
    return out


def _families(universe: list[frozenset[int]]) -> Iterator[tuple[int, list[frozenset[int]]]]:
    # family id = bitmask over the universe in enumeration order
    for mask in range(1, 1 << len(universe)):
        yield mask, [s for i, s in enumerate(universe) if mask >> i & 1]


def sweep_basis_families(
    n: int,
    k: int,
    on_matroid: Optional[Callable[[int, BasisFamily], None]] = None,
) -> EnumerationReport:
    """Classify every nonempty family of admissible k-subsets by both
    characterizations; mismatches must come back empty."""
    if not (n <= 3 or (n, k) == (4, 1)):
        raise BudgetExceededError(SWEEP_BUDGET)
    universe = admissible_k_subsets(n, k)
    orderings = list(all_admissible_orderings(n))
    report = EnumerationReport(n, k, total_families=(1 << len(universe)) - 1,
                               matroid_count=0)
    for family_id, sets in _families(universe):
        family = BasisFamily(n, sets)
        by_definition = is_symplectic_matroid_by_definition(family, orderings)
        by_axiom = axiom_holds(downward_closure(family)).holds
        if by_definition != by_axiom:
            report.mismatches.append(family_id)
        if by_definition:
            report.matroid_count += 1
            if on_matroid is not None:
                on_matroid(family_id, family)
    return report


def all_downsets(n: int) -> Iterator[IndependenceFamily]:
    """Every nonempty downward-closed family of admissible subsets of
    E±n.  Only feasible for tiny n (the poset at n=2 has 9 elements)."""
    if n > 2:
        raise BudgetExceededError(DOWNSET_BUDGET)
    poset = [
        s
        for k in range(n + 1)
        for s in admissible_k_subsets(n, k)
    ]
    for mask in range(1, 1 << len(poset)):
        chosen = [s for i, s in enumerate(poset) if mask >> i & 1]
        members = set(chosen)
        if all(s - {e} in members for s in chosen for e in s):
            yield IndependenceFamily(n, members)


def sweep_downsets(n: int) -> EnumerationReport:
    """Check the axiom on every downset, not only closures of
    equinumerous families: whenever the axiom holds, the maximal
    members are equicardinal and pass the greedy definition; whenever
    it fails, the maximal members vary in size or fail the definition."""
    if n > 2:
        raise BudgetExceededError(DOWNSET_BUDGET)
    orderings = list(all_admissible_orderings(n))
    total = 0
    passing = 0
    mismatches: list[int] = []
    for index, ind in enumerate(all_downsets(n)):
        total += 1
        holds = axiom_holds(ind).holds
        maxima = maximal_sets(ind.sets)
        equicardinal = len({len(s) for s in maxima}) == 1
        if equicardinal:
            by_definition = is_symplectic_matroid_by_definition(
                BasisFamily(n, maxima), orderings
            )
        else:
            by_definition = False
        if holds != (equicardinal and by_definition):
            mismatches.append(index)
        if holds:
            passing += 1
    return EnumerationReport(n, None, total, passing, mismatches)


def catalog(n: int, k: int, destination: TextIO) -> int:
    """Write every symplectic matroid found by the (n, k) sweep, one
    family block per matroid separated by `---` lines.  Returns the
    number written."""
    written = 0

    def emit(family_id: int, family: BasisFamily) -> None:
        nonlocal written
        if written:
            destination.write("---\n")
        destination.write(f"# family {family_id}\n")
        destination.write(format_family(family.sets))
        written += 1

    sweep_basis_families(n, k, on_matroid=emit)
    return written
