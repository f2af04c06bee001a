"""Basis families, the greedy pass, and the optimality machinery.

The greedy solution depends only on the family and the ordering, never
on a weight function.  Optimality over all compatible weights reduces to
the 0/1 threshold weights, which is the same thing as elementwise
(Gale) domination; `sampled_threshold_agreement` cross-checks that
reduction against random compatible weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .orderings import AdmissibleOrdering, WeightFunction, threshold_weight
from .signed_sets import (
    check_ground_size,
    format_set_braced,
    is_admissible,
    sort_family,
)


class BasisFamily:
    """Nonempty family of distinct, equinumerous, admissible subsets.

    Rank 0 (the family {∅}) is allowed so that downset sweeps can round
    trip through maximal members.
    """

    __slots__ = ("n", "sets", "rank")

    def __init__(self, n: int, sets: Iterable[frozenset[int]]):
        check_ground_size(n)
        sets = [frozenset(s) for s in sets]
        if not sets:
            raise ValueError("basis family must be nonempty")
        if len(set(sets)) != len(sets):
            raise ValueError("basis family contains duplicate sets")
        for s in sets:
            if any(e == 0 or abs(e) > n for e in s):
                raise ValueError(f"set {format_set_braced(s)} not contained in E±{n}")
            if not is_admissible(s):
                raise ValueError(f"inadmissible set {format_set_braced(s)}")
        sizes = {len(s) for s in sets}
        if len(sizes) != 1:
            raise ValueError(f"members must be equinumerous, got sizes {sorted(sizes)}")
        self.n = n
        self.sets = tuple(sort_family(sets))
        self.rank = sizes.pop()

    def __contains__(self, s: frozenset[int]) -> bool:
        return s in self.sets

    def __len__(self) -> int:
        return len(self.sets)

    def __eq__(self, other):
        return (
            isinstance(other, BasisFamily)
            and self.n == other.n
            and self.sets == other.sets
        )

    def __hash__(self):
        return hash((self.n, self.sets))

    def __repr__(self):
        return f"BasisFamily(n={self.n}, {len(self.sets)} sets of rank {self.rank})"


@dataclass(frozen=True)
class GreedyStep:
    element: int
    accepted: bool
    reason: str


@dataclass(frozen=True)
class GreedyTrace:
    chosen: frozenset[int]
    steps: tuple[GreedyStep, ...]


def feasible_extension(family: BasisFamily, s: frozenset[int]) -> bool:
    """True iff s is a subset of some member of the family, i.e. s can
    still be completed to a member."""
    return any(s <= b for b in family.sets)


def greedy_solution(family: BasisFamily, o: AdmissibleOrdering) -> GreedyTrace:
    """Scan E±n largest to smallest, accepting each element unless doing
    so makes completing to a member impossible."""
    chosen: set[int] = set()
    steps = []
    for e in o.full_order:
        candidate = frozenset(chosen | {e})
        if feasible_extension(family, candidate):
            chosen.add(e)
            steps.append(
                GreedyStep(e, True, f"{format_set_braced(candidate)} extends a member")
            )
        else:
            steps.append(
                GreedyStep(e, False, f"{format_set_braced(candidate)} extends no member")
            )
    result = frozenset(chosen)
    assert result in family.sets
    return GreedyTrace(result, tuple(steps))


def weight_of(s: frozenset[int], w: WeightFunction) -> Fraction | int:
    return sum(w[e] for e in s)


def is_optimal(family: BasisFamily, candidate: frozenset[int], w: WeightFunction) -> bool:
    """True iff no member of the family has strictly larger weight."""
    if candidate not in family.sets:
        raise ValueError(f"candidate {format_set_braced(candidate)} is not in the family")
    cw = weight_of(candidate, w)
    return all(weight_of(b, w) <= cw for b in family.sets)


def gale_dominates(o: AdmissibleOrdering, b1: frozenset[int], b2: frozenset[int]) -> bool:
    """True iff the i-th largest element of b1 is no smaller than the
    i-th largest element of b2 along o, for every i."""
    if len(b1) != len(b2):
        raise ValueError(f"cannot compare sets of sizes {len(b1)} and {len(b2)}")
    r1 = sorted(o.rank(e) for e in b1)
    r2 = sorted(o.rank(e) for e in b2)
    return all(p1 <= p2 for p1, p2 in zip(r1, r2))


def optimal_for_all_thresholds(family: BasisFamily, o: AdmissibleOrdering,
                               candidate: frozenset[int]) -> bool:
    """Optimality under every threshold weight k = 0..2n."""
    return all(
        is_optimal(family, candidate, threshold_weight(o, k))
        for k in range(2 * o.n + 1)
    )


def sampled_threshold_agreement(
    family: BasisFamily,
    o: AdmissibleOrdering,
    samples: int,
    seed: int,
) -> bool:
    """Check that optimality of the greedy set under all thresholds
    coincides with optimality under `samples` random compatible weights.

    Weights are integer numerators of rationals with denominator 100 in
    [-10, 10], sorted nonincreasing along o; comparisons are exact.
    """
    chosen = greedy_solution(family, o).chosen
    by_threshold = optimal_for_all_thresholds(family, o, chosen)

    rng = np.random.default_rng(seed)
    values = rng.integers(-1000, 1001, size=(samples, 2 * o.n))
    values = -np.sort(-values, axis=1)  # nonincreasing along o
    chosen_idx = [o.rank(e) - 1 for e in chosen]
    chosen_w = values[:, chosen_idx].sum(axis=1)
    by_samples = True
    for b in family.sets:
        idx = [o.rank(e) - 1 for e in b]
        if np.any(values[:, idx].sum(axis=1) > chosen_w):
            by_samples = False
            break
    return by_threshold == by_samples


def trace_lines(trace: GreedyTrace) -> list[str]:
    """One diagnostic line per considered element."""
    return [
        f"{step.element} {'ACCEPT' if step.accepted else 'SKIP'} {step.reason}"
        for step in trace.steps
    ]
