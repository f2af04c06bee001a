"""The two characterizations of a symplectic matroid and the machinery
relating them.

A family of bases is a symplectic matroid when the greedy solution is
optimal for every admissible ordering and compatible weight; a
subset-closed family of admissible sets is the independence family of
one exactly when the augmentation axiom holds.  `find_counterexample`
produces (ordering, threshold) witnesses for failing families, either
by plain brute force or by tracing the WXYZ repositioning construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .greedy import (
    BasisFamily,
    gale_dominates,
    greedy_solution,
    weight_of,
)
from .orderings import (
    AdmissibleOrdering,
    all_admissible_orderings,
    threshold_weight,
)
from .signed_sets import (
    check_ground_size,
    format_set_braced,
    ground_set,
    is_admissible,
    negate_set,
    set_key,
    sort_family,
    sorted_elements,
)

UNION_ADMISSIBLE = "union_admissible"
NO_AUGMENTING_X = "no_augmenting_x"


class IndependenceFamily:
    """Subset-closed family of admissible subsets of E±n."""

    __slots__ = ("n", "sets")

    def __init__(self, n: int, sets: Iterable[frozenset[int]]):
        check_ground_size(n)
        members = frozenset(frozenset(s) for s in sets)
        for s in members:
            if any(e == 0 or abs(e) > n for e in s):
                raise ValueError(f"set {format_set_braced(s)} not contained in E±{n}")
            if not is_admissible(s):
                raise ValueError(f"inadmissible set {format_set_braced(s)}")
            for e in s:
                if s - {e} not in members:
                    raise ValueError(
                        f"family is not subset-closed: {format_set_braced(s - {e})} "
                        f"missing below {format_set_braced(s)}"
                    )
        self.n = n
        self.sets = members

    def __contains__(self, s: frozenset[int]) -> bool:
        return s in self.sets

    def __len__(self) -> int:
        return len(self.sets)

    def __eq__(self, other):
        return (
            isinstance(other, IndependenceFamily)
            and self.n == other.n
            and self.sets == other.sets
        )

    def __repr__(self):
        return f"IndependenceFamily(n={self.n}, {len(self.sets)} sets)"


@dataclass(frozen=True)
class AxiomViolation:
    smaller: frozenset[int]  # I
    larger: frozenset[int]   # J
    failure_kind: str        # UNION_ADMISSIBLE or NO_AUGMENTING_X


@dataclass(frozen=True)
class AxiomCheckResult:
    holds: bool
    violation: Optional[AxiomViolation] = None


@dataclass(frozen=True)
class WxyzDecomposition:
    """W = I \\ J-bar, Y = J \\ (I ∪ I-bar), Z = I ∩ J-bar."""

    w: frozenset[int]
    y: frozenset[int]
    z: frozenset[int]


def downward_closure(family: BasisFamily) -> IndependenceFamily:
    """All subsets of members; subsets of admissible sets stay admissible."""
    closed: set[frozenset[int]] = set()
    for b in family.sets:
        elems = list(b)
        for r in range(len(elems) + 1):
            for combo in itertools.combinations(elems, r):
                closed.add(frozenset(combo))
    return IndependenceFamily(family.n, closed)


def maximal_sets(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """Inclusion-maximal members, in canonical order."""
    sets = list(sets)
    return sort_family(
        s for s in sets if not any(s < t for t in sets)
    )


def maximal_members(ind: IndependenceFamily) -> BasisFamily:
    """The bases recovered from an independence family.  Raises if the
    maximal members are not equinumerous."""
    if not ind.sets:
        raise ValueError("independence family is empty")
    return BasisFamily(ind.n, maximal_sets(ind.sets))


def is_symplectic_matroid_by_definition(
    family: BasisFamily,
    orderings: Optional[Iterable[AdmissibleOrdering]] = None,
) -> bool:
    """Greedy-optimality over every admissible ordering and compatible
    weight, decided via Gale domination (equivalent to optimality for
    all threshold weights)."""
    if orderings is None:
        orderings = all_admissible_orderings(family.n)
    for o in orderings:
        chosen = greedy_solution(family, o).chosen
        for b in family.sets:
            if not gale_dominates(o, chosen, b):
                return False
    return True


def axiom_holds(ind: IndependenceFamily) -> AxiomCheckResult:
    """The independent-set augmentation axiom.

    For every pair I, J with |I| < |J| such that no y in J \\ I has
    I ∪ {y} independent: I ∪ J must be inadmissible and some x not in I
    must have both I ∪ {x} and {x-bar} ∪ (I \\ J-bar) independent.
    Pairs are scanned in (|I|, |J|, canonical) order; the first
    violation is reported.
    """
    members = sorted(ind.sets, key=set_key)
    universe = ground_set(ind.n)
    for i_set in members:
        for j_set in members:
            if len(i_set) >= len(j_set):
                continue
            if any(i_set | {y} in ind.sets for y in j_set - i_set):
                continue
            # hypothesis met; check the conclusion
            if is_admissible(i_set | j_set):
                return AxiomCheckResult(
                    False, AxiomViolation(i_set, j_set, UNION_ADMISSIBLE)
                )
            reduced = i_set - negate_set(j_set)
            found = False
            for x in universe:
                if x in i_set:
                    continue
                if i_set | {x} in ind.sets and reduced | {-x} in ind.sets:
                    found = True
                    break
            if not found:
                return AxiomCheckResult(
                    False, AxiomViolation(i_set, j_set, NO_AUGMENTING_X)
                )
    return AxiomCheckResult(True)


def wxyz_decompose(i_set: frozenset[int], j_set: frozenset[int]) -> WxyzDecomposition:
    j_bar = negate_set(j_set)
    w = i_set - j_bar
    y = j_set - (i_set | negate_set(i_set))
    z = i_set & j_bar
    return WxyzDecomposition(w, y, z)


def untouched_elements(d: WxyzDecomposition, n: int) -> frozenset[int]:
    """X: the elements outside W, Y, Z and their negatives."""
    touched = d.w | d.y | d.z
    touched = touched | negate_set(touched)
    return frozenset(ground_set(n)) - touched


def halves(x: frozenset[int]) -> Iterator[frozenset[int]]:
    """Maximal admissible subsets of a mirror-closed set x: one element
    from each mirror pair, 2^(|x|/2) in all."""
    mags = sorted({abs(e) for e in x})
    for signs in itertools.product((1, -1), repeat=len(mags)):
        yield frozenset(s * m for s, m in zip(signs, mags))


def _block(s: frozenset[int]) -> list[int]:
    # intra-block order: ascending magnitude, positive before negative
    return sorted_elements(s)


def wxyz_orderings(
    d: WxyzDecomposition,
    n: int,
    all_arrangements: bool = False,
) -> Iterator[AdmissibleOrdering]:
    """Admissible orderings whose top half reads W, H, Y, Z largest
    first, for every half H of X.  By default each block is arranged in
    canonical order; `all_arrangements` expands every intra-block
    permutation."""
    x = untouched_elements(d, n)
    for h in halves(x):
        blocks = [_block(d.w), _block(h), _block(d.y), _block(d.z)]
        if all_arrangements:
            for arranged in itertools.product(
                *(itertools.permutations(b) for b in blocks)
            ):
                yield AdmissibleOrdering(tuple(itertools.chain(*arranged)), n)
        else:
            yield AdmissibleOrdering(tuple(itertools.chain(*blocks)), n)


def repositioned_ordering(
    d: WxyzDecomposition,
    ind: IndependenceFamily,
    n: int,
) -> tuple[AdmissibleOrdering, int]:
    """The necessity proof's construction: start from a WXYZ ordering
    whose half H minimizes the number of x in H with W ∪ {x}
    independent, move the augmenting elements of H ∪ Y to just after Z,
    and weight the prefix through Z-bar.  Returns (ordering, k)."""
    x = untouched_elements(d, n)
    best_h = min(
        halves(x),
        key=lambda h: (
            sum(1 for e in h if d.w | {e} in ind.sets),
            tuple(set_key(h)),
        ),
    )
    movable = {
        e
        for e in x
        if d.w | {e} in ind.sets and d.w | {-e} in ind.sets
    } | {e for e in d.y if d.w | {e} in ind.sets}
    h_block = _block(best_h)
    y_block = _block(d.y)
    moved = [e for e in h_block + y_block if e in movable]
    top_row = (
        _block(d.w)
        + [e for e in h_block if e not in movable]
        + [e for e in y_block if e not in movable]
        + _block(d.z)
        + moved
    )
    k = n + len(moved) + len(d.z)
    return AdmissibleOrdering(tuple(top_row), n), k


def _verify_witness(
    family: BasisFamily, o: AdmissibleOrdering, k: int
) -> bool:
    w = threshold_weight(o, k)
    chosen_w = weight_of(greedy_solution(family, o).chosen, w)
    return any(weight_of(b, w) > chosen_w for b in family.sets)


def _brute_force_witness(
    family: BasisFamily,
    orderings: Iterable[AdmissibleOrdering],
) -> Optional[tuple[AdmissibleOrdering, int]]:
    for o in orderings:
        chosen = greedy_solution(family, o).chosen
        chosen_ranks = sorted(o.rank(e) for e in chosen)
        for b in family.sets:
            ranks = sorted(o.rank(e) for e in b)
            for r1, r2 in zip(chosen_ranks, ranks):
                if r1 > r2:
                    # greedy misses rank r2's prefix: threshold k = r2
                    assert _verify_witness(family, o, r2)
                    return o, r2
    return None


def downset_witness(
    ind: IndependenceFamily,
) -> Optional[tuple[AdmissibleOrdering, int]]:
    """Witness for a downset whose maximal members fail greedy
    optimality, covering unequal cardinalities too: an (ordering, k)
    under which the greedy pass over the maximal members ends strictly
    beaten by one of them."""
    maxima = maximal_sets(ind.sets)

    def plain_greedy(o: AdmissibleOrdering) -> frozenset[int]:
        chosen: frozenset[int] = frozenset()
        for e in o.full_order:
            candidate = chosen | {e}
            if any(candidate <= m for m in maxima):
                chosen = candidate
        return chosen

    for o in all_admissible_orderings(ind.n):
        chosen = plain_greedy(o)
        for k in range(2 * ind.n + 1):
            w = threshold_weight(o, k)
            cw = weight_of(chosen, w)
            if any(weight_of(m, w) > cw for m in maxima):
                return o, k
    return None


def find_counterexample(
    family: BasisFamily,
    use_wxyz: bool = False,
) -> Optional[tuple[AdmissibleOrdering, int]]:
    """An (ordering, threshold k) pair under which the greedy set is
    strictly beaten, or None iff the family is a symplectic matroid.

    The default search is brute force over all orderings and
    thresholds.  With `use_wxyz`, candidates from the WXYZ and
    repositioning constructions of the augmentation axiom's violating
    pair are tried first, falling back to brute force.
    """
    if use_wxyz:
        ind = downward_closure(family)
        result = axiom_holds(ind)
        if result.holds:
            return None
        v = result.violation
        d = wxyz_decompose(v.smaller, v.larger)
        candidates: list[tuple[AdmissibleOrdering, int]] = [
            (o, family.n + len(d.z)) for o in wxyz_orderings(d, family.n)
        ]
        candidates.append(repositioned_ordering(d, ind, family.n))
        for o, k in candidates:
            if _verify_witness(family, o, k):
                return o, k
    return _brute_force_witness(family, all_admissible_orderings(family.n))
