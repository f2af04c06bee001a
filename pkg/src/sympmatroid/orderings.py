"""Admissible total orderings of E±n and compatible weight functions.

An admissible ordering is determined by its top row: the n elements in
positions 1..n, largest first.  The bottom half is always the negated
reversal of the top row, so the whole order is mirror-symmetric.
Weights are exact rationals (ints or Fractions), never floats.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .signed_sets import check_ground_size

WeightFunction = dict[int, Fraction | int]

LESS = "less"
GREATER = "greater"
EQUAL = "equal"


class AdmissibleOrdering:
    """Strict total order on E±n induced by a signed permutation."""

    __slots__ = ("n", "top_row", "full_order", "_rank")

    def __init__(self, top_row: Sequence[int], n: int | None = None):
        top_row = tuple(top_row)
        if n is None:
            n = len(top_row)
        check_ground_size(n)
        if len(top_row) != n:
            raise ValueError(f"top row must have length {n}, got {len(top_row)}")
        magnitudes = sorted(abs(e) for e in top_row)
        if len(set(magnitudes)) != n:
            raise ValueError(f"repeated magnitude in top row {top_row}")
        if magnitudes != list(range(1, n + 1)):
            raise ValueError(f"top row magnitudes must cover 1..{n}, got {top_row}")
        self.n = n
        self.top_row = top_row
        self.full_order = top_row + tuple(-e for e in reversed(top_row))
        # position 1 = largest element
        self._rank = {e: p for p, e in enumerate(self.full_order, start=1)}

    def rank(self, e: int) -> int:
        """Position of e in the full order; 1 is the largest."""
        return self._rank[e]

    def compare(self, x: int, y: int) -> str:
        """One of 'less', 'greater', 'equal', with x relative to y."""
        if x == y:
            return EQUAL
        return GREATER if self._rank[x] < self._rank[y] else LESS

    def sorted_desc(self, s: Iterable[int]) -> list[int]:
        """Elements of s from largest to smallest along this ordering."""
        return sorted(s, key=self._rank.__getitem__)

    def __eq__(self, other):
        return isinstance(other, AdmissibleOrdering) and self.top_row == other.top_row

    def __hash__(self):
        return hash(self.top_row)

    def __repr__(self):
        return f"AdmissibleOrdering({self.top_row})"


def ordering_from_top_row(seq: Sequence[int], n: int) -> AdmissibleOrdering:
    return AdmissibleOrdering(seq, n)


def standard_ordering(n: int) -> AdmissibleOrdering:
    """Ordinary integer order: n > n-1 > ... > 1 > -1 > ... > -n."""
    return AdmissibleOrdering(tuple(range(n, 0, -1)), n)


def parse_top_row(text: str, n: int | None = None) -> AdmissibleOrdering:
    """Parse a CLI-style top row like "-2 1 3" (largest first)."""
    try:
        seq = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise ValueError(f"malformed ordering {text!r}") from None
    return AdmissibleOrdering(seq, n)


def all_admissible_orderings(n: int) -> Iterator[AdmissibleOrdering]:
    """All 2^n * n! admissible orderings, lexicographic over
    (magnitude permutation, sign vector)."""
    check_ground_size(n)
    for mags in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield AdmissibleOrdering(tuple(s * m for s, m in zip(signs, mags)), n)


def is_compatible(w: WeightFunction, o: AdmissibleOrdering) -> bool:
    """True iff weights are nonincreasing read largest-first along o."""
    full = o.full_order
    return all(w[full[i]] >= w[full[i + 1]] for i in range(len(full) - 1))


def threshold_weight(o: AdmissibleOrdering, k: int) -> WeightFunction:
    """0/1 weight: 1 on the k largest elements of o, 0 elsewhere."""
    if not 0 <= k <= 2 * o.n:
        raise ValueError(f"threshold k must be in 0..{2 * o.n}, got {k}")
    return {e: (1 if p <= k else 0) for p, e in enumerate(o.full_order, start=1)}


def random_compatible_weight(o: AdmissibleOrdering, seed: int) -> WeightFunction:
    """Seeded random weight compatible with o: rationals in [-10, 10]
    with denominator 100, sorted nonincreasing along o."""
    rng = random.Random(seed)
    values = sorted(
        (Fraction(rng.randint(-1000, 1000), 100) for _ in o.full_order),
        reverse=True,
    )
    return dict(zip(o.full_order, values))
