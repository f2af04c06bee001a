"""Signed ground sets {±1, ..., ±n} and their admissible subsets.

Elements are plain nonzero ints; subsets are frozensets of ints.  The
ground size n is capped at 16 so any subset fits a 32-bit mask if a
caller wants one; the exhaustive workloads never go past n = 4.
"""

from __future__ import annotations

from typing import Iterable

MAX_GROUND_SIZE = 16

EMPTY_SET_LITERAL = "{}"


class FamilyFormatError(ValueError):
    """Raised for malformed family files or set literals."""


def check_ground_size(n: int) -> int:
    if not isinstance(n, int) or n < 1 or n > MAX_GROUND_SIZE:
        raise ValueError(f"ground size must be an integer in 1..{MAX_GROUND_SIZE}, got {n!r}")
    return n


def check_element(e: int, n: int) -> int:
    if not isinstance(e, int) or e == 0 or abs(e) > n:
        raise ValueError(f"not a signed element of E±{n}: {e!r}")
    return e


def element_key(e: int) -> tuple[int, int]:
    """Canonical order key: ascending magnitude, positive before negative."""
    return (abs(e), 0 if e > 0 else 1)


def ground_set(n: int) -> list[int]:
    """All 2n elements of E±n in canonical order 1, -1, 2, -2, ..."""
    check_ground_size(n)
    out = []
    for m in range(1, n + 1):
        out.append(m)
        out.append(-m)
    return out


def negate_element(e: int) -> int:
    return -e


def negate_set(s: frozenset[int]) -> frozenset[int]:
    """The set of negatives, written S-bar."""
    return frozenset(-e for e in s)


def is_admissible(s: Iterable[int]) -> bool:
    """True iff s contains no element together with its negative."""
    s = set(s)
    return all(-e not in s for e in s)


def sorted_elements(s: Iterable[int]) -> list[int]:
    return sorted(s, key=element_key)


def set_key(s: frozenset[int]) -> tuple:
    """Canonical family order key: by cardinality, then element-wise."""
    return (len(s), tuple(element_key(e) for e in sorted_elements(s)))


def sort_family(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    return sorted(sets, key=set_key)


def format_set(s: frozenset[int]) -> str:
    """One set in family-file syntax: space-separated, or `{}` if empty."""
    if not s:
        return EMPTY_SET_LITERAL
    return " ".join(str(e) for e in sorted_elements(s))


def format_set_braced(s: frozenset[int]) -> str:
    """Compact braced form used in diagnostics, e.g. {2,3}."""
    return "{" + ",".join(str(e) for e in sorted_elements(s)) + "}"


def format_family(sets: Iterable[frozenset[int]]) -> str:
    return "\n".join(format_set(s) for s in sort_family(sets)) + "\n"


def parse_set(text: str, n: int, where: str = "set") -> frozenset[int]:
    """Parse one line of family-file syntax into a subset of E±n.

    Reports the offending token position for out-of-range, zero,
    duplicate, or malformed tokens.
    """
    check_ground_size(n)
    stripped = text.strip()
    if stripped == EMPTY_SET_LITERAL:
        return frozenset()
    members: set[int] = set()
    for pos, token in enumerate(stripped.split(), start=1):
        try:
            value = int(token)
        except ValueError:
            raise FamilyFormatError(f"{where}, token {pos}: malformed element {token!r}") from None
        if value == 0:
            raise FamilyFormatError(f"{where}, token {pos}: zero is not a signed element")
        if abs(value) > n:
            raise FamilyFormatError(f"{where}, token {pos}: element {value} out of range for n={n}")
        if value in members:
            raise FamilyFormatError(f"{where}, token {pos}: duplicate element {value}")
        members.add(value)
    return frozenset(members)


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((lineno, stripped))
    return out


def infer_ground_size(text: str) -> int:
    """Largest magnitude appearing in the file (1 if none)."""
    best = 1
    for _, line in _data_lines(text):
        if line == EMPTY_SET_LITERAL:
            continue
        for token in line.split():
            try:
                value = int(token)
            except ValueError:
                continue  # parse_family will report it properly
            best = max(best, abs(value))
    return best


def parse_family(text: str, n: int | None = None) -> tuple[int, list[frozenset[int]]]:
    """Parse a family file: one set per line, `#` comments, blanks ignored.

    Duplicate sets are an error.  Returns (n, sets); n is inferred from
    the largest magnitude present unless given.
    """
    if n is None:
        n = infer_ground_size(text)
    check_ground_size(n)
    sets: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    for lineno, line in _data_lines(text):
        s = parse_set(line, n, where=f"line {lineno}")
        if s in seen:
            raise FamilyFormatError(f"line {lineno}: duplicate set {format_set(s)!r}")
        seen.add(s)
        sets.append(s)
    return n, sets
