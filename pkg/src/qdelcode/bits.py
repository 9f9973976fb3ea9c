"""Bit-sequence primitives: deletions, insertions, runs and edit distance.

Words are plain Python strings over the characters '0' and '1'.  All
position arguments are 1-based (position 1 is the leftmost symbol); the
gap index of :func:`insert_at` runs from 0 (before the first symbol) to
``len(x)`` (after the last).
"""

from __future__ import annotations

from collections import Counter

Interval = tuple[int, ...]  # consecutive 1-based positions of one run


def validate_word(x: str) -> str:
    """Return ``x`` unchanged if it consists only of '0'/'1' characters."""
    if not isinstance(x, str) or any(c not in "01" for c in x):
        raise ValueError(f"not a bit string: {x!r}")
    return x


def _check_bit(b: int) -> int:
    if b not in (0, 1):
        raise ValueError(f"bit must be 0 or 1, got {b!r}")
    return b


def delete_at(x: str, i: int) -> str:
    """Remove the symbol at position ``i`` (1-based)."""
    if not 1 <= i <= len(x):
        raise ValueError(f"position {i} out of range for word of length {len(x)}")
    return x[: i - 1] + x[i:]


def insert_at(x: str, i: int, b: int) -> str:
    """Insert bit ``b`` after position ``i`` (gap index, 0..len(x))."""
    if not 0 <= i <= len(x):
        raise ValueError(f"gap index {i} out of range for word of length {len(x)}")
    _check_bit(b)
    return x[:i] + "01"[b] + x[i:]


def deletion_surface(x: str) -> set[str]:
    """All words reachable from ``x`` by one deletion (duplicate-free)."""
    if len(x) < 1:
        raise ValueError("deletion surface needs a non-empty word")
    return {delete_at(x, i) for i in range(1, len(x) + 1)}


def lcs_length(x: str, y: str) -> int:
    """Length of a longest common subsequence, by the standard row DP."""
    if len(y) < len(x):
        x, y = y, x
    prev = [0] * (len(x) + 1)
    for cy in y:
        cur = [0]
        for i, cx in enumerate(x, start=1):
            cur.append(prev[i - 1] + 1 if cx == cy else max(cur[i - 1], prev[i]))
        prev = cur
    return prev[len(x)]


def levenshtein(x: str, y: str) -> int:
    """Insert/delete edit distance (no substitutions): |x|+|y|-2*lcs."""
    return len(x) + len(y) - 2 * lcs_length(x, y)


def run_supports(x: str, b: int) -> set[Interval]:
    """Position intervals of the maximal runs of symbol ``b`` in ``x``.

    Each interval is the tuple of consecutive 1-based positions it covers,
    e.g. ``run_supports("0001", 0) == {(1, 2, 3)}``.
    """
    _check_bit(b)
    target = "01"[b]
    out: set[Interval] = set()
    start = None
    for pos, c in enumerate(x, start=1):
        if c == target:
            if start is None:
                start = pos
        elif start is not None:
            out.add(tuple(range(start, pos)))
            start = None
    if start is not None:
        out.add(tuple(range(start, len(x) + 1)))
    return out


def run_support_multiset(words, b: int) -> Counter[Interval]:
    """Multiset union of :func:`run_supports` over a set of equal-length words."""
    _check_bit(b)
    words = list(words)
    if len({len(x) for x in words}) > 1:
        raise ValueError("words must all have the same length")
    counts: Counter[Interval] = Counter()
    for x in words:
        counts.update(run_supports(x, b))
    return counts
