"""Independent reference implementations used to cross-check the package.

Everything here is written the slow, obvious way: breadth-first search
for edit distance, subsequence enumeration for LCS, dense numpy matrices
for the quantum channel.  None of it imports the fast code paths it is
meant to check, so agreement is evidence, not tautology.
"""

from __future__ import annotations

import itertools
import random

import numpy as np


def _delete_neighbors(w: str) -> set[str]:
    return {w[:i] + w[i + 1 :] for i in range(len(w))}


def _insert_neighbors(w: str) -> set[str]:
    return {w[:i] + b + w[i:] for i in range(len(w) + 1) for b in "01"}


def edit_distance_bfs(x: str, y: str) -> int:
    """Insert/delete distance by breadth-first search.

    Intermediate words longer than both inputs are pruned; a shortest
    path never needs them (delete down to a common subsequence, then
    insert up), so the search stays finite.
    """
    if x == y:
        return 0
    cap = max(len(x), len(y))
    frontier, seen = {x}, {x}
    for dist in itertools.count(1):
        nxt = set()
        for w in frontier:
            step = _delete_neighbors(w)
            if len(w) < cap:
                step |= _insert_neighbors(w)
            for v in step:
                if v == y:
                    return dist
                if v not in seen:
                    seen.add(v)
                    nxt.add(v)
        frontier = nxt
        assert frontier, f"no path from {x!r} to {y!r}"


def _is_subsequence(s: str, y: str) -> bool:
    it = iter(y)
    return all(c in it for c in s)


def lcs_bruteforce(x: str, y: str) -> int:
    """Longest common subsequence by enumerating subsequences of x."""
    for r in range(min(len(x), len(y)), 0, -1):
        for idxs in itertools.combinations(range(len(x)), r):
            if _is_subsequence("".join(x[i] for i in idxs), y):
                return r
    return 0


def state_vector(state) -> np.ndarray:
    """Dense 2^n vector of a sparse state; basis index = int(word, 2)."""
    v = np.zeros(2**state.qubits, dtype=complex)
    for word, amp in state.amplitudes.items():
        v[int(word, 2)] = amp
    return v


def density_matrix(ensemble) -> np.ndarray:
    """Dense density matrix of a weighted ensemble of sparse states."""
    dim = 2**ensemble.qubits
    rho = np.zeros((dim, dim), dtype=complex)
    for w, s in ensemble.members:
        v = state_vector(s)
        rho += w * np.outer(v, v.conj())
    return rho


def insert_bit(w: str, i: int, b: str) -> str:
    """Insert bit b so that deleting position i (1-based) recovers w."""
    return w[: i - 1] + b + w[i - 1 :]


def partial_trace(rho: np.ndarray, n: int, i: int) -> np.ndarray:
    """Trace out qubit i (1-based, leftmost = 1) of an n-qubit matrix.

    Straight from the definition: entry (y, z) of the result sums rho
    over the two ways of reinserting the traced bit into y and z.
    """
    m = 2 ** (n - 1)
    out = np.zeros((m, m), dtype=complex)
    words = [format(k, f"0{n - 1}b") for k in range(m)]
    for y, wy in enumerate(words):
        for z, wz in enumerate(words):
            for b in "01":
                out[y, z] += rho[int(insert_bit(wy, i, b), 2), int(insert_bit(wz, i, b), 2)]
    return out


def brute_deletion_set(words, i: int, b: int) -> set[str]:
    """(i, b)-deletion set by filtering on the bit before deleting."""
    return {w[: i - 1] + w[i:] for w in words if w[i - 1] == str(b)}


def brute_cell(words, positions, b: int) -> set[str]:
    """Cell by literal set algebra over all per-position deletion sets."""
    n = len(next(iter(words)))
    result = None
    for i in positions:
        d = brute_deletion_set(words, i, b)
        result = d if result is None else result & d
    assert result is not None
    for i in range(1, n + 1):
        if i not in positions:
            result -= brute_deletion_set(words, i, b)
    return result


def random_words(rng: random.Random, n: int, count: int) -> list[str]:
    """Distinct random words of length n; count is capped at 2^n."""
    universe = ["".join(bits) for bits in itertools.product("01", repeat=n)]
    rng.shuffle(universe)
    return universe[: min(count, len(universe))]


def random_family_cells(rng: random.Random, structured_pool: list[str] | None = None):
    """A random valid family: 2..4 disjoint non-empty cells of equal-length words.

    With a pool given (e.g. a VT code's words), draws from it instead of
    the full cube, which produces families much closer to real codes.
    """
    if structured_pool:
        n = len(structured_pool[0])
        words = list(structured_pool)
        rng.shuffle(words)
        words = words[: min(len(words), rng.randint(4, 10))]
    else:
        n = rng.randint(2, 8)
        words = random_words(rng, n, rng.randint(4, 10))
    cell_count = rng.randint(2, min(4, len(words) // 2))
    cells: list[list[str]] = [[] for _ in range(cell_count)]
    for j, w in enumerate(words):
        cells[j % cell_count].append(w)
    rng.shuffle(cells)
    return cells
