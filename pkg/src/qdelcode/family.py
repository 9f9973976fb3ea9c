"""Ordered family sets of disjoint word sets, the encoder's basis order."""

from __future__ import annotations

from typing import Iterable

from .bits import validate_word


class FamilySet:
    """An ordered list of disjoint, non-empty sets of equal-length words.

    The list position of a cell is the message index it encodes, so two
    family sets with the same cells in a different order are different
    codes.
    """

    def __init__(self, cells: Iterable[Iterable[str]]):
        cell_sets = [frozenset(validate_word(w) for w in cell) for cell in cells]
        if not cell_sets:
            raise ValueError("family set must contain at least one cell")
        if any(not cell for cell in cell_sets):
            raise ValueError("family set cells must be non-empty")
        lengths = {len(w) for cell in cell_sets for w in cell}
        if len(lengths) != 1:
            raise ValueError("all words in a family set must have the same length")
        total = sum(len(cell) for cell in cell_sets)
        union = frozenset().union(*cell_sets)
        if len(union) != total:
            raise ValueError("family set cells must be pairwise disjoint")
        self.n: int = lengths.pop()
        self.cells: tuple[frozenset[str], ...] = tuple(cell_sets)
        self._words = union

    @property
    def size(self) -> int:
        """Number of cells (the code dimension M)."""
        return len(self.cells)

    def words(self) -> frozenset[str]:
        """Union of all cells."""
        return self._words

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FamilySet)
            and self.n == other.n
            and self.cells == other.cells
        )

    def __hash__(self) -> int:
        return hash((self.n, self.cells))

    def __repr__(self) -> str:
        return f"FamilySet(n={self.n}, cells={len(self.cells)}x{[len(c) for c in self.cells]})"
