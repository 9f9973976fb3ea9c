"""Classical deletion-code constructions.

Two families live here: Varshamov-Tenengolts codes (the classic
single-deletion codes, built by brute-force filtering) and a
high-rate family obtained by lifting a single parity-check code over
``Z_{2^E}`` to a binary deletion code.  The lift encodes each symbol as a
block ``1^t <binary digits> 0^t``, so every codeword alternates between a
run of ones, a payload, and a run of zeros; a deletion can desynchronize
at most one block boundary, which is what makes the image
deletion-correctable whenever the symbol code corrects erasures.

Cosets of the constant vectors partition the parity-check code into
equal-size cells; that partition is the input for the quantum encoder.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .bits import deletion_surface, levenshtein
from .family import FamilySet

SymbolWord = tuple[int, ...]


@dataclass(frozen=True)
class ClassicalCode:
    """A set of distinct words of one fixed length."""

    n: int
    words: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if any(len(w) != self.n for w in self.words):
            raise ValueError(f"all words must have length {self.n}")

    @property
    def rate(self) -> float:
        """(log2 |C|) / n, the classical code rate."""
        import math

        return math.log2(len(self.words)) / self.n


def vt_code(n: int, a: int) -> ClassicalCode:
    """The VT code: words whose position-weighted sum is ``a`` mod ``n+1``."""
    if n < 1:
        raise ValueError("vt_code needs n >= 1")
    target = a % (n + 1)
    words = set()
    for bits in itertools.product("01", repeat=n):
        checksum = sum(i for i, c in enumerate(bits, start=1) if c == "1")
        if checksum % (n + 1) == target:
            words.add("".join(bits))
    return ClassicalCode(n, frozenset(words))


def is_single_deletion_code(code: ClassicalCode) -> tuple[bool, tuple[str, str] | None]:
    """Whether all distinct codeword pairs keep edit distance >= 4.

    Checked via disjointness of single-deletion surfaces, which is
    equivalent for equal-length words.  Rather than intersecting all
    surface pairs, a single map from each deleted word to the codeword
    that produced it finds any clash in one pass, so the cost is linear
    in the total surface size.  Returns the first violating pair as a
    witness, or ``None`` on success.
    """
    owner: dict[str, str] = {}
    for x in sorted(code.words):
        for y in deletion_surface(x):
            if y in owner:
                return False, (owner[y], x)
            owner[y] = x
    return True, None


def min_levenshtein(code: ClassicalCode) -> int:
    """Minimum insert/delete distance over distinct codeword pairs."""
    if len(code.words) < 2:
        raise ValueError("minimum distance needs at least two words")
    return min(levenshtein(x, y) for x, y in itertools.combinations(sorted(code.words), 2))


@dataclass(frozen=True)
class HighRateParams:
    """Parameters of the parity-check lift: E bits per symbol, N symbols, radius t."""

    E: int
    N: int
    t: int = 1

    def __post_init__(self):
        if self.E < 1 or self.N < 1 or self.t < 1:
            raise ValueError("E, N and t must be positive")
        if self.N % (2**self.E) != 0:
            raise ValueError(f"N={self.N} must be a multiple of 2^E={2 ** self.E}")

    @property
    def alphabet(self) -> int:
        return 2**self.E

    @property
    def bit_length(self) -> int:
        return (self.E + 2 * self.t) * self.N


def _symbol_bits(a: int, E: int) -> str:
    # big-endian E-bit expansion; fixing the injection keeps codes reproducible
    return format(a, f"0{E}b")


def sandwich_map(symbols, params: HighRateParams) -> str:
    """Encode a symbol word as concatenated ``1^t <bits> 0^t`` blocks."""
    symbols = tuple(symbols)
    if len(symbols) != params.N:
        raise ValueError(f"expected {params.N} symbols, got {len(symbols)}")
    q = params.alphabet
    if any(not 0 <= a < q for a in symbols):
        raise ValueError(f"symbols must lie in 0..{q - 1}")
    one, zero = "1" * params.t, "0" * params.t
    return "".join(one + _symbol_bits(a, params.E) + zero for a in symbols)


def parity_check_code(params: HighRateParams) -> set[SymbolWord]:
    """All length-N words over Z_{2^E} whose symbols sum to zero."""
    q = params.alphabet
    out = set()
    for prefix in itertools.product(range(q), repeat=params.N - 1):
        out.add(prefix + ((-sum(prefix)) % q,))
    return out


def highrate_code(params: HighRateParams) -> ClassicalCode:
    """The binary image of the parity-check code under the sandwich map."""
    return ClassicalCode(
        params.bit_length,
        frozenset(sandwich_map(s, params) for s in parity_check_code(params)),
    )


def build_highrate_partition(params: HighRateParams) -> FamilySet:
    """Partition the lifted code into cosets of the constant symbol vectors.

    Each cell collects the images of ``a + (i, i, ..., i)`` for all symbols
    ``i``, so cells have exactly ``2^E`` words.  Cell order is canonical:
    cells are sorted by their lexicographically smallest word, making the
    message-index assignment reproducible.
    """
    if params.t != 1:
        raise ValueError("the quantum construction is defined for t=1 only")
    q = params.alphabet
    if params.E * (params.N - 2) < 1:
        raise ValueError(
            f"dimension too small: E(N-2)={params.E * (params.N - 2)} gives fewer than two cells"
        )
    seen: set[SymbolWord] = set()
    cells: list[list[str]] = []
    for a in sorted(parity_check_code(params)):
        if a in seen:
            continue
        coset = [tuple((s + i) % q for s in a) for i in range(q)]
        seen.update(coset)
        cells.append(sorted(sandwich_map(c, params) for c in coset))
    cells.sort(key=lambda cell: cell[0])
    return FamilySet(cells)


def rate(params: HighRateParams) -> Fraction:
    """Quantum code rate E(N-2) / ((E+2)N) of the t=1 construction."""
    if params.t != 1:
        raise ValueError("the rate formula applies to the t=1 construction")
    return Fraction(params.E * (params.N - 2), (params.E + 2) * params.N)


def find_params_for_rate(target: Fraction | float) -> HighRateParams:
    """Smallest-bit-length parameters whose rate exceeds ``target``.

    The rate is bounded by E/(E+2), so only E above 2R/(1-R) can work;
    for each such E the smallest admissible N is the first multiple of
    2^E past 2E/(E - R(E+2)).  Candidates are compared by bit length,
    then by E.
    """
    target = Fraction(target)
    if not 0 < target < 1:
        raise ValueError("target rate must lie strictly between 0 and 1")
    best: HighRateParams | None = None
    E = 1
    while True:
        block = 2**E
        if best is not None and (E + 2) * block >= best.bit_length:
            break
        margin = E - target * (E + 2)
        if margin > 0:
            bound = Fraction(2 * E) / margin  # N must exceed this, strictly
            N = (int(bound // block) + 1) * block
            assert rate(HighRateParams(E, N)) > target
            candidate = HighRateParams(E, N)
            if best is None or (candidate.bit_length, candidate.E) < (best.bit_length, best.E):
                best = candidate
        E += 1
    assert best is not None
    return best
