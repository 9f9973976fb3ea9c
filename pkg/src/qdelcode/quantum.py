"""Exact sparse simulation of the encode / delete / measure / recover pipeline.

States are finite maps from basis words to complex amplitudes; mixed
states are weighted lists of such pure states.  Nothing here ever builds
a dense vector or matrix, which keeps code lengths of 16+ qubits cheap:
the encoded states are supported on the code words only, deleting a
qubit splits that support in two, and the decoding measurement is
diagonal in the computational basis, so it only reshuffles support sets.

The recovery step never materializes a unitary either.  For a measured
label the family's cells span an orthonormal set of uniform-superposition
states, one per message index; expanding a branch in that basis and
reading the coefficients off onto the message register acts exactly like
the recovery unitary followed by discarding the zeroed work register.

Tolerances: normalization and orthogonality are exact up to roundoff and
are checked at 1e-12; branch fidelity and leftover-outcome probability at
1e-9; amplitudes below 1e-15 are pruned.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Literal, NamedTuple

from .delsets import CellLabel
from .family import FamilySet
from .partition import ConditionReport, condition_report, _decompositions

NORM_TOL = 1e-12
BRANCH_TOL = 1e-9
PRUNE_TOL = 1e-15
OUTCOME_EPS = 1e-12

Mode = Literal["exhaustive", "sampled"]


class CodeValidationError(Exception):
    """The family set failed a condition required for error correction."""

    def __init__(self, report: ConditionReport):
        self.report = report
        super().__init__("; ".join(report.lines()))


class DecodeError(Exception):
    """Decoding failed: probability mass landed outside every cell."""


class RecoverySpanError(DecodeError):
    """A measured branch lies outside the span of the recovery basis."""


def _norm_sq(amplitudes: dict[str, complex]) -> float:
    return sum(abs(a) ** 2 for a in amplitudes.values())


class SparseState:
    """A normalized pure state on ``qubits`` qubits with finite support."""

    __slots__ = ("qubits", "amplitudes")

    def __init__(self, qubits: int, amplitudes: dict[str, complex]):
        amps = {
            x: complex(a) for x, a in amplitudes.items() if abs(a) >= PRUNE_TOL
        }
        if any(len(x) != qubits for x in amps):
            raise ValueError(f"all basis words must have length {qubits}")
        if abs(_norm_sq(amps) - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized: |.|^2 = {_norm_sq(amps)!r}")
        self.qubits = qubits
        self.amplitudes = amps

    @classmethod
    def basis(cls, qubits: int, word: str) -> "SparseState":
        return cls(qubits, {word: 1.0})

    @classmethod
    def uniform(cls, words: Iterable[str]) -> "SparseState":
        words = sorted(set(words))
        if not words:
            raise ValueError("uniform state needs at least one word")
        amp = 1.0 / math.sqrt(len(words))
        return cls(len(words[0]), {w: amp for w in words})

    @classmethod
    def from_unnormalized(cls, qubits: int, amplitudes: dict[str, complex]) -> tuple[float, "SparseState"]:
        """Normalize; returns the squared norm and the normalized state."""
        weight = _norm_sq(amplitudes)
        if weight <= 0:
            raise ValueError("zero vector cannot be normalized")
        scale = 1.0 / math.sqrt(weight)
        return weight, cls(qubits, {x: a * scale for x, a in amplitudes.items()})

    def inner(self, other: "SparseState") -> complex:
        """<self|other> over the common support."""
        if self.qubits != other.qubits:
            raise ValueError("qubit counts differ")
        small, big = self.amplitudes, other.amplitudes
        if len(big) < len(small):
            return sum(big[x].conjugate() * small[x] for x in big if x in small).conjugate()
        return sum(small[x].conjugate() * big[x] for x in small if x in big)

    def __repr__(self) -> str:
        terms = ", ".join(f"{x}: {a:.4g}" for x, a in sorted(self.amplitudes.items()))
        return f"SparseState({self.qubits}, {{{terms}}})"


@dataclass(frozen=True)
class Ensemble:
    """A mixed state as a weighted list of pure states."""

    members: tuple[tuple[float, SparseState], ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError("ensemble needs at least one member")
        if any(w <= 0 for w, _ in self.members):
            raise ValueError("ensemble weights must be positive")
        total = sum(w for w, _ in self.members)
        if abs(total - 1.0) > NORM_TOL:
            raise ValueError(f"ensemble weights sum to {total!r}, not 1")
        if len({s.qubits for _, s in self.members}) != 1:
            raise ValueError("ensemble members must agree on qubit count")

    @classmethod
    def pure(cls, state: SparseState) -> "Ensemble":
        return cls(((1.0, state),))

    @property
    def qubits(self) -> int:
        return self.members[0][1].qubits


class MeasurementOutcome(NamedTuple):
    """One measurement result; ``label is None`` is the leftover projector."""

    label: CellLabel | None
    probability: float

    def describe(self) -> str:
        return "EMPTY" if self.label is None else str(self.label)


class CodeInstance:
    """A validated family set with everything precomputed for simulation.

    Construction runs the three condition checks and refuses families
    that fail any of them.  For each reachable label the per-message
    recovery basis (uniform superpositions over the label's cells) and a
    word -> label lookup are cached; condition checks guarantee the cell
    supports are pairwise disjoint, which makes the measurement diagonal
    and the recovery bases orthonormal by construction.
    """

    def __init__(self, family: FamilySet):
        if family.size < 2:
            raise ValueError("the encoder needs at least two cells")
        report = condition_report(family)
        if not report.all_passed:
            raise CodeValidationError(report)
        self.family = family
        self.n = family.n
        self.dimension = family.size
        self.message_qubits = (self.dimension - 1).bit_length()
        self.ratios = report.ratios
        assert self.ratios is not None

        decomps = _decompositions(family)
        labels = {label for per_bit in decomps[0].values() for label in per_bit.cells}
        for per_bit in decomps[1:]:
            other = {label for d in per_bit.values() for label in d.cells}
            assert other == labels, "ratio condition should force equal label sets"
        self.reachable_labels: tuple[CellLabel, ...] = tuple(sorted(labels))

        self.cell_words: dict[CellLabel, list[frozenset[str]]] = {}
        self.basis_states: dict[CellLabel, list[SparseState]] = {}
        self._label_of_word: dict[str, CellLabel] = {}
        for label in self.reachable_labels:
            cells = [per_bit[label.bit].cells[label] for per_bit in decomps]
            self.cell_words[label] = cells
            self.basis_states[label] = [SparseState.uniform(c) for c in cells]
            for c in cells:
                for y in c:
                    assert y not in self._label_of_word, "cell supports must be disjoint"
                    self._label_of_word[y] = label

    def message_word(self, m: int) -> str:
        return format(m, f"0{self.message_qubits}b")

    def basis_message(self, m: int) -> SparseState:
        if not 0 <= m < self.dimension:
            raise ValueError(f"message index {m} out of range")
        return SparseState.basis(self.message_qubits, self.message_word(m))

    def uniform_message(self) -> SparseState:
        amp = 1.0 / math.sqrt(self.dimension)
        return SparseState(
            self.message_qubits,
            {self.message_word(m): amp for m in range(self.dimension)},
        )


def encode(code: CodeInstance, message: SparseState) -> SparseState:
    """Map each message basis state to the uniform superposition of its cell."""
    if message.qubits != code.message_qubits:
        raise ValueError(
            f"message must use {code.message_qubits} qubits, got {message.qubits}"
        )
    out: dict[str, complex] = {}
    for word, alpha in message.amplitudes.items():
        m = int(word, 2)
        if m >= code.dimension:
            raise ValueError(
                f"message has amplitude on index {m}, but the code dimension is {code.dimension}"
            )
        cell = code.family.cells[m]
        scale = alpha / math.sqrt(len(cell))
        for x in cell:
            out[x] = out.get(x, 0.0) + scale
    return SparseState(code.n, out)


def delete_qubit(state: SparseState, i: int) -> Ensemble:
    """Trace out qubit ``i`` (1-based) of a pure state.

    The result is the two-branch ensemble given by the value of the
    deleted qubit; its density operator equals the partial trace exactly,
    because the cross blocks between the two values of qubit ``i`` have
    zero trace over that qubit.
    """
    if not 1 <= i <= state.qubits:
        raise ValueError(f"position {i} out of range for {state.qubits} qubits")
    branches: dict[str, dict[str, complex]] = {"0": {}, "1": {}}
    for x, a in state.amplitudes.items():
        part = branches[x[i - 1]]
        y = x[: i - 1] + x[i:]
        part[y] = part.get(y, 0.0) + a
    members = []
    for part in (branches["0"], branches["1"]):
        weight = _norm_sq(part)
        if weight < PRUNE_TOL:
            continue
        _, member = SparseState.from_unnormalized(state.qubits - 1, part)
        members.append((weight, member))
    total = sum(w for w, _ in members)
    return Ensemble(tuple((w / total, s) for w, s in members))


def _measure_all(
    code: CodeInstance, mixed: Ensemble
) -> list[tuple[MeasurementOutcome, Ensemble]]:
    """All measurement outcomes with positive probability, leftover last.

    Projectors are diagonal with disjoint supports, so measuring splits
    every member's amplitudes by the label of each basis word; the
    leftover projector collects the words outside every cell.
    """
    if mixed.qubits != code.n - 1:
        raise ValueError(f"measurement expects {code.n - 1} qubits, got {mixed.qubits}")
    pieces: dict[CellLabel | None, list[tuple[float, dict[str, complex]]]] = {}
    probability: dict[CellLabel | None, float] = {}
    for weight, state in mixed.members:
        split: dict[CellLabel | None, dict[str, complex]] = {}
        for y, a in state.amplitudes.items():
            split.setdefault(code._label_of_word.get(y), {})[y] = a
        for label, amps in split.items():
            piece_weight = _norm_sq(amps)
            probability[label] = probability.get(label, 0.0) + weight * piece_weight
            pieces.setdefault(label, []).append((weight * piece_weight, amps))
    total = sum(probability.values())
    assert abs(total - 1.0) <= 1e-9, f"outcome probabilities sum to {total!r}"

    ordered = sorted((lbl for lbl in probability if lbl is not None))
    results: list[tuple[MeasurementOutcome, Ensemble]] = []
    for label in [*ordered, *([None] if None in probability else [])]:
        prob = probability[label]
        if prob <= OUTCOME_EPS:
            continue
        members = []
        for piece_prob, amps in pieces[label]:
            _, post = SparseState.from_unnormalized(code.n - 1, amps)
            members.append((piece_prob / prob, post))
        results.append((MeasurementOutcome(label, prob), Ensemble(tuple(members))))
    return results


def measure(
    code: CodeInstance,
    mixed: Ensemble,
    mode: Mode = "exhaustive",
    seed: int | None = None,
) -> list[tuple[MeasurementOutcome, Ensemble]]:
    """Perform the decoding measurement.

    Exhaustive mode lists every outcome with probability above 1e-12
    together with its renormalized post-measurement state; sampled mode
    draws a single outcome from the same distribution using ``seed``.
    """
    results = _measure_all(code, mixed)
    if mode == "exhaustive":
        return results
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(f"measure:{seed}")
    return [_sample_outcome(results, rng)]


def _sample_outcome(results, rng: random.Random):
    pick = rng.random() * sum(o.probability for o, _ in results)
    acc = 0.0
    for outcome, post in results:
        acc += outcome.probability
        if pick <= acc:
            return outcome, post
    return results[-1]


def decode_branch(code: CodeInstance, label: CellLabel, branch: Ensemble) -> Ensemble:
    """Recover the message register from a measured branch.

    Every pure member is expanded in the label's orthonormal recovery
    basis; the coefficient of the m-th basis state becomes the amplitude
    of message word m.  Residual norm outside the span signals a
    corrupted input or an invalid code and raises.
    """
    basis = code.basis_states.get(label)
    if basis is None:
        raise ValueError(f"outcome {label} is not reachable for this code")
    members = []
    for weight, state in branch.members:
        amps: dict[str, complex] = {}
        in_span = 0.0
        for m, psi in enumerate(basis):
            coeff = psi.inner(state)
            if abs(coeff) >= PRUNE_TOL:
                amps[code.message_word(m)] = coeff
            in_span += abs(coeff) ** 2
        if 1.0 - in_span >= BRANCH_TOL:
            raise RecoverySpanError(
                f"branch for {label} has residual norm {1.0 - in_span:.3e} outside the recovery span"
            )
        _, decoded = SparseState.from_unnormalized(code.message_qubits, amps)
        members.append((weight, decoded))
    return Ensemble(tuple(members))


def decode(
    code: CodeInstance,
    mixed: Ensemble,
    mode: Mode = "exhaustive",
    seed: int | None = None,
) -> Ensemble:
    """Measurement followed by recovery on every branch.

    Exhaustive mode mixes the decoded branches with their outcome
    probabilities; sampled mode decodes one sampled branch.
    """
    results = _measure_all(code, mixed)
    empty = sum(o.probability for o, _ in results if o.label is None)
    if empty >= BRANCH_TOL:
        raise DecodeError(
            f"probability {empty:.3e} fell outside every cell; input is not a corrupted codeword"
        )
    results = [(o, post) for o, post in results if o.label is not None]
    if mode == "sampled":
        rng = random.Random(f"decode:{seed}")
        results = [_sample_outcome(results, rng)]
    total = sum(o.probability for o, _ in results)
    members = []
    for outcome, post in results:
        decoded = decode_branch(code, outcome.label, post)
        share = outcome.probability / total if mode == "exhaustive" else 1.0
        members.extend((share * w, s) for w, s in decoded.members)
    return Ensemble(tuple(members))


def fidelity(pure: SparseState, mixed: Ensemble) -> float:
    """<psi| rho |psi> for a pure reference state."""
    if pure.qubits != mixed.qubits:
        raise ValueError("qubit counts differ")
    return sum(w * abs(pure.inner(s)) ** 2 for w, s in mixed.members)


@dataclass(frozen=True)
class RoundtripRow:
    position: int
    trial: str
    outcome: str
    probability: float
    fidelity: float


@dataclass(frozen=True)
class RoundtripReport:
    """Per-branch results of encode -> delete -> decode over a trial sweep."""

    rows: tuple[RoundtripRow, ...]
    min_fidelity: float
    max_empty_probability: float
    max_probability_error: float

    @property
    def passed(self) -> bool:
        return (
            self.min_fidelity >= 1.0 - BRANCH_TOL
            and self.max_empty_probability < BRANCH_TOL
            and self.max_probability_error <= 1e-9
        )

    def to_tsv(self) -> str:
        lines = ["i\ttrial\toutcome_label\tbranch_probability\tfidelity"]
        for r in self.rows:
            lines.append(
                f"{r.position}\t{r.trial}\t{r.outcome}\t{r.probability:.12g}\t{r.fidelity:.12g}"
            )
        return "\n".join(lines) + "\n"


def random_message(code: CodeInstance, rng: random.Random) -> SparseState:
    """A message with independent complex-normal amplitudes, normalized."""
    amps = {
        code.message_word(m): complex(rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0))
        for m in range(code.dimension)
    }
    _, state = SparseState.from_unnormalized(code.message_qubits, amps)
    return state


def roundtrip_verify(
    code: CodeInstance,
    trials: int = 25,
    seed: int = 0,
    mode: Mode = "exhaustive",
) -> RoundtripReport:
    """Run the full pipeline for every deletion position and many messages.

    Messages are the deterministic corner cases (every basis message and
    the uniform superposition) plus ``trials`` seeded random messages.
    Every measured branch is decoded separately and compared with the
    original message, so the report captures the worst branch, not just
    the mixture.
    """
    messages: list[tuple[str, SparseState]] = [
        (f"basis-{m}", code.basis_message(m)) for m in range(code.dimension)
    ]
    messages.append(("uniform", code.uniform_message()))
    for t in range(trials):
        rng = random.Random(f"roundtrip:{seed}:msg:{t}")
        messages.append((f"rand-{t}", random_message(code, rng)))

    rows: list[RoundtripRow] = []
    min_fid = 1.0
    max_empty = 0.0
    max_prob_err = 0.0
    for i in range(1, code.n + 1):
        for trial, message in messages:
            mixed = delete_qubit(encode(code, message), i)
            results = _measure_all(code, mixed)
            total = sum(o.probability for o, _ in results)
            max_prob_err = max(max_prob_err, abs(total - 1.0))
            empty = sum(o.probability for o, _ in results if o.label is None)
            max_empty = max(max_empty, empty)
            branches = [(o, post) for o, post in results if o.label is not None]
            if mode == "sampled":
                rng = random.Random(f"roundtrip:{seed}:pick:{i}:{trial}")
                branches = [_sample_outcome(branches, rng)]
            for outcome, post in branches:
                try:
                    decoded = decode_branch(code, outcome.label, post)
                except DecodeError as exc:
                    raise DecodeError(
                        f"position {i}, message {trial}, outcome {outcome.describe()}: {exc}"
                    ) from exc
                fid = fidelity(message, decoded)
                min_fid = min(min_fid, fid)
                rows.append(
                    RoundtripRow(i, trial, outcome.describe(), outcome.probability, fid)
                )
    return RoundtripReport(
        rows=tuple(rows),
        min_fidelity=min_fid,
        max_empty_probability=max_empty,
        max_probability_error=max_prob_err,
    )
