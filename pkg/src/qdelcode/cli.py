"""Command-line surface: build, check, and simulate family-set files.

Family sets travel as JSON files with keys ``n`` (word length), ``sets``
(a list of lists of '0'/'1' strings; list position is the message index,
position 1 is the leftmost bit) and optional ``metadata``.  No timestamps
or host details go into the files, so identical invocations produce
byte-identical output.

Exit codes: 0 success/pass, 1 validation failure, 2 I/O or parse error,
3 size guard exceeded.  The QDEL_THREADS variable is accepted as an
upper bound on worker threads; the implementation runs on one thread,
which satisfies any cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .codes import (
    ClassicalCode,
    HighRateParams,
    build_highrate_partition,
    find_params_for_rate,
    highrate_code,
    is_single_deletion_code,
    rate,
    vt_code,
)
from .family import FamilySet
from .partition import (
    SizeGuardError,
    condition_report,
    is_brs_stable,
    is_homogeneous,
    search_homogeneous,
)
from .quantum import CodeInstance, CodeValidationError, DecodeError, roundtrip_verify

EXIT_PASS = 0
EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_GUARD = 3

SIMULATION_GUARD = 10**6


class FamilyFileError(Exception):
    """A family-set file could not be read, parsed, or validated."""

    def __init__(self, message: str, exit_code: int = EXIT_IO):
        super().__init__(message)
        self.exit_code = exit_code


def write_family_file(path: str, family: FamilySet, metadata: dict | None = None) -> None:
    payload: dict = {"n": family.n, "sets": [sorted(cell) for cell in family.cells]}
    if metadata:
        payload["metadata"] = metadata
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def read_family_file(path: str) -> tuple[FamilySet, dict]:
    """Parse and validate a family-set file.

    Structural problems (bad JSON, wrong types, non-bit words) raise with
    exit code 2 and a location diagnostic; a structurally sound file whose
    sets overlap or disagree on length raises with exit code 1.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FamilyFileError(f"{path}: {exc.strerror or exc}", EXIT_IO)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FamilyFileError(
            f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}", EXIT_IO
        )
    if not isinstance(data, dict):
        raise FamilyFileError(f"{path}: top level must be an object", EXIT_IO)
    n = data.get("n")
    if not isinstance(n, int) or n < 1:
        raise FamilyFileError(f"{path}: 'n' must be a positive integer", EXIT_IO)
    sets = data.get("sets")
    if not isinstance(sets, list) or not all(isinstance(s, list) for s in sets):
        raise FamilyFileError(f"{path}: 'sets' must be a list of lists", EXIT_IO)
    for j, cell in enumerate(sets):
        for k, word in enumerate(cell):
            if not isinstance(word, str) or any(c not in "01" for c in word):
                raise FamilyFileError(
                    f"{path}: sets[{j}][{k}]: expected a string of 0/1, got {word!r}",
                    EXIT_IO,
                )
            if len(word) != n:
                raise FamilyFileError(
                    f"{path}: sets[{j}][{k}]: word {word!r} has length {len(word)}, expected n={n}",
                    EXIT_IO,
                )
    metadata = data.get("metadata", {})
    if not isinstance(metadata, dict):
        raise FamilyFileError(f"{path}: 'metadata' must be an object", EXIT_IO)
    try:
        family = FamilySet(sets)
    except ValueError as exc:
        raise FamilyFileError(f"{path}: {exc}", EXIT_VALIDATION)
    return family, metadata


def cmd_vt(args) -> int:
    code = vt_code(args.n, args.a)
    bound = 2**args.n / (args.n + 1)
    sdc, _ = is_single_deletion_code(code)
    print(f"VT_{args.n}({args.a % (args.n + 1)}): {len(code.words)} words of length {args.n}")
    print(f"rate: {code.rate:.6g}")
    print(
        f"cardinality bound 2^n/(n+1) = {bound:.6g}: "
        + ("met" if len(code.words) >= bound else "not met")
    )
    print(f"single-deletion code: {'yes' if sdc else 'no'}")
    if args.out:
        try:
            write_family_file(
                args.out,
                FamilySet([sorted(code.words)]),
                metadata={"kind": "vt", "n": args.n, "a": args.a},
            )
        except OSError as exc:
            print(f"cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
            return EXIT_IO
        print(f"wrote {args.out}")
    return EXIT_PASS


def cmd_check(args) -> int:
    try:
        family, _ = read_family_file(args.file)
    except FamilyFileError as exc:
        print(exc, file=sys.stderr)
        return exc.exit_code
    union = ClassicalCode(family.n, family.words())
    print(f"family: {family.size} cells, {len(family.words())} words of length {family.n}")
    sdc, pair = is_single_deletion_code(union)
    suffix = "" if sdc else f" (deletions collide for {pair[0]} and {pair[1]})"
    print(f"single-deletion code (union): {'yes' if sdc else 'no'}{suffix}")
    sizes = [len(c) for c in family.cells]
    print(f"equal cell sizes: {'yes' if len(set(sizes)) == 1 else f'no {sorted(sizes)}'}")
    stable, why = is_brs_stable(family)
    print(f"run-support stable: {'yes' if stable else f'no, {why}'}")
    homog, reason = is_homogeneous(family, union)
    print(f"homogeneous: {'yes' if homog else f'no, {reason}'}")
    report = condition_report(family)
    for line in report.lines():
        print(line)
    if report.ratios is not None:
        print("lambda table:")
        for label in sorted(report.ratios):
            print(f"  {label}: {report.ratios[label]}")
    print("PASS" if report.all_passed else "FAIL")
    return EXIT_PASS if report.all_passed else EXIT_VALIDATION


def cmd_construct(args) -> int:
    try:
        params = HighRateParams(args.E, args.N)
        family = build_highrate_partition(params)
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    r = rate(params)
    print(
        f"length {params.bit_length}, dimension {family.size}, rate {r} = {float(r):.6g}"
    )
    try:
        write_family_file(
            args.out,
            family,
            metadata={"kind": "highrate", "E": args.E, "N": args.N, "t": 1},
        )
    except OSError as exc:
        print(f"cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {args.out}")
    return EXIT_PASS


def cmd_simulate(args) -> int:
    try:
        family, _ = read_family_file(args.file)
    except FamilyFileError as exc:
        print(exc, file=sys.stderr)
        return exc.exit_code
    total = len(family.words())
    if total > SIMULATION_GUARD:
        print(
            f"refusing to simulate: encoded states span {total} basis words, "
            f"above the {SIMULATION_GUARD} guard",
            file=sys.stderr,
        )
        return EXIT_GUARD
    try:
        code = CodeInstance(family)
    except CodeValidationError as exc:
        print("family fails validation:", file=sys.stderr)
        for line in exc.report.lines():
            print(f"  {line}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValueError as exc:
        print(f"family cannot be simulated: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        report = roundtrip_verify(code, trials=args.trials, seed=args.seed, mode=args.mode)
    except DecodeError as exc:
        print(f"decoding failed: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    sys.stdout.write(report.to_tsv())
    print(f"branches: {len(report.rows)}", file=sys.stderr)
    print(f"min fidelity: {report.min_fidelity:.12g}", file=sys.stderr)
    print(f"max EMPTY probability: {report.max_empty_probability:.3g}", file=sys.stderr)
    print(
        f"max outcome probability error: {report.max_probability_error:.3g}",
        file=sys.stderr,
    )
    print("PASS" if report.passed else "FAIL", file=sys.stderr)
    return EXIT_PASS if report.passed else EXIT_VALIDATION


def _smallest_legal_n(E: int) -> int:
    # the smallest multiple of 2^E with at least two cells, E(N-2) >= 1
    return 4 if E == 1 else 2**E


def _table_row(params: HighRateParams, target: Fraction, first_above: bool) -> str:
    r = rate(params)
    exponent = params.E * (params.N - 2)
    words_exp = params.E * (params.N - 1)
    row = (
        f"E={params.E}  N={params.N}  length={params.bit_length}  "
        f"dimension=2^{exponent}  rate={r} ({float(r):.4f})"
    )
    if words_exp >= 20:
        row += "  [not desk-simulable]"
    if first_above:
        row += f"  <-- first rate above {target}"
    return row


def cmd_rate_table(args) -> int:
    target: Fraction = args.R
    marked = False
    for E in range(1, 7):
        params = HighRateParams(E, _smallest_legal_n(E))
        above = not marked and rate(params) > target
        marked = marked or above
        print(_table_row(params, target, above))
    if not marked:
        params = find_params_for_rate(target)
        print(_table_row(params, target, True))
    return EXIT_PASS


def _parse_source(text: str) -> tuple[str, ClassicalCode]:
    parts = text.replace(":", " ").split()
    if len(parts) == 3 and parts[0] == "vt":
        n, a = int(parts[1]), int(parts[2])
        return f"VT_{n}({a})", vt_code(n, a)
    if len(parts) == 3 and parts[0] == "highrate":
        E, N = int(parts[1]), int(parts[2])
        return f"highrate E={E} N={N}", highrate_code(HighRateParams(E, N))
    raise ValueError(
        f"cannot parse source {text!r}; expected 'vt:<n>:<a>' or 'highrate:<E>:<N>'"
    )


def cmd_search(args) -> int:
    try:
        desc, code = _parse_source(args.source)
    except ValueError as exc:
        print(exc, file=sys.stderr)
        return EXIT_IO
    try:
        found = search_homogeneous(code, args.max_cells)
    except SizeGuardError as exc:
        print(exc, file=sys.stderr)
        return EXIT_GUARD
    if not found:
        print(f"{desc}: none found")
        return EXIT_PASS
    print(f"{desc}: {len(found)} homogeneous partition(s)")
    for fam in found:
        print("  " + " | ".join(",".join(sorted(cell)) for cell in fam.cells))
    return EXIT_PASS


def _rate_argument(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError("target rate must lie strictly between 0 and 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdelcode",
        description="Construct, check, and simulate quantum single-deletion codes "
        "built from partitioned classical deletion codes.",
        epilog="QDEL_THREADS caps worker threads (the current implementation is "
        "single-threaded and satisfies any cap).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("vt", help="build a VT code and report its basic facts")
    p.add_argument("--n", type=int, required=True, help="word length (>= 1)")
    p.add_argument("--a", type=int, required=True, help="checksum residue mod n+1")
    p.add_argument("--out", help="write the code as a one-set family file")
    p.set_defaults(func=cmd_vt)

    p = sub.add_parser("check", help="validate a family file and report all conditions")
    p.add_argument("file", help="family-set JSON file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="build the high-rate partition for (E, N)")
    p.add_argument("--E", type=int, required=True, help="bits per symbol")
    p.add_argument("--N", type=int, required=True, help="symbols per codeword (multiple of 2^E)")
    p.add_argument("--out", required=True, help="output family file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("simulate", help="round-trip a family file through the deletion channel")
    p.add_argument("file", help="family-set JSON file")
    p.add_argument("--trials", type=int, default=25, help="random messages per position")
    p.add_argument("--seed", type=int, default=0, help="base seed for messages and sampling")
    p.add_argument(
        "--mode",
        choices=("exhaustive", "sampled"),
        default="exhaustive",
        help="decode every branch, or sample one outcome per deletion",
    )
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("rate-table", help="tabulate achievable rates against a target")
    p.add_argument("--R", type=_rate_argument, required=True, help="target rate in (0, 1)")
    p.set_defaults(func=cmd_rate_table)

    p = sub.add_parser("search", help="enumerate homogeneous partitions of a small code")
    p.add_argument(
        "--source",
        required=True,
        help="code to search: 'vt:<n>:<a>' or 'highrate:<E>:<N>'",
    )
    p.add_argument("--max-cells", type=int, default=12, help="largest cell count to try")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    raw_threads = os.environ.get("QDEL_THREADS")
    if raw_threads is not None:
        try:
            if int(raw_threads) < 1:
                raise ValueError
        except ValueError:
            print(f"ignoring invalid QDEL_THREADS={raw_threads!r}", file=sys.stderr)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
