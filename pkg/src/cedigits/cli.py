"""Command line front end.

Commands: digits, count, trajectory, verify, threshold.  Outputs are
deterministic: the same invocation produces byte-identical files and
stdout, so runs can be diffed.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Sequence

from .errors import CapExceededError, SequenceExhaustedError
from .oracle import (
    OracleParams,
    alpha_threshold,
    d_exact,
    hypothesis_report,
    ones_exact_champernowne,
)
from .rational import format_rational, parse_rational
from .sequences import Naturals, parse_sequence
from .stats import (
    counter_prefix,
    lil_bound,
    prefix_counts_at_boundaries,
    trajectory,
)
from .stream import (
    NumberSpec,
    load_checkpoint,
    open_stream,
    save_checkpoint,
)

DIGIT_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"

# digits with base >= 2**16 are refused outright
BASE_CAP = 1 << 16

DEFAULT_EMISSION_CAP = 10**8

DEFAULT_VERIFY_BASES = (2, 3, 10)
DEFAULT_VERIFY_CS = (Fraction(1), Fraction(3, 2), Fraction(2))
DEFAULT_VERIFY_MAX_DIGITS = 10**7

VERIFY_CSV_HEADER = "b,c_num,c_den,k,d_exact,d_stream,ones_exact,ones_stream,match"


def render_digits(digits: Sequence[int], base: int) -> str:
    """Alphanumeric rendering through base 36, comma-separated beyond."""
    if base <= 36:
        return "".join(DIGIT_ALPHABET[d] for d in digits)
    return ",".join(str(d) for d in digits)


@dataclass(frozen=True)
class VerifyRow:
    base: int
    c: Fraction
    k: int
    d_oracle: int
    d_stream: int
    ones_oracle: int
    ones_stream: int

    @property
    def match(self) -> bool:
        return self.d_oracle == self.d_stream and self.ones_oracle == self.ones_stream


def run_verification(
    bases: Sequence[int] = DEFAULT_VERIFY_BASES,
    cs: Sequence[Fraction] = DEFAULT_VERIFY_CS,
    max_digits: int = DEFAULT_VERIFY_MAX_DIGITS,
    max_k: int | None = None,
    corrupt: bool = False,
) -> list[VerifyRow]:
    """Stream-versus-oracle equality over a (base, c) grid.

    For each cell, every k whose boundary position d_exact stays within
    max_digits is checked in a single streaming pass: the stream walks
    all copies of all integers up to 2*b**(k-1) - 1 and its position and
    ones count are compared against the closed forms.

    ``corrupt`` shifts the oracle values by one; it exists so the
    negative path of the checker is itself testable.
    """
    rows: list[VerifyRow] = []
    for base in bases:
        for c in cs:
            ks: list[tuple[int, int]] = []
            k = 1
            while max_k is None or k <= max_k:
                d = d_exact(OracleParams(base, c, k))
                if d > max_digits:
                    break
                ks.append((k, d))
                k += 1
            if not ks:
                continue
            spec = NumberSpec(Naturals(), base, c)
            boundaries = [2 * base ** (k - 1) - 1 for k, _ in ks]
            scanned = prefix_counts_at_boundaries(spec, 1, boundaries)
            for (k, d), (pos, ones) in zip(ks, scanned):
                ones_oracle = ones_exact_champernowne(OracleParams(base, c, k))
                if corrupt:
                    d += 1
                    ones_oracle += 1
                rows.append(VerifyRow(base, c, k, d, pos, ones_oracle, ones))
    rows.sort(key=lambda r: (r.base, r.c, r.k))
    return rows


def write_verification_csv(rows: Sequence[VerifyRow], out: IO[str]) -> None:
    out.write(VERIFY_CSV_HEADER + "\n")
    for r in rows:
        out.write(
            f"{r.base},{r.c.numerator},{r.c.denominator},{r.k},"
            f"{r.d_oracle},{r.d_stream},{r.ones_oracle},{r.ones_stream},"
            f"{'true' if r.match else 'false'}\n"
        )


def _print_verification_table(rows: Sequence[VerifyRow]) -> None:
    print("b  c      k   d_exact    d_stream   ones_exact ones_stream match")
    for r in rows:
        print(
            f"{r.base:<2} {format_rational(r.c):<6} {r.k:<3} "
            f"{r.d_oracle:<10} {r.d_stream:<10} {r.ones_oracle:<10} "
            f"{r.ones_stream:<11} {'true' if r.match else 'false'}"
        )


def _parse_int_list(text: str) -> list[int]:
    if text.strip() == "":
        return []
    return [int(part) for part in text.split(",")]


def _build_spec(args: argparse.Namespace) -> NumberSpec:
    if args.base >= BASE_CAP:
        raise ValueError(f"base {args.base} is beyond the CLI cap {BASE_CAP}")
    return NumberSpec(parse_sequence(args.sequence), args.base, parse_rational(args.c))


def _cmd_digits(args: argparse.Namespace) -> int:
    if args.resume is not None:
        if args.sequence is not None or args.base is not None or args.c != "1":
            raise ValueError("--resume replaces --sequence/--base/--c")
        cursor = load_checkpoint(args.resume)
        if cursor.spec.base >= BASE_CAP:
            raise ValueError(f"base {cursor.spec.base} is beyond the CLI cap {BASE_CAP}")
    else:
        if args.sequence is None or args.base is None:
            raise ValueError("--sequence and --base are required without --resume")
        cursor = open_stream(_build_spec(args))
    if args.n > args.max_emit:
        raise CapExceededError(
            f"emitting {args.n} digits exceeds the per-run cap {args.max_emit}"
        )
    rendered = render_digits(cursor.read(args.n), cursor.spec.base)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(rendered + "\n")
    else:
        print(rendered)
    if args.save_cursor:
        save_checkpoint(cursor, args.save_cursor)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    spec = _build_spec(args)
    if args.n > args.max_emit:
        raise CapExceededError(
            f"counting over {args.n} digits exceeds the per-run cap {args.max_emit}"
        )
    counter = counter_prefix(spec, args.n)
    for symbol, cnt in enumerate(counter.counts):
        print(f"{symbol} {cnt}")
    print(f"total {counter.total}")
    return 0


def _cmd_trajectory(args: argparse.Namespace) -> int:
    spec = _build_spec(args)
    if args.checkpoints is not None:
        cps = _parse_int_list(args.checkpoints)
    else:
        lo, sep, hi = args.k_range.partition(":")
        if not sep:
            raise ValueError("--k-range takes the form LO:HI")
        cps = [
            d_exact(OracleParams(spec.base, spec.multiplier, k))
            for k in range(int(lo), int(hi) + 1)
        ]
    traj = trajectory(spec, args.symbol, cps)
    print(f"lil bound (base {spec.base}): {lil_bound(spec.base):.6f}")
    if args.out:
        traj.write_csv_path(args.out)
        print(f"wrote {len(traj.points)} points to {args.out}")
    else:
        traj.write_csv(sys.stdout)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    bases = _parse_int_list(args.bases)
    cs = [parse_rational(part) for part in args.cs.split(",")]
    rows = run_verification(
        bases, cs, args.max_digits, args.max_k, corrupt=args.selftest_corrupt
    )
    _print_verification_table(rows)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="\n") as fh:
            write_verification_csv(rows, fh)
    ok = all(r.match for r in rows)
    print(f"all rows match: {'yes' if ok else 'no'} ({len(rows)} rows)")
    return 0 if ok else 1


def _cmd_threshold(args: argparse.Namespace) -> int:
    seq = parse_sequence(args.sequence)
    c = parse_rational(args.c)
    xs = _parse_int_list(args.xs)
    report = hypothesis_report(seq, args.base, c, xs, cap=args.cap)
    print(f"sequence: {report.sequence}")
    print(
        f"alpha threshold (base {report.base}, "
        f"c {format_rational(report.multiplier)}): {report.threshold:.6f}"
    )
    print("x count ratio holds")
    for s in report.samples:
        print(f"{s.x} {s.count} {s.ratio:.6f} {'yes' if s.holds_at_x else 'no'}")
    print(f"note: {report.disclaimer}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cedigits",
        description="digit streams of concatenation numbers and their statistics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_args(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument("--spec", "--sequence", dest="sequence", required=required,
                       default=None, help="sequence spec, e.g. primes or poly:0,0,1")
        p.add_argument("--base", type=int, required=required, default=None,
                       help="stream base, at least 2")
        p.add_argument("--c", default="1", help="repetition multiplier, e.g. 3/2 or 1.5")

    p_digits = sub.add_parser("digits", help="emit a digit prefix")
    add_spec_args(p_digits, required=False)
    p_digits.add_argument("-n", "--n", type=int, required=True, help="number of digits")
    p_digits.add_argument("--out", default=None, help="write digits to a file")
    p_digits.add_argument("--max-emit", type=int, default=DEFAULT_EMISSION_CAP)
    p_digits.add_argument("--save-cursor", default=None, help="write a checkpoint after emitting")
    p_digits.add_argument("--resume", default=None, help="continue from a checkpoint file")
    p_digits.set_defaults(func=_cmd_digits)

    p_count = sub.add_parser("count", help="symbol counts over a prefix")
    add_spec_args(p_count)
    p_count.add_argument("-n", "--n", type=int, required=True, help="prefix length")
    p_count.add_argument("--max-emit", type=int, default=DEFAULT_EMISSION_CAP)
    p_count.set_defaults(func=_cmd_count)

    p_traj = sub.add_parser("trajectory", help="statistic trajectory at checkpoints")
    add_spec_args(p_traj)
    p_traj.add_argument("--symbol", type=int, default=1, help="symbol to track")
    group = p_traj.add_mutually_exclusive_group(required=True)
    group.add_argument("--checkpoints", default=None, help="comma-separated prefix lengths")
    group.add_argument("--k-range", default=None,
                       help="LO:HI, checkpoints at the boundary positions for these k")
    p_traj.add_argument("--out", default=None, help="CSV path (stdout when omitted)")
    p_traj.set_defaults(func=_cmd_trajectory)

    p_verify = sub.add_parser("verify", help="stream vs closed-form equality checks")
    p_verify.add_argument("--bases", default="2,3,10")
    p_verify.add_argument("--cs", default="1,3/2,2")
    p_verify.add_argument("--max-digits", type=int, default=DEFAULT_VERIFY_MAX_DIGITS)
    p_verify.add_argument("--max-k", type=int, default=None)
    p_verify.add_argument("--csv", default=None, help="also write the report as CSV")
    p_verify.add_argument("--selftest-corrupt", action="store_true",
                          help="negative control: corrupt the oracle and expect mismatch")
    p_verify.set_defaults(func=_cmd_verify)

    p_thresh = sub.add_parser("threshold", help="density threshold diagnostics")
    p_thresh.add_argument("--spec", "--sequence", dest="sequence", required=True)
    p_thresh.add_argument("--base", type=int, required=True)
    p_thresh.add_argument("--c", default="1")
    p_thresh.add_argument("--xs", required=True, help="comma-separated sample points")
    p_thresh.add_argument("--cap", type=int, default=10**8, help="counting cap")
    p_thresh.set_defaults(func=_cmd_threshold)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, SequenceExhaustedError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
