"""Digit-frequency counters and the iterated-logarithm statistic.

The normalized statistic at prefix length n for symbol k in base b is

    (count - n/b) / sqrt(2 n log log n)

with natural logarithms.  Almost every number obeys the law of the
iterated logarithm: the statistic's limsup is sqrt(b - 1)/b.  The
concatenation streams built by this package drive the symbol-1
statistic to infinity instead, which the trajectory measurements make
visible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Iterator

from .errors import SequenceExhaustedError, UndefinedStatisticError
from .stream import NumberSpec, StreamCursor, iter_blocks

__all__ = [
    "DigitCounter",
    "LilPoint",
    "Trajectory",
    "lil_bound",
    "lil_statistic",
    "discrepancy",
    "block_stream",
    "count_symbol_prefix",
    "counter_prefix",
    "prefix_counts_at_boundaries",
    "trajectory",
    "TRAJECTORY_CSV_HEADER",
]

MIN_STATISTIC_N = 16

TRAJECTORY_CSV_HEADER = "n,count,discrepancy_num,discrepancy_den,statistic"


def lil_bound(base: int) -> float:
    """The law-of-the-iterated-logarithm bound sqrt(b - 1)/b."""
    if base < 2:
        raise ValueError("base must be at least 2")
    return math.sqrt(base - 1) / base


def discrepancy(count: int, n: int, base: int) -> Fraction:
    """Exact excess of a symbol count over the fair share n/b."""
    if base < 2:
        raise ValueError("base must be at least 2")
    if n < 0 or count < 0:
        raise ValueError("counts must be nonnegative")
    return Fraction(base * count - n, base)


def lil_statistic(count: int, n: int, base: int) -> float:
    """Normalized discrepancy (count - n/b) / sqrt(2 n ln ln n).

    Defined for prefix lengths n >= 16, where ln ln n >= 1.  Shorter
    prefixes raise UndefinedStatisticError.
    """
    if n < MIN_STATISTIC_N:
        raise UndefinedStatisticError(
            f"statistic needs a prefix of at least {MIN_STATISTIC_N} digits, got {n}"
        )
    num = float(discrepancy(count, n, base))
    return num / math.sqrt(2 * n * math.log(math.log(n)))


class DigitCounter:
    """Counts of each base-b symbol over some set of stream positions.

    Counters over disjoint position sets merge by componentwise
    addition, which makes chunked counting associative and commutative.
    """

    __slots__ = ("base", "counts", "total")

    def __init__(self, base: int, counts: Iterable[int] | None = None):
        if base < 2:
            raise ValueError("base must be at least 2")
        self.base = base
        self.counts = [0] * base if counts is None else list(counts)
        if len(self.counts) != base or any(c < 0 for c in self.counts):
            raise ValueError("counts must be one nonnegative entry per symbol")
        self.total = sum(self.counts)

    def add(self, digit: int) -> None:
        """Record one occurrence of a symbol."""
        if not 0 <= digit < self.base:
            raise ValueError(f"digit {digit} out of range for base {self.base}")
        self.counts[digit] += 1
        self.total += 1

    def add_block(self, digits: Iterable[int], copies: int = 1) -> None:
        """Record every digit of a block, ``copies`` times over."""
        if copies < 0:
            raise ValueError("copies must be nonnegative")
        counts = self.counts
        base = self.base
        added = 0
        for d in digits:
            if not 0 <= d < base:
                raise ValueError(f"digit {d} out of range for base {base}")
            counts[d] += copies
            added += 1
        self.total += added * copies

    def merge(self, other: "DigitCounter") -> "DigitCounter":
        """Componentwise sum of two counters over the same base."""
        if self.base != other.base:
            raise ValueError(f"cannot merge counters of base {self.base} and {other.base}")
        return DigitCounter(self.base, [a + b for a, b in zip(self.counts, other.counts)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DigitCounter):
            return NotImplemented
        return self.base == other.base and self.counts == other.counts

    def __repr__(self) -> str:
        return f"DigitCounter(base={self.base}, counts={self.counts})"


def block_stream(cursor: StreamCursor, m: int) -> Iterator[int]:
    """View m-tuples of consecutive digits as single base b**m digits.

    Tuples are non-overlapping and aligned with the cursor's current
    position; a trailing partial tuple of a finite stream is dropped.
    With m = 1 this is the plain digit stream.
    """
    if m < 1:
        raise ValueError("block width must be at least 1")
    base = cursor.spec.base
    while True:
        value = 0
        for _ in range(m):
            try:
                value = value * base + cursor.next_digit()
            except SequenceExhaustedError:
                return
        yield value


def _partial_block_count(
    digits: tuple[int, ...], symbol: int, prefix_len: int
) -> int:
    """Occurrences of symbol among the first prefix_len digits of a
    block written over and over."""
    full, rem = divmod(prefix_len, len(digits))
    count = full * digits.count(symbol)
    if rem:
        count += digits[:rem].count(symbol)
    return count


def count_symbol_prefix(spec: NumberSpec, symbol: int, n: int) -> int:
    """Brute-force count of a symbol over the first n digits.

    Walks every block of the stream and counts occurrences directly;
    this is the measurement side that the closed forms are checked
    against.
    """
    if not 0 <= symbol < spec.base:
        raise ValueError(f"symbol {symbol} out of range for base {spec.base}")
    if n < 0:
        raise ValueError("prefix length must be nonnegative")
    if n == 0:
        return 0
    pos = 0
    count = 0
    for _, digits, reps in iter_blocks(spec):
        span = len(digits) * reps
        if pos + span >= n:
            count += _partial_block_count(digits, symbol, n - pos)
            return count
        count += digits.count(symbol) * reps
        pos += span
    raise SequenceExhaustedError(
        f"stream over {spec.canonical} ends before position {n}"
    )


def counter_prefix(spec: NumberSpec, n: int) -> DigitCounter:
    """Full symbol counter over the first n digits of the stream."""
    if n < 0:
        raise ValueError("prefix length must be nonnegative")
    counter = DigitCounter(spec.base)
    if n == 0:
        return counter
    pos = 0
    for _, digits, reps in iter_blocks(spec):
        length = len(digits)
        span = length * reps
        if pos + span >= n:
            full, rem = divmod(n - pos, length)
            if full:
                counter.add_block(digits, full)
            if rem:
                counter.add_block(digits[:rem], 1)
            return counter
        counter.add_block(digits, reps)
        pos += span
    raise SequenceExhaustedError(
        f"stream over {spec.canonical} ends before position {n}"
    )


def prefix_counts_at_boundaries(
    spec: NumberSpec, symbol: int, boundary_members: Iterable[int]
) -> list[tuple[int, int]]:
    """(position, symbol count) after all copies of all members <= m,
    for each boundary member m, in one pass over the stream.

    Boundary members must be increasing.  They need not themselves be
    members of the sequence.
    """
    boundaries = list(boundary_members)
    if any(b2 <= b1 for b1, b2 in zip(boundaries, boundaries[1:])):
        raise ValueError("boundary members must be strictly increasing")
    out: list[tuple[int, int]] = []
    pos = 0
    count = 0
    idx = 0
    if not boundaries:
        return out
    for member, digits, reps in iter_blocks(spec):
        while idx < len(boundaries) and member > boundaries[idx]:
            out.append((pos, count))
            idx += 1
        if idx == len(boundaries):
            return out
        pos += len(digits) * reps
        count += digits.count(symbol) * reps
    while idx < len(boundaries):
        out.append((pos, count))
        idx += 1
    return out


@dataclass(frozen=True)
class LilPoint:
    """One trajectory sample: exact counts plus the float statistic."""

    n: int
    count: int
    discrepancy: Fraction
    statistic: float


@dataclass(frozen=True)
class Trajectory:
    spec: NumberSpec
    symbol: int
    points: tuple[LilPoint, ...]

    def write_csv(self, out: IO[str]) -> None:
        """Write the trajectory as CSV with LF line endings."""
        out.write(TRAJECTORY_CSV_HEADER + "\n")
        for p in self.points:
            out.write(
                f"{p.n},{p.count},{p.discrepancy.numerator},"
                f"{p.discrepancy.denominator},{p.statistic!r}\n"
            )

    def write_csv_path(self, path: str) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            self.write_csv(fh)


def trajectory(
    spec: NumberSpec, symbol: int, checkpoints: Iterable[int]
) -> Trajectory:
    """Sample the statistic of one symbol at increasing prefix lengths.

    Runs a single pass over the stream; each checkpoint may fall in the
    middle of a block and is split exactly.  Checkpoints must be
    strictly increasing and at least 16, where the statistic exists.
    """
    if not 0 <= symbol < spec.base:
        raise ValueError(f"symbol {symbol} out of range for base {spec.base}")
    cps = list(checkpoints)
    if any(b <= a for a, b in zip(cps, cps[1:])):
        raise ValueError("checkpoints must be strictly increasing")
    if any(cp < MIN_STATISTIC_N for cp in cps):
        raise UndefinedStatisticError(
            f"checkpoints below {MIN_STATISTIC_N} have no statistic"
        )
    points: list[LilPoint] = []
    if not cps:
        return Trajectory(spec, symbol, ())
    pos = 0
    count = 0
    idx = 0
    for _, digits, reps in iter_blocks(spec):
        span = len(digits) * reps
        while idx < len(cps) and cps[idx] <= pos + span:
            n = cps[idx]
            c = count + _partial_block_count(digits, symbol, n - pos)
            points.append(LilPoint(n, c, discrepancy(c, n, spec.base), lil_statistic(c, n, spec.base)))
            idx += 1
        if idx == len(cps):
            return Trajectory(spec, symbol, tuple(points))
        count += digits.count(symbol) * reps
        pos += span
    raise SequenceExhaustedError(
        f"stream over {spec.canonical} ends before checkpoint {cps[idx]}"
    )
