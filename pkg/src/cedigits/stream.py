"""Digit streams of concatenation numbers.

A NumberSpec fixes a strictly increasing integer sequence, a base b >= 2,
and an exact rational multiplier c >= 1.  The associated real number is
built by writing the base-b expansion of each member in order, repeating
the block of every member a with floor(c ** digit_length(a)) copies.
With c = 1 and the naturals this is the classical Champernowne
construction; with the primes it is the Copeland-Erdos construction.

Digit positions are 1-indexed.  A StreamCursor walks the digits, can
jump forward by whole blocks rather than digit by digit, and serializes
to a one-line checkpoint that restores the exact stream state.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import SequenceExhaustedError
from .rational import floor_power, format_rational, parse_rational
from .sequences import SequenceSpec, parse_sequence

__all__ = [
    "NumberSpec",
    "StreamCursor",
    "open_stream",
    "to_digits",
    "digit_length",
    "repetitions",
    "iter_blocks",
    "parse_number_spec",
    "save_checkpoint",
    "load_checkpoint",
]


def to_digits(n: int, base: int) -> tuple[int, ...]:
    """Base-b digit tuple of a positive integer, most significant first."""
    if base < 2:
        raise ValueError("base must be at least 2")
    if n < 1:
        raise ValueError("digit expansion is defined for positive integers")
    out = []
    while n:
        n, r = divmod(n, base)
        out.append(r)
    out.reverse()
    return tuple(out)


def digit_length(n: int, base: int) -> int:
    """Number of base-b digits of a positive integer."""
    if base < 2:
        raise ValueError("base must be at least 2")
    if n < 1:
        raise ValueError("digit length is defined for positive integers")
    length = 0
    while n:
        n //= base
        length += 1
    return length


def repetitions(n: int, base: int, c: Fraction) -> int:
    """How many times the block of n is written: floor(c ** len)."""
    return floor_power(c, digit_length(n, base))


@dataclass(frozen=True)
class NumberSpec:
    """A concatenation number: sequence, base, and repetition multiplier."""

    sequence: SequenceSpec
    base: int
    multiplier: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "multiplier", Fraction(self.multiplier))
        if self.base < 2:
            raise ValueError("base must be at least 2")
        if self.multiplier < 1:
            raise ValueError("multiplier must be at least 1")

    @property
    def canonical(self) -> str:
        return (
            f"{self.sequence.canonical}"
            f"|b={self.base}"
            f"|c={format_rational(self.multiplier)}"
        )

    def __str__(self) -> str:
        return self.canonical


def parse_number_spec(text: str) -> NumberSpec:
    """Inverse of NumberSpec.canonical."""
    parts = text.strip().split("|")
    if len(parts) != 3 or not parts[1].startswith("b=") or not parts[2].startswith("c="):
        raise ValueError(f"bad number spec: {text!r}")
    seq = parse_sequence(parts[0])
    try:
        base = int(parts[1][2:])
    except ValueError as exc:
        raise ValueError(f"bad base in number spec: {text!r}") from exc
    c = parse_rational(parts[2][2:])
    return NumberSpec(seq, base, c)


def iter_blocks(spec: NumberSpec, after: int = 0) -> Iterator[tuple[int, tuple[int, ...], int]]:
    """Yield (member, digits, copies) for members greater than ``after``.

    This is the bulk view of the stream: each yielded block stands for
    ``copies`` consecutive writes of ``digits``.  Repetition counts only
    depend on the digit length, so they are cached per length.
    """
    base = spec.base
    c = spec.multiplier
    reps_by_len: dict[int, int] = {}
    for m in spec.sequence.members(after):
        digits = to_digits(m, base)
        length = len(digits)
        reps = reps_by_len.get(length)
        if reps is None:
            reps = floor_power(c, length)
            reps_by_len[length] = reps
        yield m, digits, reps


@dataclass
class StreamCursor:
    """Forward-only cursor over the digits of a NumberSpec.

    ``position`` is the count of digits already emitted, so the next
    digit read is at 1-indexed position ``position + 1``.  The cursor
    state between reads is (current integer, repetition index, offset of
    the next digit inside the current copy); the offset may momentarily
    equal the block length, meaning the copy is finished and the cursor
    will move on at the next read.
    """

    spec: NumberSpec
    position: int = 0
    integer: int = 0
    rep: int = 0
    offset: int = 0
    _digits: tuple[int, ...] = field(default=(), repr=False)
    _reps: int = field(default=0, repr=False)
    _members: Iterator[int] | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if self.integer > 0:
            self._digits = to_digits(self.integer, self.spec.base)
            self._reps = repetitions(self.integer, self.spec.base, self.spec.multiplier)
            if not 0 <= self.rep < self._reps:
                raise ValueError("repetition index out of range")
            if not 0 <= self.offset <= len(self._digits):
                raise ValueError("digit offset out of range")

    def _blocks(self) -> Iterator[tuple[int, tuple[int, ...], int]]:
        if self._members is None:
            self._members = iter_blocks(self.spec, self.integer)
        return self._members

    def _advance_block(self) -> None:
        """Move to the next copy, or to the next member's first copy."""
        if self.integer > 0 and self.rep + 1 < self._reps:
            self.rep += 1
            self.offset = 0
            return
        try:
            self.integer, self._digits, self._reps = next(self._blocks())
        except StopIteration:
            raise SequenceExhaustedError(
                f"stream over {self.spec.canonical} ended at position {self.position}"
            ) from None
        self.rep = 0
        self.offset = 0

    def next_digit(self) -> int:
        """Emit the digit at position + 1 and advance."""
        while self.integer == 0 or self.offset >= len(self._digits):
            self._advance_block()
        digit = self._digits[self.offset]
        self.offset += 1
        self.position += 1
        return digit

    def read(self, n: int) -> list[int]:
        """Emit the next n digits as a list.

        Equivalent to n calls of next_digit, but copies whole blocks.
        """
        if n < 0:
            raise ValueError("cannot read a negative number of digits")
        out: list[int] = []
        while len(out) < n:
            if self.integer == 0 or self.offset >= len(self._digits):
                self._advance_block()
                continue
            digits = self._digits
            length = len(digits)
            need = n - len(out)
            avail = length - self.offset
            if need < avail:
                out.extend(digits[self.offset : self.offset + need])
                self.offset += need
                self.position += need
                break
            out.extend(digits[self.offset :])
            self.offset = length
            self.position += avail
            # whole further copies of the same block
            copies = min(self._reps - self.rep - 1, (n - len(out)) // length)
            if copies > 0:
                out.extend(digits * copies)
                self.rep += copies
                self.position += copies * length
        return out

    def digits(self) -> Iterator[int]:
        """Iterate digits until the sequence (if finite) runs out."""
        while True:
            try:
                yield self.next_digit()
            except SequenceExhaustedError:
                return

    def skip_to(self, n: int) -> None:
        """Advance so the next digit emitted is at position n + 1.

        Jumps whole blocks and whole repetitions; no digit is produced.

        Raises:
            ValueError: when n is behind the current position.
            SequenceExhaustedError: when a finite stream ends first.
        """
        if n < self.position:
            raise ValueError(f"cannot skip backwards from {self.position} to {n}")
        while self.position < n:
            if self.integer == 0 or self.offset >= len(self._digits):
                self._advance_block()
                continue
            length = len(self._digits)
            remaining = n - self.position
            avail = length - self.offset
            if remaining < avail:
                self.offset += remaining
                self.position = n
                return
            self.offset = length
            self.position += avail
            remaining = n - self.position
            copies = min(self._reps - self.rep - 1, remaining // length)
            if copies > 0:
                self.rep += copies
                self.position += copies * length
                remaining -= copies * length
            if 0 < remaining < length and self.rep + 1 < self._reps:
                self.rep += 1
                self.offset = remaining
                self.position = n
                return

    def checkpoint(self) -> str:
        """One-line serialization of the cursor state."""
        return (
            f"position={self.position} integer={self.integer} "
            f"rep={self.rep} offset={self.offset} spec={self.spec.canonical}"
        )

    @classmethod
    def from_checkpoint(cls, line: str) -> "StreamCursor":
        fields = line.strip().split(" ")
        keys = ("position", "integer", "rep", "offset", "spec")
        if len(fields) != 5 or any(
            not f.startswith(k + "=") for f, k in zip(fields, keys)
        ):
            raise ValueError(f"malformed checkpoint line: {line!r}")
        values = [f.split("=", 1)[1] for f in fields]
        spec = parse_number_spec(values[4])
        try:
            position, integer, rep, offset = (int(v) for v in values[:4])
        except ValueError as exc:
            raise ValueError(f"malformed checkpoint line: {line!r}") from exc
        if position < 0 or integer < 0:
            raise ValueError(f"malformed checkpoint line: {line!r}")
        return cls(spec, position, integer, rep, offset)


def open_stream(spec: NumberSpec) -> StreamCursor:
    """Fresh cursor at position 0."""
    return StreamCursor(spec)


def save_checkpoint(cursor: StreamCursor, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(cursor.checkpoint() + "\n")


def load_checkpoint(path: str) -> StreamCursor:
    with open(path, "r", encoding="utf-8") as fh:
        return StreamCursor.from_checkpoint(fh.readline())
