"""Strictly increasing integer sequences and their counting functions.

A sequence spec is an immutable description of a strictly increasing
sequence of positive integers: the naturals, the primes, the composites,
a polynomial image of the naturals or of the primes, an explicit finite
list, or the complement of another spec.  Specs know how to iterate
their members, test membership, and count members up to a bound, all
exactly.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterator

from .errors import CapExceededError, SequenceExhaustedError
from .primes import (
    DEFAULT_COUNTING_CAP,
    is_prime,
    iter_composites,
    iter_primes,
    prime_count,
)

__all__ = [
    "SequenceSpec",
    "Naturals",
    "Primes",
    "Composites",
    "Polynomial",
    "Explicit",
    "Complement",
    "parse_sequence",
    "DEFAULT_COUNTING_CAP",
]


class SequenceSpec(ABC):
    """Common surface of every sequence spec."""

    @abstractmethod
    def members(self, after: int = 0) -> Iterator[int]:
        """Iterate members strictly greater than ``after`` in order."""

    @abstractmethod
    def is_member(self, n: int) -> bool:
        """Exact membership test for a positive integer."""

    @abstractmethod
    def count(self, x: int, *, cap: int = DEFAULT_COUNTING_CAP) -> int:
        """Number of members <= x.

        Sieve-backed specs refuse queries whose sieve bound would exceed
        ``cap`` by raising CapExceededError; the result is never an
        approximation.
        """

    @property
    @abstractmethod
    def canonical(self) -> str:
        """The spec's canonical string form, accepted by parse_sequence."""

    def next_member(self, after: int) -> int:
        """Smallest member strictly greater than ``after``.

        Raises:
            SequenceExhaustedError: if the sequence is finite and has no
                member beyond ``after``.
        """
        try:
            return next(self.members(after))
        except StopIteration:
            raise SequenceExhaustedError(
                f"no member of {self.canonical} after {after}"
            ) from None

    def __str__(self) -> str:
        return self.canonical


@dataclass(frozen=True)
class Naturals(SequenceSpec):
    """All positive integers."""

    def members(self, after: int = 0) -> Iterator[int]:
        return itertools.count(max(after, 0) + 1)

    def is_member(self, n: int) -> bool:
        return n >= 1

    def count(self, x: int, *, cap: int = DEFAULT_COUNTING_CAP) -> int:
        return max(x, 0)

    @property
    def canonical(self) -> str:
        return "naturals"


@dataclass(frozen=True)
class Primes(SequenceSpec):
    def members(self, after: int = 0) -> Iterator[int]:
        return iter_primes(max(after + 1, 2))

    def is_member(self, n: int) -> bool:
        return n >= 2 and is_prime(n)

    def count(self, x: int, *, cap: int = DEFAULT_COUNTING_CAP) -> int:
        return prime_count(x, cap)

    @property
    def canonical(self) -> str:
        return "primes"


@dataclass(frozen=True)
class Composites(SequenceSpec):
    """Composite numbers 4, 6, 8, 9, ... The unit 1 is not a member."""

    def members(self, after: int = 0) -> Iterator[int]:
        return iter_composites(max(after + 1, 4))

    def is_member(self, n: int) -> bool:
        return n >= 4 and not is_prime(n)

    def count(self, x: int, *, cap: int = DEFAULT_COUNTING_CAP) -> int:
        if x < 4:
            return 0
        return x - prime_count(x, cap) - 1

    @property
    def canonical(self) -> str:
        return "composites"


@dataclass(frozen=True)
class Polynomial(SequenceSpec):
    """Values f(n) of a polynomial over the naturals or over the primes.

    Coefficients are in ascending degree order, must be nonnegative with
    a positive leading coefficient, and the degree must be at least one
    so that the values strictly increase.
    """

    coefficients: tuple[int, ...]
    argument: str = "naturals"

    def __post_init__(self) -> None:
        coeffs = tuple(self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) < 2:
            raise ValueError("polynomial must be non-constant (degree >= 1)")
        if any(c < 0 for c in coeffs):
            raise ValueError("polynomial coefficients must be nonnegative")
        if coeffs[-1] <= 0:
            raise ValueError("polynomial leading coefficient must be positive")
        if self.argument not in ("naturals", "primes"):
            raise ValueError(f"unknown polynomial argument {self.argument!r}")

    def value(self, n: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * n + c
        return acc

    def _largest_arg_leq(self, x: int) -> int:
        """Largest n >= 1 with f(n) <= x, or 0 when f(1) > x."""
        if self.value(1) > x:
            return 0
        hi = 1
        while self.value(hi * 2) <= x:
            hi *= 2
        lo = hi
        hi = hi * 2
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            if self.value(mid) <= x:
                lo = mid
            else:
                hi = mid
        return lo

    def members(self, after: int = 0) -> Iterator[int]:
        start = self._largest_arg_leq(after)
        if self.argument == "primes":
            return (self.value(p) for p in iter_primes(start + 1))
        return (self.value(n) for n in itertools.count(start + 1))

    def is_member(self, n: int) -> bool:
        if n < 1:
            return False
        arg = self._largest_arg_leq(n)
        if arg < 1 or self.value(arg) != n:
            return False
        if self.argument == "primes":
            return is_prime(arg)
        return True

    def count(self, x: int, *, cap: int = DEFAULT_COUNTING_CAP) -> int:
        arg = self._largest_arg_leq(x)
        if self.argument == "primes":
            return prime_count(arg, cap)
        return arg

    @property
    def canonical(self) -> str:
        head = "poly-primes" if self.argument == "primes" else "poly"
        return head + ":" + ",".join(str(c) for c in self.coefficients)


@dataclass(frozen=True)
class Explicit(SequenceSpec):
    """A finite, strictly increasing list of positive integers."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if any(v < 1 for v in vals):
            raise ValueError("explicit members must be positive")
        if any(b <= a for a, b in zip(vals, vals[1:])):
            raise ValueError("explicit members must be strictly increasing")

    def members(self, after: int = 0) -> Iterator[int]:
        return iter(self.values[bisect_right(self.values, after) :])

    def is_member(self, n: int) -> bool:
        i = bisect_left(self.values, n)
        return i < len(self.values) and self.values[i] == n

    def count(self, x: int, *, cap: int = DEFAULT_COUNTING_CAP) -> int:
        return bisect_right(self.values, x)

    @property
    def canonical(self) -> str:
        return "explicit:" + ",".join(str(v) for v in self.values)


@dataclass(frozen=True)
class Complement(SequenceSpec):
    """Positive integers that are not members of the inner spec.

    Enumeration walks the gaps of the inner member stream, so it makes
    progress only while the inner spec keeps skipping integers.  A
    double complement is unnested (its members are the original spec's
    members), but an inner spec that covers every sufficiently large
    integer without being written as a complement, such as the identity
    polynomial, leaves ``members`` scanning past its last gap forever.
    Membership and counting stay exact regardless.
    """

    inner: SequenceSpec

    def __post_init__(self) -> None:
        if isinstance(self.inner, Naturals):
            raise ValueError("complement of the naturals is empty")

    def members(self, after: int = 0) -> Iterator[int]:
        if isinstance(self.inner, Complement):
            return self.inner.inner.members(after)

        def gen() -> Iterator[int]:
            prev = max(after, 0)
            for s in self.inner.members(prev):
                yield from range(prev + 1, s)
                prev = s
            yield from itertools.count(prev + 1)

        return gen()

    def is_member(self, n: int) -> bool:
        return n >= 1 and not self.inner.is_member(n)

    def count(self, x: int, *, cap: int = DEFAULT_COUNTING_CAP) -> int:
        if x < 1:
            return 0
        return x - self.inner.count(x, cap=cap)

    @property
    def canonical(self) -> str:
        return "complement:" + self.inner.canonical


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    if text == "":
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad {what} list: {text!r}") from exc


def parse_sequence(text: str) -> SequenceSpec:
    """Parse a canonical sequence string.

    Accepted forms: ``naturals``, ``primes``, ``composites``,
    ``poly:3,0,1`` (coefficients in ascending degree),
    ``poly-primes:3,0,1``, ``explicit:2,5,9``, and ``complement:<spec>``
    which nests any of the others.
    """
    text = text.strip()
    if text == "naturals":
        return Naturals()
    if text == "primes":
        return Primes()
    if text == "composites":
        return Composites()
    if text.startswith("poly:"):
        return Polynomial(_parse_int_list(text[5:], "coefficient"), "naturals")
    if text.startswith("poly-primes:"):
        return Polynomial(_parse_int_list(text[12:], "coefficient"), "primes")
    if text.startswith("explicit:"):
        return Explicit(_parse_int_list(text[9:], "member"))
    if text.startswith("complement:"):
        return Complement(parse_sequence(text[11:]))
    raise ValueError(f"unknown sequence spec: {text!r}")
