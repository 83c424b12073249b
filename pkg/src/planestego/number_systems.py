"""Integer numeral systems used as bit-plane decompositions.

Four weight sequences are supported: powers of two (plain binary), a
generalized Fibonacci sequence with Zeckendorf-style validity, the primes
prefixed by 1, and the natural numbers. A pixel value is written as a 0/1
digit string over the first n weights, where n is the smallest count that
lets every value in [0, 2^k - 1] be represented. Among all subsets of
weights summing to a value (and passing the gap rule for Fibonacci), the
canonical choice is the lexicographically greatest digit string read from
the most significant plane down, which a largest-weight-first greedy pass
realizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

MAX_BITDEPTH = 16


class SchemeKind(Enum):
    BINARY = "binary"
    FIBONACCI = "fibonacci"
    PRIME = "prime"
    NATURAL = "natural"


@dataclass(frozen=True)
class WeightScheme:
    """A weight-sequence family, plus the Fibonacci order p where relevant."""

    kind: SchemeKind
    p: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.kind, SchemeKind):
            raise ValueError(f"unknown scheme kind: {self.kind!r}")
        if self.p < 1:
            raise ValueError(f"Fibonacci order must be >= 1, got {self.p}")
        if self.kind is not SchemeKind.FIBONACCI and self.p != 1:
            object.__setattr__(self, "p", 1)  # p is meaningless elsewhere


@dataclass(frozen=True)
class WeightTable:
    """The first n weights of a scheme, covering all k-bit values.

    weights[0] is the least significant plane; the sequence is strictly
    ascending.
    """

    scheme: WeightScheme
    k: int
    n: int
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.k <= MAX_BITDEPTH:
            raise ValueError(f"bit depth must be in [1, {MAX_BITDEPTH}], got {self.k}")
        if self.n != len(self.weights) or self.n < 1:
            raise ValueError("plane count does not match weight list")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")
        if any(a >= b for a, b in zip(self.weights, self.weights[1:])):
            raise ValueError("weights must be strictly ascending")

    @property
    def max_value(self) -> int:
        return (1 << self.k) - 1


@dataclass(frozen=True)
class DigitVector:
    """One 0/1 digit per plane, index-aligned with a table's weights."""

    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(d not in (0, 1) for d in self.digits):
            raise ValueError("digits must be 0 or 1")

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, i: int) -> int:
        return self.digits[i]

    def with_digit(self, i: int, bit: int) -> "DigitVector":
        return DigitVector(self.digits[:i] + (bit,) + self.digits[i + 1 :])


def _first_primes(count: int) -> list[int]:
    """The first `count` primes by trial division (count stays small)."""
    primes: list[int] = []
    candidate = 2
    while len(primes) < count:
        if all(candidate % p for p in primes if p * p <= candidate):
            primes.append(candidate)
        candidate += 1
    return primes


def generate_weights(scheme: WeightScheme, n: int) -> tuple[int, ...]:
    """First n weights of the scheme, ascending."""
    if n < 1:
        raise ValueError("need at least one weight")
    kind = scheme.kind
    if kind is SchemeKind.BINARY:
        return tuple(1 << i for i in range(n))
    if kind is SchemeKind.NATURAL:
        return tuple(i + 1 for i in range(n))
    if kind is SchemeKind.PRIME:
        return (1, *_first_primes(n - 1))
    # Fibonacci order p: start 1, 2, ..., p+1, then each term is the sum of
    # the previous one and the one p+1 places back. For p = 1 this is
    # 1, 2, 3, 5, 8, ... (the classic sequence with the duplicate leading 1
    # removed, which the Zeckendorf uniqueness argument needs).
    p = scheme.p
    weights: list[int] = []
    for i in range(n):
        weights.append(i + 1 if i <= p else weights[i - 1] + weights[i - p - 1])
    return tuple(weights)


def _gap(scheme: WeightScheme) -> int:
    """Minimum index distance between set digits (1 means unconstrained)."""
    return scheme.p + 1 if scheme.kind is SchemeKind.FIBONACCI else 1


def _greedy_covers(weights: tuple[int, ...], limit: int, gap: int) -> bool:
    """Whether greedy decomposition succeeds for every value in [0, limit].

    Runs the greedy pass on all values at once: scanning weights from the
    top, a value takes a weight whenever it still fits (and, under a gap
    constraint, the index is far enough below the last taken one).
    """
    remaining = np.arange(limit + 1, dtype=np.int64)
    if gap == 1:
        for w in reversed(weights):
            remaining -= w * (remaining >= w)
    else:
        allowed = np.full(limit + 1, len(weights) - 1, dtype=np.int64)
        for i in range(len(weights) - 1, -1, -1):
            take = (weights[i] <= remaining) & (i <= allowed)
            remaining = remaining - weights[i] * take
            allowed = np.where(take, i - gap, allowed)
    return not remaining.any()


def _seed_plane_count(scheme: WeightScheme, k: int) -> int:
    """Closed-form starting guess for the plane count search."""
    limit = (1 << k) - 1
    kind = scheme.kind
    if kind is SchemeKind.BINARY:
        return k
    if kind is SchemeKind.NATURAL:
        # positive root of the quadratic capacity bound
        return max(1, math.ceil((-1 + math.sqrt(2 ** (k + 3) + 9)) / 2))
    if kind is SchemeKind.PRIME:
        # total weight must reach the largest value
        n = 1
        while sum(generate_weights(scheme, n)) < limit:
            n += 1
        return n
    # Fibonacci: the best gap-valid subset of n weights must reach the limit
    gap = _gap(scheme)
    n = 1
    while True:
        weights = generate_weights(scheme, n)
        best = sum(weights[i] for i in range(n - 1, -1, -gap))
        if best >= limit:
            return n
        n += 1


def build_weight_table(scheme: WeightScheme, k: int) -> WeightTable:
    """Table with the smallest n whose first n weights cover [0, 2^k - 1].

    The closed-form guess seeds the search; an exhaustive coverage check
    over all 2^k values settles the actual minimum, walking down when the
    guess overshoots and up when it falls short.
    """
    if not 1 <= k <= MAX_BITDEPTH:
        raise ValueError(f"bit depth must be in [1, {MAX_BITDEPTH}], got {k}")
    limit = (1 << k) - 1
    gap = _gap(scheme)
    n = _seed_plane_count(scheme, k)
    if _greedy_covers(generate_weights(scheme, n), limit, gap):
        while n > 1 and _greedy_covers(generate_weights(scheme, n - 1), limit, gap):
            n -= 1
    else:
        while not _greedy_covers(generate_weights(scheme, n), limit, gap):
            if n > limit:
                raise ValueError(f"no covering weight table for {scheme} at k={k}")
            n += 1
    return WeightTable(scheme=scheme, k=k, n=n, weights=generate_weights(scheme, n))


def decompose(v: int, table: WeightTable) -> DigitVector:
    """Canonical digit string of v over the table (greedy, largest first)."""
    if not 0 <= v <= table.max_value:
        raise ValueError(f"value {v} outside [0, {table.max_value}]")
    digits = [0] * table.n
    gap = _gap(table.scheme)
    remaining = v
    allowed = table.n - 1
    for i in range(table.n - 1, -1, -1):
        if i > allowed:
            continue
        if table.weights[i] <= remaining:
            digits[i] = 1
            remaining -= table.weights[i]
            allowed = i - gap
        if not remaining:
            break
    if remaining:
        # unreachable for tables built by build_weight_table
        raise ValueError(f"value {v} has no canonical representation")
    return DigitVector(tuple(digits))


def compose(digits: DigitVector, table: WeightTable) -> int:
    """Weighted sum of the digit string; inverse of decompose."""
    if len(digits) != table.n:
        raise ValueError(f"expected {table.n} digits, got {len(digits)}")
    return sum(w for d, w in zip(digits.digits, table.weights) if d)


def zeckendorf_valid(digits: DigitVector, p: int = 1) -> bool:
    """True when no two set digits sit within index distance p."""
    if p < 1:
        raise ValueError(f"order must be >= 1, got {p}")
    previous = None
    for i, d in enumerate(digits.digits):
        if not d:
            continue
        if previous is not None and i - previous <= p:
            return False
        previous = i
    return True
