"""Modular (a, b)-Fibonacci sequences, Pisano periods and Legendre statistics.

Everything here works on residues, so no value ever grows past the modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import kernels

MAX_MODULUS = 1 << 62

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class InitialPair:
    """Seeds ``F_0 = a`` and ``F_1 = b``. Negative seeds are allowed."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("initial pair (0, 0) is not allowed")

    def __iter__(self):
        return iter((self.a, self.b))

    def __str__(self):
        return f"({self.a}, {self.b})"

    def reduced(self, m: int) -> tuple[int, int]:
        return self.a % m, self.b % m


def as_pair(pair) -> InitialPair:
    if isinstance(pair, InitialPair):
        return pair
    a, b = pair
    return InitialPair(int(a), int(b))


@dataclass(frozen=True)
class LambdaPartition:
    """Indices of one period split by the Legendre value of ``F_i mod p``."""

    p: int
    pair: InitialPair
    period: int
    members_minus: frozenset
    members_zero: frozenset
    members_plus: frozenset

    @property
    def counts(self) -> tuple[int, int, int]:
        """``(|minus|, |zero|, |plus|)``."""
        return len(self.members_minus), len(self.members_zero), len(self.members_plus)

    def legendre_row(self) -> list[int]:
        row = [0] * self.period
        for i in self.members_minus:
            row[i] = -1
        for i in self.members_plus:
            row[i] = 1
        return row


@dataclass(frozen=True)
class PLRecord:
    """Classification of an odd prime relative to a seed pair."""

    p: int
    pair: InitialPair
    period: int
    l_minus: int
    l_zero: int
    l_plus: int

    @property
    def k(self) -> int:
        return self.l_plus - self.l_minus - self.l_zero

    @property
    def counts(self) -> tuple[int, int, int]:
        return self.l_minus, self.l_zero, self.l_plus

    def check(self) -> None:
        """Raise ``ValueError`` if the record's counts are inconsistent."""
        if min(self.counts) < 0 or sum(self.counts) != self.period:
            raise ValueError(f"counts {self.counts} do not sum to period {self.period}")
        if 2 * self.l_plus != self.period + self.k:
            raise ValueError("2*|plus| != period + k")


def is_prime(n: int) -> bool:
    """Deterministic primality for ``n < 2**64`` (Miller-Rabin, fixed bases)."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    if n >= 1 << 64:
        raise ValueError("is_prime is only deterministic below 2**64")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # these twelve bases are exact for every n < 3.3e24
    for base in _SMALL_PRIMES:
        x = pow(base, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p={p} is not an odd prime")


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol ``(a/p)`` by Euler's criterion.

    ``p`` must be an odd prime; only the parity and size are checked here.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"Legendre symbol needs an odd prime modulus, got {p}")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def iter_fib_mod(pair, m: int, count: int | None = None) -> Iterator[int]:
    """Yield ``F_0, F_1, ... mod m``.

    With ``count=None`` exactly one period is produced.
    """
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    x, y = as_pair(pair).reduced(m)
    if count is None:
        count = pisano_period(pair, m) if m >= 2 else 1
    for _ in range(count):
        yield x
        x, y = y, (x + y) % m


def fib_mod(n: int, pair, m: int) -> int:
    """``F_n mod m`` by forward iteration."""
    if n < 0:
        raise ValueError("index must be non-negative")
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    x, y = as_pair(pair).reduced(m)
    for _ in range(n):
        x, y = y, (x + y) % m
    return x


def fib_values(pair, count: int) -> list[int]:
    """The first ``count`` raw sequence values (small tables only)."""
    x, y = as_pair(pair)
    out = []
    for _ in range(count):
        out.append(x)
        x, y = y, x + y
    return out


def pisano_period(pair, m: int) -> int:
    """Least ``k >= 1`` with ``F_{n+k} = F_n (mod m)`` for every ``n``.

    The state map (x, y) -> (y, x + y) is invertible mod m, so the orbit of the
    initial state is a pure cycle and its length is the period.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if m >= MAX_MODULUS:
        raise ValueError("modulus must be < 2**62")
    a, b = as_pair(pair)
    cap = min(m * m, (1 << 63) - 1)
    return kernels.orbit_period(a, b, m, cap)


def lambda_partition(p: int, pair) -> LambdaPartition:
    """Split ``{0, ..., period-1}`` by ``legendre_symbol(F_i, p)``."""
    pair = as_pair(pair)
    buckets = {-1: set(), 0: set(), 1: set()}
    period = 0
    for i, f in enumerate(iter_fib_mod(pair, p)):
        buckets[legendre_symbol(f, p)].add(i)
        period += 1
    return LambdaPartition(
        p=p,
        pair=pair,
        period=period,
        members_minus=frozenset(buckets[-1]),
        members_zero=frozenset(buckets[0]),
        members_plus=frozenset(buckets[1]),
    )


def classify(p: int, pair) -> PLRecord:
    """Classify the odd prime ``p``: period, Legendre counts and ``k``."""
    _require_odd_prime(p)
    pair = as_pair(pair)
    if p < 1 << 31:
        period, minus, zero, plus = kernels.orbit_counts(pair.a, pair.b, p)
    else:
        minus, zero, plus = lambda_partition(p, pair).counts
        period = minus + zero + plus
    return PLRecord(p=p, pair=pair, period=period, l_minus=minus, l_zero=zero, l_plus=plus)


def order_of_apparition(p: int) -> int:
    """Least ``n >= 1`` with classical ``F_n = 0 (mod p)``."""
    _require_odd_prime(p)
    x, y, n = 1, 1, 1
    while x != 0:
        x, y = y, (x + y) % p
        n += 1
    return n
