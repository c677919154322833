"""Bounded scans over odd primes.

``zeta`` finds the least k-PL prime, ``theta_prefix`` lists k-PL primes in
order and ``omega_series`` counts them up to ``n``. Every scan is bounded: an
empty result means "no witness up to the bound", never that ``k`` cannot occur.

Work is sharded over a process pool when ``workers > 1``. Shards are merged in
prime order, so results do not depend on the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Decimal

from . import kernels
from .numtheory import InitialPair, PLRecord, as_pair

DEFAULT_BOUND = 20000
_BLOCK = 512


@dataclass(frozen=True)
class ZetaEntry:
    k: int
    prime: int
    bound: int


@dataclass(frozen=True)
class SurveyCounts:
    pair: InitialPair
    k: int
    points: tuple  # ((n, count), ...)


def odd_primes_upto(bound: int) -> list[int]:
    """Odd primes ``<= bound`` in ascending order (sieve of Eratosthenes)."""
    if bound < 3:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    i = 2
    while i * i <= bound:
        if sieve[i]:
            sieve[i * i::i] = bytes(len(range(i * i, bound + 1, i)))
        i += 1
    return [n for n in range(3, bound + 1, 2) if sieve[n]]


def _classify_chunk(args):
    a, b, primes = args
    return [kernels.orbit_counts(a, b, p) for p in primes]


def classify_primes(primes, pair, workers: int = 1, cache=None) -> list[PLRecord]:
    """Classify each prime in ``primes`` (kept in the given order)."""
    pair = as_pair(pair)
    primes = list(primes)
    out: list = [None] * len(primes)
    todo = []
    for idx, p in enumerate(primes):
        hit = cache.get(pair, p) if cache is not None else None
        if hit is not None:
            out[idx] = hit
        else:
            todo.append(idx)
    if todo:
        todo_primes = [primes[i] for i in todo]
        if workers <= 1 or len(todo_primes) < 2 * workers:
            results = _classify_chunk((pair.a, pair.b, todo_primes))
        else:
            step = -(-len(todo_primes) // (4 * workers))
            chunks = [
                (pair.a, pair.b, todo_primes[i:i + step])
                for i in range(0, len(todo_primes), step)
            ]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = [r for part in pool.map(_classify_chunk, chunks) for r in part]
        for idx, (period, minus, zero, plus) in zip(todo, results):
            rec = PLRecord(primes[idx], pair, period, minus, zero, plus)
            out[idx] = rec
            if cache is not None:
                cache.put(rec)
        if cache is not None:
            cache.flush()
    return out


def classify_upto(pair, bound: int, workers: int = 1, cache=None) -> list[PLRecord]:
    return classify_primes(odd_primes_upto(bound), pair, workers, cache)


def zeta(pair, k: int, bound: int = DEFAULT_BOUND, workers: int = 1, cache=None):
    """Least odd prime ``<= bound`` that is k-PL relative to ``pair``, or None."""
    if bound < 3:
        raise ValueError("bound must be >= 3")
    pair = as_pair(pair)
    primes = odd_primes_upto(bound)
    block = _BLOCK * max(1, workers)
    for start in range(0, len(primes), block):
        for rec in classify_primes(primes[start:start + block], pair, workers, cache):
            if rec.k == k:
                return ZetaEntry(k, rec.p, bound)
    return None


def zeta_table(pair, k_min=None, k_max=None, bound: int = DEFAULT_BOUND,
               workers: int = 1, cache=None) -> list[ZetaEntry]:
    """Least witness for every ``k`` in ``[k_min, k_max]`` found up to ``bound``.

    ``None`` for either end leaves that side open. Entries are sorted by ``k``.
    """
    first: dict[int, int] = {}
    for rec in classify_upto(pair, bound, workers, cache):
        if rec.k not in first:
            first[rec.k] = rec.p
    return [
        ZetaEntry(k, first[k], bound)
        for k in sorted(first)
        if (k_min is None or k >= k_min) and (k_max is None or k <= k_max)
    ]


def theta_prefix(pair, k: int, count: int, bound: int = DEFAULT_BOUND,
                 workers: int = 1, cache=None) -> list[int]:
    """First ``count`` k-PL primes up to ``bound`` (possibly fewer)."""
    out = []
    if count <= 0:
        return out
    for rec in classify_upto(pair, bound, workers, cache):
        if rec.k == k:
            out.append(rec.p)
            if len(out) == count:
                break
    return out


def omega_series(pair, k: int, n_max: int, step: int, workers: int = 1,
                 cache=None) -> SurveyCounts:
    """Number of k-PL primes ``<= n`` for ``n = step, 2*step, ..`` up to ``n_max``.

    ``n_max`` itself is always the last point.
    """
    if step < 1:
        raise ValueError("step must be positive")
    pair = as_pair(pair)
    hits = [rec.p for rec in classify_upto(pair, n_max, workers, cache) if rec.k == k]
    marks = list(range(step, n_max + 1, step))
    if not marks or marks[-1] != n_max:
        marks.append(n_max)
    points, i = [], 0
    for n in marks:
        while i < len(hits) and hits[i] <= n:
            i += 1
        points.append((n, i))
    return SurveyCounts(pair, k, tuple(points))


def _decimal(c) -> Decimal:
    return c if isinstance(c, Decimal) else Decimal(str(c))


def reference_value(c, k: int) -> Decimal:
    """``c * k**2`` computed exactly in decimal."""
    return _decimal(c) * k * k


def reference_curve(c, k_values) -> list[tuple[int, float]]:
    d = _decimal(c)
    if not (0 < d < 1):
        raise ValueError(f"c must lie in (0, 1), got {c}")
    return [(k, float(reference_value(d, k))) for k in k_values]


def above_curve(entry: ZetaEntry, c) -> bool:
    """True when ``entry.prime > c * k**2``."""
    return Decimal(entry.prime) > reference_value(c, entry.k)
