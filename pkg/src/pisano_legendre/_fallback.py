"""Pure-Python versions of the compiled kernels in ``_kernels.pyx``."""

from itertools import permutations


def orbit_counts(a, b, p):
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    chi = [-1] * p
    chi[0] = 0
    for i in range(1, (p - 1) // 2 + 1):
        chi[i * i % p] = 1
    x0 = x = a % p
    y0 = y = b % p
    cap = p * p
    counts = [0, 0, 0]
    n = 0
    while True:
        counts[chi[x] + 1] += 1
        t = x + y
        if t >= p:
            t -= p
        x, y = y, t
        n += 1
        if x == x0 and y == y0:
            break
        if n >= cap:
            raise RuntimeError(f"no recurrence within {cap} steps mod {p}")
    return n, counts[0], counts[1], counts[2]


def orbit_period(a, b, m, cap):
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    x0 = x = a % m
    y0 = y = b % m
    n = 0
    while True:
        t = x + y
        if t >= m:
            t -= m
        x, y = y, t
        n += 1
        if x == x0 and y == y0:
            return n
        if n >= cap:
            raise RuntimeError(f"no recurrence within {cap} steps mod {m}")


def first_cordial(n, us, vs, table, prefix=-1):
    if n == 0:
        return () if prefix < 0 else None
    if prefix >= n:
        raise ValueError("prefix out of range")
    m = len(us)
    edges = list(zip(us, vs))
    if prefix >= 0:
        rest = [i for i in range(n) if i != prefix]
        candidates = ((prefix,) + tail for tail in permutations(rest))
    else:
        candidates = permutations(range(n))
    for perm in candidates:
        e1 = 0
        for u, v in edges:
            e1 += table[perm[u] * n + perm[v]]
        if -1 <= m - 2 * e1 <= 1:
            return perm
    return None
