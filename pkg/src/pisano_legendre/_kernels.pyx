# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Same call signatures as ``_fallback``."""

from libc.stdlib cimport malloc, free


def orbit_counts(long long a, long long b, long long p):
    """Walk one period of the (a, b) sequence mod odd prime ``p``.

    Returns ``(period, n_minus, n_zero, n_plus)``: the period length and how
    many terms have Legendre value -1, 0 and 1.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    if p >= 2147483648:
        raise ValueError("compiled kernel requires p < 2**31")
    cdef signed char* chi = <signed char*> malloc(p)
    if chi == NULL:
        raise MemoryError()
    cdef long long i, x, y, x0, y0, t, n = 0
    cdef long long cap = p * p
    cdef long long counts[3]
    counts[0] = counts[1] = counts[2] = 0
    try:
        for i in range(p):
            chi[i] = -1
        chi[0] = 0
        for i in range(1, (p - 1) // 2 + 1):
            chi[(i * i) % p] = 1
        x = a % p
        if x < 0:
            x += p
        y = b % p
        if y < 0:
            y += p
        x0 = x
        y0 = y
        while True:
            counts[chi[x] + 1] += 1
            t = x + y
            if t >= p:
                t -= p
            x = y
            y = t
            n += 1
            if x == x0 and y == y0:
                break
            if n >= cap:
                raise RuntimeError(f"no recurrence within {cap} steps mod {p}")
    finally:
        free(chi)
    return n, counts[0], counts[1], counts[2]


def orbit_period(long long a, long long b, long long m, long long cap):
    """Length of the orbit of ``(a mod m, b mod m)`` under (x, y) -> (y, x + y)."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if m >= 4611686018427387904:
        raise ValueError("modulus must be < 2**62")
    cdef long long x = a % m
    cdef long long y = b % m
    if x < 0:
        x += m
    if y < 0:
        y += m
    cdef long long x0 = x, y0 = y, t, n = 0
    while True:
        t = x + y
        if t >= m:
            t -= m
        x = y
        y = t
        n += 1
        if x == x0 and y == y0:
            return n
        if n >= cap:
            raise RuntimeError(f"no recurrence within {cap} steps mod {m}")


def first_cordial(int n, us, vs, table, int prefix=-1):
    """First permutation (lexicographic) whose induced edge labels are balanced.

    ``table[x * n + y]`` is the 0/1 label of an edge whose endpoints carry
    labels ``x`` and ``y``. With ``prefix >= 0`` only permutations starting with
    that label are searched. Returns a tuple or ``None``.
    """
    cdef int m = len(us)
    cdef int i, j, k, e1, lo, tmp, start
    cdef int* perm
    cdef int* eu
    cdef int* ev
    cdef unsigned char* tab
    if n == 0:
        return () if prefix < 0 else None
    if prefix >= n:
        raise ValueError("prefix out of range")
    perm = <int*> malloc(n * sizeof(int))
    eu = <int*> malloc((m + 1) * sizeof(int))
    ev = <int*> malloc((m + 1) * sizeof(int))
    tab = <unsigned char*> malloc(n * n)
    if perm == NULL or eu == NULL or ev == NULL or tab == NULL:
        free(perm); free(eu); free(ev); free(tab)
        raise MemoryError()
    try:
        for i in range(m):
            eu[i] = us[i]
            ev[i] = vs[i]
        for i in range(n * n):
            tab[i] = table[i]
        if prefix >= 0:
            perm[0] = prefix
            k = 1
            for i in range(n):
                if i != prefix:
                    perm[k] = i
                    k += 1
            start = 1
        else:
            for i in range(n):
                perm[i] = i
            start = 0
        while True:
            e1 = 0
            for i in range(m):
                e1 += tab[perm[eu[i]] * n + perm[ev[i]]]
            if -1 <= m - 2 * e1 <= 1:
                return tuple([perm[i] for i in range(n)])
            # next permutation over perm[start:]
            i = n - 2
            while i >= start and perm[i] >= perm[i + 1]:
                i -= 1
            if i < start:
                return None
            j = n - 1
            while perm[j] <= perm[i]:
                j -= 1
            tmp = perm[i]; perm[i] = perm[j]; perm[j] = tmp
            lo = i + 1
            j = n - 1
            while lo < j:
                tmp = perm[lo]; perm[lo] = perm[j]; perm[j] = tmp
                lo += 1
                j -= 1
    finally:
        free(perm); free(eu); free(ev); free(tab)
