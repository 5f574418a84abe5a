"""Exact modular and prime arithmetic used by every other module.

Everything here is pure integer arithmetic: no floats, no probabilistic
answers in the supported range.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from math import gcd, isqrt


def reduce_mod(x: int, y: int) -> int:
    """Least nonnegative residue of x mod y; defined for negative x too."""
    if y <= 0:
        raise ValueError("modulus must be positive")
    return x % y


def mod_inverse(a: int, n: int) -> int:
    """Multiplicative inverse of a mod n, in [1, n)."""
    if n <= 0:
        raise ValueError("modulus must be positive")
    if gcd(a, n) != 1:
        raise ValueError("%d is not a unit mod %d" % (a, n))
    return pow(a, -1, n)


def units(n: int) -> list[int]:
    """All residues u in [1, n) with gcd(u, n) = 1, ascending."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    return [u for u in range(1, n) if gcd(u, n) == 1]


def factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorization of m >= 2 as (prime, exponent) pairs, trial division."""
    if m < 2:
        raise ValueError("need m >= 2")
    out = []
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
    f = 5
    while f * f <= m:
        if m % f == 0:
            e = 0
            while m % f == 0:
                m //= f
                e += 1
            out.append((f, e))
        f += 2 if f % 6 == 5 else 4  # 6k±1 wheel
    if m > 1:
        out.append((m, 1))
    return out


def euler_phi(n: int) -> int:
    """Count of units mod n."""
    if n == 1:
        return 1
    phi = n
    for p, _ in factorize(n):
        phi -= phi // p
    return phi


def distinct_prime_factor_count(m: int) -> int:
    return len(factorize(m))


# Strong-pseudoprime bases making Miller-Rabin deterministic well past 2^64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic primality for all m < 3.3e24 (covers the 2^63 range)."""
    if m < 0:
        raise ValueError("need m >= 0")
    if m < 2:
        return False
    for p in _MR_BASES:
        if m % p == 0:
            return m == p
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def sieve_flags(limit: int) -> bytearray:
    """Byte flags for [0, limit]: flags[i] == 1 iff i is prime."""
    if limit < 0:
        raise ValueError("need limit >= 0")
    flags = bytearray(b"\x01") * (limit + 1)
    for i in range(min(2, limit + 1)):
        flags[i] = 0
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray((limit - i * i) // i + 1)
    return flags


def primes_up_to(limit: int) -> list[int]:
    flags = sieve_flags(limit)
    return [i for i in range(2, limit + 1) if flags[i]]


def prime_in_bertrand(n_val: int) -> int | None:
    """Smallest prime strictly between 2N and 3N (guaranteed for N >= 2)."""
    if n_val < 2:
        raise ValueError("need N >= 2")
    for m in range(2 * n_val + 1, 3 * n_val):
        if is_prime(m):
            return m
    return None


def prime_in_half_open(n_val: int) -> int | None:
    """Smallest prime p with N+1 <= p < 3(N+1)/2 (guaranteed for N >= 2)."""
    if n_val < 2:
        raise ValueError("need N >= 2")
    m = n_val + 1
    while 2 * m < 3 * (n_val + 1):
        if is_prime(m):
            return m
        m += 1
    return None


def check_prime_intervals(max_n: int) -> list[tuple[int, str]]:
    """Sieve-backed sweep of both prime-interval facts for 2 <= N <= max_n.

    Returns the list of (N, interval-name) failures; expected empty.
    """
    if max_n < 2:
        raise ValueError("need max_n >= 2")
    ps = primes_up_to(3 * max_n + 3)
    failures = []
    for n_val in range(2, max_n + 1):
        i = bisect_right(ps, 2 * n_val)
        if i >= len(ps) or ps[i] >= 3 * n_val:
            failures.append((n_val, "open(2N,3N)"))
        j = bisect_left(ps, n_val + 1)
        if j >= len(ps) or 2 * ps[j] >= 3 * (n_val + 1):
            failures.append((n_val, "half_open[N+1,3(N+1)/2)"))
    return failures


def distinct_factor_counts(limit: int) -> bytearray:
    """omega(m) for every m in [0, limit], by a sieve over primes."""
    counts = bytearray(limit + 1)
    flags = sieve_flags(limit)
    for p in range(2, limit + 1):
        if flags[p]:
            for m in range(p, limit + 1, p):
                counts[m] += 1
    return counts


@dataclass(frozen=True)
class GroupContext:
    """The cyclic group Z/n with cached derived facts."""

    n: int
    coprime6: bool
    unit_count: int

    @classmethod
    def create(cls, n: int) -> "GroupContext":
        if n < 5:
            raise ValueError("modulus must be at least 5")
        return cls(n=n, coprime6=(n % 2 != 0 and n % 3 != 0), unit_count=euler_phi(n))
