"""Singular sequences: the good-k machinery, descent bounds, the two
explicit forms, the successor reduction, and exhaustive verification that
every singular sequence has index 1.

All interval comparisons (n/6, n/8, n/12, (n-1)/2, n/2) are done with
cross-multiplied integer inequalities; no floats anywhere.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from itertools import permutations
from math import gcd
from multiprocessing import Pool

from .modarith import GroupContext, mod_inverse, units
from .zseq import (
    ZsSeq,
    count_large_residues,
    has_unit_norm,
    index_with_witness,
    is_minimal_zero_sum,
    new_seq,
)


@dataclass(frozen=True)
class GoodKReport:
    """Evaluation of the three good-k conditions for one candidate k."""

    n: int
    k: int
    is_pow2: bool
    below_sixth: bool
    f_k: int
    F_k: int
    good: bool


@dataclass(frozen=True)
class DescentParams:
    """The power-of-two descent data for a modulus n > 24.

    b is the unique exponent with 3*2^b < n < 3*2^(b+1); the chain holds
    the successive lower bounds f(2), f(4), ..., f(2^(b-1)).
    """

    n: int
    b: int
    k_star: int
    chain: tuple[int, ...]
    final_bound: int


@dataclass(frozen=True)
class SingularReport:
    """Outcome of exhaustively checking all singular sequences over Z/n."""

    n: int
    checked: int
    violations: tuple


def f_val(k: int, n: int) -> int:
    """floor((3k-1) * n / (3k)) in exact integer arithmetic."""
    if k < 1 or n < 5:
        raise ValueError("need k >= 1 and n >= 5")
    return (3 * k - 1) * n // (3 * k)


def good_report(k: int, n: int) -> GoodKReport:
    """Evaluate the good-k conditions: power of two, below n/6, and
    F(k) = (2n - 2 - 2 f(k)) k exceeding (n-1)/2."""
    is_pow2 = k >= 1 and k & (k - 1) == 0
    below_sixth = 6 * k < n
    fk = f_val(k, n)
    Fk = (2 * n - 2 - 2 * fk) * k
    good = is_pow2 and below_sixth and 2 * Fk > n - 1
    return GoodKReport(
        n=n, k=k, is_pow2=is_pow2, below_sixth=below_sixth, f_k=fk, F_k=Fk, good=good
    )


def descent_params(n: int) -> DescentParams:
    """Compute b, k* = 2^(b-2), and the descent chain of x2 lower bounds.

    Also checks that 2^t is good for every t in [0, b-2]; a failure there
    is an implementation fault, not a property of n.
    """
    if gcd(n, 6) != 1:
        raise ValueError("n must be coprime to 6")
    if n <= 24:
        raise ValueError("need n > 24")
    b = 0
    while 3 * 2 ** (b + 1) < n:
        b += 1
    if not 3 * 2**b < n < 3 * 2 ** (b + 1):
        raise RuntimeError("no valid exponent b for n=%d" % n)
    for t in range(b - 1):
        if not good_report(2**t, n).good:
            raise RuntimeError("k=2^%d unexpectedly not good for n=%d" % (t, n))
    chain = tuple(f_val(2**t, n) for t in range(1, b))
    return DescentParams(n=n, b=b, k_star=2 ** (b - 2), chain=chain, final_bound=chain[-1])


def is_singular(seq: ZsSeq) -> bool:
    """Length-4 minimal zero-sum with unit elements, admitting an ordering
    (1, x2, x3, x4) with x2 + 1 = x3 or x2 = n - 2."""
    if len(seq.elems) != 4:
        raise ValueError("singularity is defined for length-4 sequences")
    n = seq.ctx.n
    if n % 2 == 0 or n % 3 == 0:
        return False
    if any(gcd(x, n) != 1 for x in seq.elems):
        return False
    if 1 not in seq.elems:
        return False
    if not is_minimal_zero_sum(seq):
        return False
    rest = list(seq.elems)
    rest.remove(1)
    if n - 2 in rest:
        return True
    return any(a + 1 == b for a, b in permutations(rest, 2))


def explicit_forms(n: int) -> tuple[ZsSeq, ZsSeq]:
    """The two length-4 forms (1, n-4, n-3, 6) and (1, n-3, n-2, 4)."""
    if gcd(n, 6) != 1:
        raise ValueError("n must be coprime to 6")
    if n < 11:
        raise ValueError("n < 11 is degenerate (element collision)")
    return new_seq(n, (1, n - 4, n - 3, 6)), new_seq(n, (1, n - 3, n - 2, 4))


def boundary_quadruple(k: int, n: int) -> ZsSeq:
    """The boundary quadruple (1, f(k), f(k)+1, 2n-2-2f(k)) for a good k."""
    if not good_report(k, n).good:
        raise ValueError("k=%d is not good for n=%d" % (k, n))
    fk = f_val(k, n)
    return new_seq(n, (1, fk, fk + 1, 2 * n - 2 - 2 * fk))


def successor_reduction(seq: ZsSeq) -> ZsSeq:
    """Rewrite a singular sequence (1, n-2, x3, x4) in base x3.

    Returns Y = (1, (x3^-1 - 1) mod n, x3^-1 mod n, (x3^-1 (n-2)) mod n),
    which is singular with second element one less than the third, lies in
    the same unit orbit (multiply by x3), and has the same index.
    """
    n = seq.ctx.n
    e = seq.elems
    if len(e) != 4 or e[0] != 1 or e[1] != n - 2:
        raise ValueError("expected ordering (1, n-2, x3, x4)")
    if not is_singular(seq):
        raise ValueError("sequence is not singular")
    inv = mod_inverse(e[2], n)
    return ZsSeq(ctx=seq.ctx, elems=(1, (inv - 1) % n, inv, inv * (n - 2) % n))


def interval_witness(n: int, form: int) -> tuple[int, int] | None:
    """Smallest unit g in the form's witness interval, paired with the
    count of residues of that explicit form above n/2.

    form selects the quadruple by its last element: 6 scans n/12 < g < n/8
    (there 6g, (n-4)g and (n-3)g all land above n/2), 4 scans the analogous
    n/8 < g < n/6 (there 4g, (n-3)g and (n-2)g land above n/2). Returns
    None when the interval contains no unit (possible for small or nearly
    prime-power n); callers then fall back to a direct index computation.
    """
    if gcd(n, 6) != 1:
        raise ValueError("n must be coprime to 6")
    if form == 6:
        lo, hi = n // 12 + 1, n // 8 + 1
    elif form == 4:
        lo, hi = n // 8 + 1, n // 6 + 1
    else:
        raise ValueError("form must be 6 or 4")
    for g in range(lo, hi):
        if gcd(g, n) == 1:
            seq = explicit_forms(n)[0 if form == 6 else 1]
            return g, count_large_residues(seq, g)
    return None


def _singular_tuples(n: int):
    """Yield every singular multiset over Z/n exactly once as a tuple
    (1, x2, x3, x4), deduplicated across the two branches."""
    seen = set()
    ctx = GroupContext.create(n)
    # branch x2 + 1 = x3: x4 is forced by the zero-sum condition
    for x2 in range(1, n - 1):
        x3 = x2 + 1
        x4 = -(1 + x2 + x3) % n
        if x4 == 0:
            continue
        if gcd(x2, n) != 1 or gcd(x3, n) != 1 or gcd(x4, n) != 1:
            continue
        key = tuple(sorted((1, x2, x3, x4)))
        if key in seen:
            continue
        seen.add(key)
        if is_minimal_zero_sum(ZsSeq(ctx=ctx, elems=(1, x2, x3, x4))):
            yield (1, x2, x3, x4)
    # branch x2 = n - 2: x4 = n + 1 - x3
    if gcd(n - 2, n) == 1:
        for x3 in range(2, n - 1):
            x4 = n + 1 - x3
            if gcd(x3, n) != 1 or gcd(x4, n) != 1:
                continue
            key = tuple(sorted((1, n - 2, x3, x4)))
            if key in seen:
                continue
            seen.add(key)
            if is_minimal_zero_sum(ZsSeq(ctx=ctx, elems=(1, n - 2, x3, x4))):
                yield (1, n - 2, x3, x4)


def verify_singular_theorem(n: int) -> SingularReport:
    """Enumerate all singular sequences over Z/n and confirm index 1.

    Any violation is reported with its full norm profile; one would
    falsify the implementation, not the theorem.
    """
    if gcd(n, 6) != 1:
        raise ValueError("n must be coprime to 6")
    if n < 11:
        raise ValueError("need n >= 11")
    unit_list = units(n)
    ctx = GroupContext.create(n)
    checked = 0
    violations = []
    for tup in _singular_tuples(n):
        checked += 1
        if has_unit_norm(n, tup, unit_list) is None:
            res = index_with_witness(ZsSeq(ctx=ctx, elems=tup), full=True)
            violations.append((tup, tuple(sorted(res.norms.items()))))
    return SingularReport(n=n, checked=checked, violations=tuple(violations))


def verify_singular_range(lo: int, hi: int, workers: int | None = None) -> list[SingularReport]:
    """verify_singular_theorem over every admissible n in [lo, hi]."""
    if not 11 <= lo <= hi:
        raise ValueError("need 11 <= lo <= hi")
    ns = [n for n in range(lo, hi + 1) if gcd(n, 6) == 1]
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(ns) <= 1:
        return [verify_singular_theorem(n) for n in ns]
    with Pool(workers) as pool:
        # larger n first for load balance; report in ascending order
        out = pool.map(verify_singular_theorem, sorted(ns, reverse=True), chunksize=16)
    return sorted(out, key=lambda r: r.n)


def sweep_interval_witness(limit: int, omega: bytearray | None = None) -> list[int]:
    """For every n <= limit with gcd(n,6)=1, n > 1000, and at least three
    distinct prime factors, require interval_witness to find a unit with
    residue count 3 for both forms. Returns the list of failing n."""
    from .modarith import distinct_factor_counts

    if omega is None:
        omega = distinct_factor_counts(limit)
    failures = []
    for n in range(1001, limit + 1):
        if n % 2 == 0 or n % 3 == 0 or omega[n] < 3:
            continue
        for form in (6, 4):
            hit = interval_witness(n, form)
            if hit is None or hit[1] != 3:
                failures.append(n)
                break
    return failures
