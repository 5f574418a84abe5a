"""Length-k sequences over Z/n: zero-sum and minimality predicates, norms,
and exact index computation with witnesses.

A sequence is a multiset of nonzero residues; the index is the minimum,
over generators g, of the g-norm (sum of the base-g digits divided by n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from .modarith import GroupContext, mod_inverse, units


@dataclass(frozen=True)
class ZsSeq:
    """A validated sequence of residues in [1, n-1] over Z/n."""

    ctx: GroupContext
    elems: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elems)


@dataclass(frozen=True)
class IndexResult:
    """Index of a sequence plus the witness generator and norm profile.

    norms maps each scanned generator to its (integer) norm; with early
    exit the map covers only the generators scanned before the first
    norm-1 witness.
    """

    index: int
    witness: int
    norms: dict[int, int]


def new_seq(n: int, elems: list[int] | tuple[int, ...]) -> ZsSeq:
    """Validate and build a sequence; out-of-range elements are rejected."""
    ctx = GroupContext.create(n)
    for x in elems:
        if not 1 <= x <= n - 1:
            raise ValueError("element %d out of range [1, %d]" % (x, n - 1))
    if len(elems) < 1:
        raise ValueError("sequence must be nonempty")
    return ZsSeq(ctx=ctx, elems=tuple(elems))


def is_zero_sum(seq: ZsSeq) -> bool:
    return sum(seq.elems) % seq.ctx.n == 0


def is_minimal_zero_sum(seq: ZsSeq) -> bool:
    """Zero-sum with no nonempty proper sub-multiset summing to 0 mod n."""
    n = seq.ctx.n
    if not is_zero_sum(seq):
        return False
    k = len(seq.elems)
    for size in range(1, k):
        for combo in combinations(range(k), size):
            if sum(seq.elems[i] for i in combo) % n == 0:
                return False
    return True


def residue_sum(seq: ZsSeq, u: int) -> int:
    """Sum of the residues (u*x_i mod n); a positive multiple of n when
    seq is zero-sum."""
    n = seq.ctx.n
    if gcd(u, n) != 1:
        raise ValueError("%d is not a unit mod %d" % (u, n))
    return sum(u * x % n for x in seq.elems)


def g_norm(seq: ZsSeq, g: int) -> Fraction:
    """The g-norm: residues of the elements in base g, summed, over n."""
    n = seq.ctx.n
    return Fraction(residue_sum(seq, mod_inverse(g, n)), n)


def count_large_residues(seq: ZsSeq, u: int) -> int:
    """How many of the residues (u*x_i mod n) exceed n/2."""
    n = seq.ctx.n
    if gcd(u, n) != 1:
        raise ValueError("%d is not a unit mod %d" % (u, n))
    return sum(1 for x in seq.elems if 2 * (u * x % n) > n)


def unit_transform(seq: ZsSeq, u: int) -> ZsSeq:
    """Multiply every element by the unit u, preserving order."""
    n = seq.ctx.n
    if gcd(u, n) != 1:
        raise ValueError("%d is not a unit mod %d" % (u, n))
    return ZsSeq(ctx=seq.ctx, elems=tuple(u * x % n for x in seq.elems))


def canonical_orbit_rep(seq: ZsSeq) -> ZsSeq:
    """Lexicographically smallest sorted tuple in the unit orbit of seq."""
    n = seq.ctx.n
    best = min(tuple(sorted(u * x % n for x in seq.elems)) for u in units(n))
    return ZsSeq(ctx=seq.ctx, elems=best)


def index_with_witness(seq: ZsSeq, full: bool = False) -> IndexResult:
    """Exact index over all generators; witness is the smallest generator
    attaining it.

    Scans generators in ascending order and stops at the first norm-1
    witness (the global minimum for zero-sum sequences of nonzero
    elements) unless full=True, which forces the complete norm profile.
    """
    n = seq.ctx.n
    if not is_zero_sum(seq):
        raise ValueError("sequence is not zero-sum")
    norms: dict[int, int] = {}
    for g in units(n):
        u = mod_inverse(g, n)
        norms[g] = sum(u * x % n for x in seq.elems) // n
        if not full and norms[g] == 1:
            break
    index = min(norms.values())
    witness = min(g for g, v in norms.items() if v == index)
    return IndexResult(index=index, witness=witness, norms=norms)


def has_unit_norm(n: int, elems: tuple[int, ...], unit_list: list[int]) -> int | None:
    """Fast scan for a multiplier u with residue sum exactly n.

    Returns the first such u (so mod_inverse(u, n) is a norm-1 generator),
    or None; elems must be zero-sum with all elements nonzero.
    """
    for u in unit_list:
        s = 0
        for x in elems:
            s += u * x % n
            if s > n:
                break
        if s == n:
            return u
    return None
