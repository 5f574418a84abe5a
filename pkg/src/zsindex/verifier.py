"""Exhaustive enumeration of minimal zero-sum length-4 sequences and
parallel range verification of the index-1 property.

The optimized path enumerates sorted tuples directly from the zero-sum
constraint, reduces to unit-orbit representatives before computing any
index, and exits each generator scan at the first norm-1 witness. A naive
oracle path (no orbit reduction, no early exit, full subset minimality)
exists for cross-checking.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from math import gcd
from multiprocessing import Pool

from .modarith import GroupContext, units
from .zseq import ZsSeq, has_unit_norm, index_with_witness, is_minimal_zero_sum

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class VerifyRecord:
    """Per-modulus verification outcome."""

    n: int
    total_minimal: int
    orbit_count: int
    max_index: int
    index2_examples: tuple
    elapsed_ms: int

    def same_outcome(self, other: "VerifyRecord") -> bool:
        """Equality on everything but wall time."""
        return (
            self.n == other.n
            and self.total_minimal == other.total_minimal
            and self.orbit_count == other.orbit_count
            and self.max_index == other.max_index
            and self.index2_examples == other.index2_examples
        )


def record_to_dict(rec: VerifyRecord) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "n": rec.n,
        "total_minimal": rec.total_minimal,
        "orbit_count": rec.orbit_count,
        "max_index": rec.max_index,
        "index2_examples": [
            [list(seq), [[g, v] for g, v in norms]] for seq, norms in rec.index2_examples
        ],
        "elapsed_ms": rec.elapsed_ms,
    }


def record_from_dict(d: dict) -> VerifyRecord:
    return VerifyRecord(
        n=d["n"],
        total_minimal=d["total_minimal"],
        orbit_count=d["orbit_count"],
        max_index=d["max_index"],
        index2_examples=tuple(
            (tuple(seq), tuple((g, v) for g, v in norms)) for seq, norms in d["index2_examples"]
        ),
        elapsed_ms=d["elapsed_ms"],
    )


def minimal_tuples(n: int):
    """Yield each minimal zero-sum length-4 multiset over [1, n-1] once,
    as a sorted tuple, in ascending lexicographic order.

    For sorted zero-sum 4-tuples of nonzero elements, minimality reduces
    to "no pair sums to n": singletons are nonzero, a zero-sum triple
    would force a zero fourth element, and complementary pairs vanish
    together, so checking the three pairs containing the first element
    suffices.
    """
    if n < 5:
        raise ValueError("modulus must be at least 5")
    top = n - 1
    for a in range(1, n):
        for b in range(a, n):
            if a + b == n:
                continue
            r = -(a + b) % n
            for target in (r, r + n):
                c_lo = max(b, target - top)
                for c in range(c_lo, target // 2 + 1):
                    if a + c != n and a + (target - c) != n:
                        yield (a, b, c, target - c)


def _pack(n: int, tup: tuple[int, ...]) -> int:
    return ((tup[0] * n + tup[1]) * n + tup[2]) * n + tup[3]


# above this many expected minimal multisets (~n^3/24), orbit bookkeeping
# switches from a membership set to a constant-memory canonicality scan
_SEEN_SET_BUDGET = 16_000_000


def _is_orbit_rep(n: int, tup: tuple[int, ...], unit_list: list[int]) -> bool:
    """True iff tup is the lex-smallest sorted tuple in its unit orbit."""
    a, b, c, d = tup
    for u in unit_list[1:]:
        if tuple(sorted((u * a % n, u * b % n, u * c % n, u * d % n))) < tup:
            return False
    return True


def enumerate_minimal(n: int, orbits_only: bool = False):
    """Stream the minimal sequences over Z/n as ZsSeq values; with
    orbits_only, only canonical orbit representatives are yielded."""
    ctx = GroupContext.create(n)
    if not orbits_only:
        for tup in minimal_tuples(n):
            yield ZsSeq(ctx=ctx, elems=tup)
        return
    unit_list = units(n)
    if n**3 // 24 > _SEEN_SET_BUDGET:
        for tup in minimal_tuples(n):
            if _is_orbit_rep(n, tup, unit_list):
                yield ZsSeq(ctx=ctx, elems=tup)
        return
    seen = set()
    for tup in minimal_tuples(n):
        key = _pack(n, tup)
        if key in seen:
            # each later orbit member is streamed exactly once: forget it
            seen.discard(key)
            continue
        yield ZsSeq(ctx=ctx, elems=tup)
        a, b, c, d = tup
        for u in unit_list:
            orbit = sorted((u * a % n, u * b % n, u * c % n, u * d % n))
            member = ((orbit[0] * n + orbit[1]) * n + orbit[2]) * n + orbit[3]
            if member != key:
                seen.add(member)


def verify_n(n: int) -> VerifyRecord:
    """Verify the index-1 property for one modulus.

    Streams the lex-ordered enumeration; the first unseen tuple of each
    orbit is its canonical representative, whose whole orbit is then
    marked. Index is computed per orbit with early exit at norm 1; a
    suspected index-2 orbit gets a full norm dump.
    """
    t0 = time.perf_counter()
    ctx = GroupContext.create(n)
    unit_list = units(n)
    seen = set()
    total = 0
    orbit_count = 0
    max_index = 0
    index2 = []
    use_set = n**3 // 24 <= _SEEN_SET_BUDGET
    for tup in minimal_tuples(n):
        total += 1
        a, b, c, d = tup
        if use_set:
            key = ((a * n + b) * n + c) * n + d
            if key in seen:
                seen.discard(key)
                continue
            for u in unit_list:
                orbit = sorted((u * a % n, u * b % n, u * c % n, u * d % n))
                member = ((orbit[0] * n + orbit[1]) * n + orbit[2]) * n + orbit[3]
                if member != key:
                    seen.add(member)
        elif not _is_orbit_rep(n, tup, unit_list):
            continue
        orbit_count += 1
        if has_unit_norm(n, tup, unit_list) is not None:
            idx = 1
        else:
            idx = 2
            res = index_with_witness(ZsSeq(ctx=ctx, elems=tup), full=True)
            index2.append((tup, tuple(sorted(res.norms.items()))))
        if idx > max_index:
            max_index = idx
    elapsed = int((time.perf_counter() - t0) * 1000)
    return VerifyRecord(
        n=n,
        total_minimal=total,
        orbit_count=orbit_count,
        max_index=max_index,
        index2_examples=tuple(index2),
        elapsed_ms=elapsed,
    )


def verify_n_naive(n: int) -> VerifyRecord:
    """Brute-force oracle: all ordered tuples, dedup at the end, full
    subset-based minimality, canonicalization by full orbit scan, and
    index by complete norm profile with no early exit."""
    t0 = time.perf_counter()
    ctx = GroupContext.create(n)
    unit_list = units(n)
    found = set()
    for a in range(1, n):
        for b in range(1, n):
            for c in range(1, n):
                d = -(a + b + c) % n
                if d == 0:
                    continue
                seq = ZsSeq(ctx=ctx, elems=(a, b, c, d))
                if is_minimal_zero_sum(seq):
                    found.add(tuple(sorted((a, b, c, d))))
    reps = set()
    for tup in found:
        reps.add(
            min(tuple(sorted((u * x % n for x in tup))) for u in unit_list)
        )
    max_index = 0
    index2 = []
    for tup in sorted(reps):
        res = index_with_witness(ZsSeq(ctx=ctx, elems=tup), full=True)
        if res.index == 2:
            index2.append((tup, tuple(sorted(res.norms.items()))))
        if res.index > max_index:
            max_index = res.index
    elapsed = int((time.perf_counter() - t0) * 1000)
    return VerifyRecord(
        n=n,
        total_minimal=len(found),
        orbit_count=len(reps),
        max_index=max_index,
        index2_examples=tuple(index2),
        elapsed_ms=elapsed,
    )


def load_checkpoint(path: str) -> tuple[dict[int, VerifyRecord], list[str]]:
    """Read a line-delimited checkpoint ledger.

    Returns (records by n, corruption warnings); corrupted lines are
    dropped so their moduli get re-verified.
    """
    records: dict[int, VerifyRecord] = {}
    warnings: list[str] = []
    if not os.path.exists(path):
        return records, warnings
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                d = json.loads(line)
                if d.get("schema") != SCHEMA_VERSION:
                    raise ValueError("schema mismatch")
                rec = record_from_dict(d)
            except (ValueError, KeyError, TypeError) as exc:
                warnings.append("line %d: %s" % (lineno, exc))
                continue
            records[rec.n] = rec
    return records, warnings


def append_checkpoint(path: str, rec: VerifyRecord) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(record_to_dict(rec)) + "\n")
        fh.flush()


def verify_range(
    lo: int,
    hi: int,
    workers: int | None = None,
    checkpoint: str | None = None,
) -> list[VerifyRecord]:
    """Verify every n in [lo, hi] with gcd(n, 6) = 1.

    Results are ordered by n and independent of the worker count. With a
    checkpoint path, completed moduli are appended one ledger line each
    and skipped on resume.
    """
    if not 5 <= lo <= hi:
        raise ValueError("need 5 <= lo <= hi")
    ns = [n for n in range(lo, hi + 1) if gcd(n, 6) == 1]
    done: dict[int, VerifyRecord] = {}
    if checkpoint:
        done, warnings = load_checkpoint(checkpoint)
        for w in warnings:
            print("checkpoint: dropped corrupted %s" % w)
    todo = [n for n in ns if n not in done]
    if workers is None:
        workers = os.cpu_count() or 1
    results: dict[int, VerifyRecord] = dict(done)
    if workers <= 1 or len(todo) <= 1:
        for n in todo:
            rec = verify_n(n)
            results[n] = rec
            if checkpoint:
                append_checkpoint(checkpoint, rec)
    else:
        with Pool(workers) as pool:
            # largest moduli first: they dominate the runtime
            for rec in pool.imap_unordered(verify_n, sorted(todo, reverse=True), chunksize=1):
                results[rec.n] = rec
                if checkpoint:
                    append_checkpoint(checkpoint, rec)
    return [results[n] for n in ns]
