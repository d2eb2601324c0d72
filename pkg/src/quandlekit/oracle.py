"""Exhaustive enumeration of small quandles, independent of the envelope
machinery.

Columns are chosen as permutations fixing their own point, and right
self-distributivity is enforced through the conjugation form
``R_{y▷z} = R_z ∘ R_y ∘ R_z⁻¹``: choosing columns y and z forces the column at
y ▷ z, so the backtracking propagates forced columns and prunes early.
Deduplication uses minimal-relabeling canonical forms up to order 4 and falls
back to pairwise isomorphism tests above that.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from .errors import ResourceBoundExceeded
from .quandle import Quandle, are_isomorphic, invariant_fingerprint

HARD_BOUND = 6


def _candidate_columns(n: int):
    """For each point j (1-based), all column tuples fixing j, in lex order."""
    cands = {}
    for j in range(1, n + 1):
        pool = []
        for perm in permutations(range(1, n + 1)):
            if perm[j - 1] == j:
                pool.append(perm)
        cands[j] = pool
    return cands


def _conjugated_column(ty, tz, tz_inv):
    return tuple(tz[ty[tz_inv[x - 1] - 1] - 1] for x in range(1, len(ty) + 1))


def _propagate(cols, inv, newly, n):
    """Force columns implied by the rack condition; False on contradiction."""
    queue = [newly]
    while queue:
        c = queue.pop()
        for other in list(cols):
            for y, z in ((c, other), (other, c)):
                ty = cols.get(y)
                tz = cols.get(z)
                if ty is None or tz is None:
                    continue
                target = tz[y - 1]
                forced = _conjugated_column(ty, tz, inv[z])
                have = cols.get(target)
                if have is None:
                    cols[target] = forced
                    fi = [0] * n
                    for idx, v in enumerate(forced):
                        fi[v - 1] = idx + 1
                    inv[target] = tuple(fi)
                    queue.append(target)
                elif have != forced:
                    return False
    return True


def _search(n: int):
    cands = _candidate_columns(n)
    out = []

    def rec(cols, inv):
        free = [j for j in range(1, n + 1) if j not in cols]
        if not free:
            table = np.empty((n, n), dtype=np.int32)
            for j in range(1, n + 1):
                table[:, j - 1] = cols[j]
            out.append(Quandle(table))
            return
        j = free[0]
        for cand in cands[j]:
            cols2 = dict(cols)
            inv2 = dict(inv)
            cols2[j] = cand
            fi = [0] * n
            for idx, v in enumerate(cand):
                fi[v - 1] = idx + 1
            inv2[j] = tuple(fi)
            if _propagate(cols2, inv2, j, n):
                rec(cols2, inv2)

    rec({}, {})
    return out


def _canonical_bytes(q: Quandle) -> bytes:
    """Minimal table bytes over all relabelings (only sensible for tiny n)."""
    n = q.order
    best = None
    for perm in permutations(range(1, n + 1)):
        relab = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            for j in range(n):
                relab[perm[i] - 1, perm[j] - 1] = perm[q.table[i, j] - 1]
        b = relab.tobytes()
        if best is None or b < best:
            best = b
    return best


def _dedupe_canonical(quandles):
    seen = {}
    for q in quandles:
        key = _canonical_bytes(q)
        if key not in seen or q.canonical_key() < seen[key].canonical_key():
            seen[key] = q
    return sorted(seen.values(), key=Quandle.canonical_key)


def _dedupe_pairwise(quandles):
    buckets = {}
    for q in quandles:
        buckets.setdefault(invariant_fingerprint(q), []).append(q)
    reps = []
    for fp in sorted(buckets, key=repr):
        kept = []
        for q in sorted(buckets[fp], key=Quandle.canonical_key):
            if not any(are_isomorphic(q, r, skip_invariants=True) for r in kept):
                kept.append(q)
        reps.extend(kept)
    return sorted(reps, key=Quandle.canonical_key)


def enumerate_quandles(n: int, hard_bound: int = HARD_BOUND):
    """All quandles of order n up to isomorphism, canonically sorted."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > hard_bound:
        raise ResourceBoundExceeded(
            f"exhaustive search bound is {hard_bound}, got order {n}"
        )
    raw = _search(n)
    if n <= 4:
        return _dedupe_canonical(raw)
    return _dedupe_pairwise(raw)
