"""Finite quandles as validated multiplication tables.

A quandle on {1..n} is stored as an n x n table with ``table[i-1][j-1] = i ▷ j``.
Column j, read as the map ``i -> i ▷ j``, is the right translation at j and is
always a permutation.  Tables are immutable after validation and every
analysis function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import ValidationFailure
from .group import PermGroup
from .perm import Permutation, compose, inverse


class Quandle:
    """A validated quandle multiplication table on points 1..n."""

    __slots__ = ("order", "table", "_bytes")

    def __init__(self, table, _validated=False):
        arr = np.asarray(table, dtype=np.int32)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValidationFailure("table must be a nonempty square matrix")
        arr = np.ascontiguousarray(arr)
        self.order = int(arr.shape[0])
        if not _validated:
            _validate_axioms(arr)
        arr.setflags(write=False)
        self.table = arr
        self._bytes = arr.tobytes()

    def op(self, x: int, y: int) -> int:
        """x ▷ y."""
        return int(self.table[x - 1, y - 1])

    def __eq__(self, other):
        if not isinstance(other, Quandle):
            return NotImplemented
        return self.order == other.order and self._bytes == other._bytes

    def __hash__(self):
        return hash(self._bytes)

    def __repr__(self):
        return f"Quandle(order={self.order})"

    def canonical_key(self):
        """Sort key fixing output order everywhere: (order, table bytes)."""
        return (self.order, self._bytes)


def _validate_axioms(arr: np.ndarray) -> None:
    n = arr.shape[0]
    if arr.min() < 1 or arr.max() > n:
        bad = np.argwhere((arr < 1) | (arr > n))[0]
        raise ValidationFailure(
            f"entry at row {bad[0] + 1}, column {bad[1] + 1} is outside 1..{n}"
        )
    t0 = arr - 1
    x = _kernels.idempotence_witness(t0)
    if x >= 0:
        raise ValidationFailure(f"idempotence fails at x = {x + 1}: {x + 1} ▷ {x + 1} != {x + 1}")
    r1, r2, col = _kernels.column_witness(t0)
    if col >= 0:
        raise ValidationFailure(
            f"column {col + 1} is not a bijection: rows {r1 + 1} and {r2 + 1} "
            f"share the value {arr[r1, col]}"
        )
    i, j, k = _kernels.distributivity_witness(t0)
    if i >= 0:
        raise ValidationFailure(
            f"right self-distributivity fails at (x,y,z) = ({i + 1},{j + 1},{k + 1}): "
            f"(x▷y)▷z != (x▷z)▷(y▷z)"
        )


def from_table(n: int, rows) -> Quandle:
    """Validate an n x n matrix over 1..n as a quandle; errors carry witnesses."""
    arr = np.asarray(rows, dtype=np.int32)
    if arr.shape != (n, n):
        raise ValidationFailure(f"expected a {n} x {n} table, got shape {arr.shape}")
    return Quandle(arr)


def trivial_quandle(n: int) -> Quandle:
    """x ▷ y = x for all x, y."""
    col = np.arange(1, n + 1, dtype=np.int32)
    return Quandle(np.repeat(col[:, None], n, axis=1), _validated=True)


def dihedral_quandle(n: int) -> Quandle:
    """Points 1..n with x ▷ y = 2y - x (mod n)."""
    i = np.arange(n)
    table = (2 * i[None, :] - i[:, None]) % n + 1
    return Quandle(table.astype(np.int32))


def right_translation(q: Quandle, x: int) -> Permutation:
    """Column x as the permutation i -> i ▷ x."""
    if not 1 <= x <= q.order:
        raise ValueError(f"point {x} out of range 1..{q.order}")
    return Permutation(q.table[:, x - 1].copy())


def _columns(q: Quandle):
    return [Permutation(q.table[:, j].copy()) for j in range(q.order)]


def inner_group(q: Quandle) -> PermGroup:
    """Group generated by all right translations."""
    return PermGroup(_columns(q))


def displacement_group(q: Quandle) -> PermGroup:
    """Group generated by R_1⁻¹R_y for y = 2..n.

    This smaller set generates the same subgroup as all R_x⁻¹R_y, since
    R_x⁻¹R_y = (R_x⁻¹R_1)(R_1⁻¹R_y).
    """
    cols = _columns(q)
    r1_inv = inverse(cols[0])
    gens = [compose(r1_inv, c) for c in cols[1:]]
    if not gens:
        gens = [compose(r1_inv, cols[0])]
    return PermGroup(gens)


def is_connected(q: Quandle) -> bool:
    return inner_group(q).is_transitive()


def is_faithful(q: Quandle) -> bool:
    """True iff the columns are pairwise distinct."""
    cols = {q.table[:, j].tobytes() for j in range(q.order)}
    return len(cols) == q.order


def is_latin(q: Quandle) -> bool:
    """True iff every row is a bijection."""
    n = q.order
    for i in range(n):
        if len(np.unique(q.table[i])) != n:
            return False
    return True


@dataclass(frozen=True)
class Congruence:
    """A quandle congruence given by a class id per point (ids are 1-based
    minimal class members)."""

    order: int
    class_of: tuple

    @classmethod
    def from_parent(cls, parent):
        n = len(parent)
        root_min = {}
        for i, r in enumerate(parent):
            r = int(r)
            root_min.setdefault(r, i + 1)
        return cls(n, tuple(root_min[int(parent[i])] for i in range(n)))

    def classes(self):
        by_id = {}
        for i, c in enumerate(self.class_of):
            by_id.setdefault(c, []).append(i + 1)
        return sorted((tuple(v) for v in by_id.values()), key=lambda t: t[0])

    def is_full(self) -> bool:
        return len(set(self.class_of)) == 1

    def is_discrete(self) -> bool:
        return len(set(self.class_of)) == self.order


def congruence_closure(q: Quandle, pairs) -> Congruence:
    """Smallest congruence merging the given pairs.

    Closure runs under both translation arguments only; compatibility with
    left division is automatic on finite quandles because each translation
    permutes the finitely many classes, so its inverse does too.
    """
    n = q.order
    seed = np.asarray([(a - 1, b - 1) for a, b in pairs], dtype=np.int32).reshape(-1, 2)
    if seed.size and (seed.min() < 0 or seed.max() >= n):
        raise ValueError("pair out of range")
    parent = np.arange(n, dtype=np.int32)
    _kernels.congruence_close(q.table - 1, seed, parent)
    return Congruence.from_parent(parent)


def is_simple(q: Quandle) -> bool:
    """|X| > 1 and every single-pair congruence collapses the quandle.

    Follows the congruence definition literally, so the two-element trivial
    quandle counts as simple; see the module notes in the README.
    """
    return bool(_kernels.is_simple_table(q.table - 1))


def is_primitive_quandle(q: Quandle) -> bool:
    return inner_group(q).is_primitive()


def is_quasiprimitive_quandle(q: Quandle) -> bool:
    """Quasiprimitive inner action together with quandle faithfulness."""
    return is_faithful(q) and inner_group(q).is_quasiprimitive()


# -- isomorphism ---------------------------------------------------------------


def _column_cycle_types(q: Quandle):
    return [right_translation(q, x).cycle_type() for x in range(1, q.order + 1)]


def invariant_fingerprint(q: Quandle):
    """Cheap isomorphism invariants: order, |Inn|, |Dis|, column cycle types,
    connectedness."""
    return (
        q.order,
        inner_group(q).order,
        displacement_group(q).order,
        tuple(sorted(_column_cycle_types(q))),
        is_connected(q),
    )


def _extend_map(q1: Quandle, q2: Quandle, fwd, bwd, queue):
    """Propagate f(x ▷ y) = f(x) ▷ f(y) over all mapped pairs; False on clash.

    Each newly mapped point is combined against everything mapped so far, in
    both argument positions, until the queue drains.
    """
    t1 = q1.table
    t2 = q2.table
    while queue:
        x = queue.pop()
        for y in list(fwd):
            for a, b in ((x, y), (y, x)):
                src = int(t1[a - 1, b - 1])
                dst = int(t2[fwd[a] - 1, fwd[b] - 1])
                cur = fwd.get(src)
                if cur is None:
                    if dst in bwd:
                        return False
                    fwd[src] = dst
                    bwd[dst] = src
                    queue.append(src)
                elif cur != dst:
                    return False
    return True


def are_isomorphic(q1: Quandle, q2: Quandle, skip_invariants: bool = False):
    """A point bijection f with f(x ▷ y) = f(x) ▷ f(y), or None.

    Invariants reject fast; then backtracking anchors candidate images chosen
    by matching column cycle type and propagates through the table.
    ``skip_invariants`` lets callers that already bucketed by fingerprint go
    straight to the search.
    """
    if q1.order != q2.order:
        return None
    if not skip_invariants and invariant_fingerprint(q1) != invariant_fingerprint(q2):
        return None
    n = q1.order
    types1 = _column_cycle_types(q1)
    types2 = _column_cycle_types(q2)

    def backtrack(fwd, bwd):
        if len(fwd) == n:
            return dict(fwd)
        x = min(a for a in range(1, n + 1) if a not in fwd)
        for img in range(1, n + 1):
            if img in bwd or types1[x - 1] != types2[img - 1]:
                continue
            fwd2 = dict(fwd)
            bwd2 = dict(bwd)
            fwd2[x] = img
            bwd2[img] = x
            if _extend_map(q1, q2, fwd2, bwd2, [x]):
                found = backtrack(fwd2, bwd2)
                if found is not None:
                    return found
        return None

    found = backtrack({}, {})
    if found is None:
        return None
    return [found[x] for x in range(1, n + 1)]


def apply_relabeling(q: Quandle, images) -> Quandle:
    """The quandle with points renamed by the bijection x -> images[x-1]."""
    n = q.order
    f = np.asarray(images, dtype=np.int32)
    table = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        for j in range(n):
            table[f[i] - 1, f[j] - 1] = f[q.table[i, j] - 1]
    return Quandle(table, _validated=True)
