"""Permutations of {1..n} backed by numpy image arrays.

Composition is left-to-right throughout the package: ``(p * q)(x) == q(p(x))``,
i.e. ``p`` acts first.  Points are 1-based everywhere; the image array stores
the image of point ``i`` at index ``i - 1``.
"""

from __future__ import annotations

import re
from math import lcm

import numpy as np

_CYCLE_RE = re.compile(r"\(([0-9, ]*)\)")


class Permutation:
    """An immutable bijection of {1..n}."""

    __slots__ = ("degree", "images", "_bytes", "_hash")

    def __init__(self, images):
        arr = np.asarray(images, dtype=np.int32)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("images must be a nonempty 1-d sequence")
        n = arr.size
        counts = np.zeros(n, dtype=np.int32)
        if arr.min() < 1 or arr.max() > n:
            raise ValueError("images must take values in 1..degree")
        np.add.at(counts, arr - 1, 1)
        if (counts != 1).any():
            raise ValueError("images is not a bijection of 1..degree")
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        self.degree = n
        self.images = arr
        self._bytes = arr.tobytes()
        self._hash = hash(self._bytes)

    # -- basic protocol ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.degree == other.degree and self._bytes == other._bytes

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"

    def __call__(self, point: int) -> int:
        return int(self.images[point - 1])

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    # -- queries -----------------------------------------------------------

    def is_identity(self) -> bool:
        return bool((self.images == np.arange(1, self.degree + 1, dtype=np.int32)).all())

    def moved_points(self):
        idx = np.nonzero(self.images != np.arange(1, self.degree + 1, dtype=np.int32))[0]
        return [int(i) + 1 for i in idx]

    def cycles(self):
        """Nontrivial cycles, each starting at its minimal point, sorted."""
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1] or self(start) == start:
                continue
            cyc = [start]
            seen[start - 1] = True
            x = self(start)
            while x != start:
                cyc.append(x)
                seen[x - 1] = True
                x = self(x)
            out.append(tuple(cyc))
        return out

    def cycle_type(self):
        """Multiset of cycle lengths including fixed points, as a sorted tuple."""
        lens = [len(c) for c in self.cycles()]
        fixed = self.degree - sum(lens)
        return tuple(sorted(lens + [1] * fixed))

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycs)


def identity(degree: int) -> Permutation:
    return Permutation(np.arange(1, degree + 1, dtype=np.int32))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: apply ``p`` first, then ``q``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    return Permutation(q.images[p.images - 1])


def compose_many(*perms: Permutation) -> Permutation:
    if not perms:
        raise ValueError("need at least one permutation")
    arr = perms[0].images
    for p in perms[1:]:
        if p.degree != arr.size:
            raise ValueError("degree mismatch")
        arr = p.images[arr - 1]
    return Permutation(arr)


def inverse(p: Permutation) -> Permutation:
    inv = np.empty(p.degree, dtype=np.int32)
    inv[p.images - 1] = np.arange(1, p.degree + 1, dtype=np.int32)
    return Permutation(inv)


def conjugate(p: Permutation, by: Permutation) -> Permutation:
    """The permutation ``by ∘ p ∘ by⁻¹`` (as a function), i.e. p relabeled by ``by``.

    Satisfies conjugate(p, b)(b(x)) == b(p(x)); in left-to-right word order this
    is the product b⁻¹ · p · b.
    """
    if p.degree != by.degree:
        raise ValueError("degree mismatch")
    out = np.empty(p.degree, dtype=np.int32)
    out[by.images - 1] = by.images[p.images - 1]
    return Permutation(out)


def commutator(a: Permutation, b: Permutation) -> Permutation:
    """a⁻¹·b⁻¹·a·b in left-to-right word order."""
    return compose_many(inverse(a), inverse(b), a, b)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation like ``(1,2,3)(4,5)``; identity is ``()``.

    Optional spaces after commas are accepted; anything else is rejected.
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty permutation string")
    consumed = _CYCLE_RE.sub("", stripped).strip()
    if consumed:
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = np.arange(1, degree + 1, dtype=np.int32)
    for body in _CYCLE_RE.findall(stripped):
        body = body.strip()
        if not body:
            continue
        try:
            pts = [int(tok) for tok in body.split(",")]
        except ValueError:
            raise ValueError(f"malformed cycle: ({body})") from None
        if len(pts) != len(set(pts)):
            raise ValueError(f"repeated point in cycle: ({body})")
        for x in pts:
            if not 1 <= x <= degree:
                raise ValueError(f"point {x} out of range 1..{degree}")
        # apply this cycle after the ones already read (disjoint in valid input)
        cur = images.copy()
        for i, x in enumerate(pts):
            cur[x - 1] = images[pts[(i + 1) % len(pts)] - 1]
        images = cur
    return Permutation(images)
