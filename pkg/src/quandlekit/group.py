"""Finite permutation groups via deterministic Schreier-Sims chains.

The chain is built with the classic non-randomized algorithm; base points are
always the smallest non-fixed points, so chains, orders, transversals and
every derived computation are reproducible bit for bit.  Groups are immutable
once constructed.
"""

from __future__ import annotations

from collections import deque
from math import factorial

import numpy as np

from .errors import ResourceBoundExceeded
from .perm import Permutation, compose, conjugate, identity, inverse

# Element-wise computations (center of an intransitive group, conjugacy class
# representatives, coset tables) refuse to enumerate beyond this many elements.
DEFAULT_ELEMENT_BOUND = 10**6
DEFAULT_INDEX_BOUND = 1024


def _trusted_perm(arr) -> Permutation:
    p = object.__new__(Permutation)
    arr = np.ascontiguousarray(arr, dtype=np.int32)
    arr.setflags(write=False)
    p.degree = arr.size
    p.images = arr
    p._bytes = arr.tobytes()
    p._hash = hash(p._bytes)
    return p


def _compose(p: Permutation, q: Permutation) -> Permutation:
    return _trusted_perm(q.images[p.images - 1])


def _inverse(p: Permutation) -> Permutation:
    inv = np.empty(p.degree, dtype=np.int32)
    inv[p.images - 1] = np.arange(1, p.degree + 1, dtype=np.int32)
    return _trusted_perm(inv)


class _Level:
    __slots__ = ("base", "acting", "orbit", "done")

    def __init__(self, base: int):
        self.base = base
        self.acting = []  # [(key, image-array)] generators of the level's stabilizer
        self.orbit = {}  # point -> transversal image array u with u[base-1] = point
        self.done = set()  # processed Schreier pairs (point, generator key)


def _min_moved(p: Permutation) -> int:
    idx = np.nonzero(p.images != np.arange(1, p.degree + 1, dtype=np.int32))[0]
    return int(idx[0]) + 1


class PermGroup:
    """Group generated by permutations of equal degree, with a cached chain."""

    def __init__(self, generators, _seed=None, _seed_count=0):
        gens = list(generators)
        if not gens:
            raise ValueError("generator list must be nonempty")
        degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError("mixed degrees in generator list")
        self.degree = degree
        self.generators = tuple(g for g in gens if not g.is_identity())
        if not self.generators:
            self.generators = (identity(degree),)
        self._levels = self._build_chain(_seed, _seed_count)
        self._order = 1
        for lv in self._levels:
            self._order *= len(lv.orbit)
        self._gen_matrix = None

    def extend(self, extra_gens) -> "PermGroup":
        """Group generated by this group plus extra generators.

        Reuses the existing chain: transversals never change, so only the new
        Schreier pairs are processed.
        """
        extra = [g for g in extra_gens if not g.is_identity()]
        if not extra:
            return self
        return PermGroup(
            list(self.generators) + extra,
            _seed=self,
            _seed_count=len([g for g in self.generators if not g.is_identity()]),
        )

    # -- chain construction --------------------------------------------------
    #
    # Incremental deterministic Schreier-Sims.  Transversal entries are never
    # replaced once written, so Schreier pairs stay verified after orbits or
    # generator sets grow; each level remembers which (point, generator) pairs
    # it has already processed.  Inverse transversal arrays live in one 3-d
    # table (level, point, images) so sifting runs inside a compiled kernel.

    def _inv_row(self, i, x):
        row = self._inv3d[i, x - 1]
        return row if row[0] else None

    def _extend_orbit(self, i, new_gens):
        """Grow level i's orbit: new generators first, then a BFS frontier."""
        lv = self._levels[i]
        ident = np.arange(1, self.degree + 1, dtype=np.int32)
        if not lv.orbit:
            lv.orbit[lv.base] = ident
            self._inv3d[i, lv.base - 1] = ident
        frontier = deque()

        def visit(x, ux, s):
            y = int(s[x - 1])
            if y not in lv.orbit:
                img = s[ux - 1]
                self._inv3d[i, y - 1, img - 1] = ident
                lv.orbit[y] = img
                frontier.append(y)

        for x in list(lv.orbit):
            ux = lv.orbit[x]
            for _, s in new_gens:
                visit(x, ux, s)
        while frontier:
            x = frontier.popleft()
            ux = lv.orbit[x]
            for _, s in lv.acting:
                visit(x, ux, s)

    def _strip_arr(self, arr, start=0):
        """Sift an image array through levels[start:]; returns (residue, level)."""
        from ._kernels import chain_strip

        out, i = chain_strip(
            np.ascontiguousarray(arr, dtype=np.int32),
            self._bases,
            self._inv3d,
            len(self._levels),
            start,
        )
        return out, int(i)

    def _attach(self, arr, j):
        """Install a strong generator (as image array) whose first level is j."""
        levels = self._levels
        if j == len(levels):
            idx = np.nonzero(arr != np.arange(1, arr.size + 1, dtype=np.int32))[0]
            levels.append(_Level(int(idx[0]) + 1))
            self._bases[j] = levels[j].base
        key = (j, len(levels[j].acting))
        entry = (key, arr)
        for k in range(j + 1):
            self._levels[k].acting.append(entry)
            self._extend_orbit(k, [entry])

    def _alloc_tables(self, seed=None, seed_levels=0):
        n = self.degree
        self._bases = np.zeros(n + 1, dtype=np.int32)
        self._inv3d = np.zeros((n + 1, n, n), dtype=np.int32)
        if seed is not None:
            self._bases[:seed_levels] = seed._bases[:seed_levels]
            self._inv3d[:seed_levels] = seed._inv3d[:seed_levels]

    def _build_chain(self, seed=None, seed_count=0):
        self._levels = []
        nontrivial = [g for g in self.generators if not g.is_identity()]
        if not nontrivial:
            self._alloc_tables()
            return []
        levels = self._levels
        if seed is not None and seed._levels:
            self._alloc_tables(seed, len(seed._levels))
            for lv in seed._levels:
                cp = _Level(lv.base)
                cp.acting = list(lv.acting)
                cp.orbit = dict(lv.orbit)
                cp.done = set(lv.done)
                levels.append(cp)
            fresh = nontrivial[seed_count:]
        else:
            self._alloc_tables()
            fresh = nontrivial
        if not levels:
            levels.append(_Level(min(_min_moved(g) for g in fresh)))
            self._bases[0] = levels[0].base
        new_entries = []
        for g in fresh:
            entry = ((0, len(levels[0].acting)), g.images.astype(np.int32))
            levels[0].acting.append(entry)
            new_entries.append(entry)
        self._extend_orbit(0, new_entries)
        ident = np.arange(1, self.degree + 1, dtype=np.int32)
        i = 0
        while i >= 0:
            lv = levels[i]
            new_attach = None
            for x in sorted(lv.orbit):
                ux = lv.orbit[x]
                for key, s in lv.acting:
                    if (x, key) in lv.done:
                        continue
                    lv.done.add((x, key))
                    y = int(s[x - 1])
                    sg = self._inv3d[i, y - 1][s[ux - 1] - 1]
                    if (sg == ident).all():
                        continue
                    h, j = self._strip_arr(sg, i + 1)
                    if (h == ident).all():
                        continue
                    self._attach(h, j)
                    new_attach = j
                    break
                if new_attach is not None:
                    break
            if new_attach is not None:
                i = new_attach
            else:
                i -= 1
        return levels

    def _strip(self, g: Permutation, start: int = 0):
        arr, i = self._strip_arr(g.images, start)
        return _trusted_perm(arr), i

    # -- basic queries ---------------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    def base_points(self):
        return [lv.base for lv in self._levels]

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} != {self.degree}")
        h, _ = self._strip(p)
        return h.is_identity()

    def gen_matrix(self):
        """Generator images as a 0-based (g, n) int32 matrix (cached)."""
        if self._gen_matrix is None:
            m = np.stack([g.images for g in self.generators]).astype(np.int32) - 1
            m.setflags(write=False)
            self._gen_matrix = m
        return self._gen_matrix

    def orbit(self, point: int):
        """Sorted orbit of a point under the whole group."""
        self._check_point(point)
        seen = np.zeros(self.degree + 1, dtype=bool)
        seen[point] = True
        queue = deque([point])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = g(x)
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
        return [int(x) for x in np.nonzero(seen)[0]]

    def orbit_transversal(self, point: int, reverse_gens: bool = False):
        """Map y -> permutation u with u(point) = y, built by deterministic BFS.

        ``reverse_gens`` picks a second transversal for tests that need one.
        """
        self._check_point(point)
        gens = tuple(reversed(self.generators)) if reverse_gens else self.generators
        trans = {point: identity(self.degree)}
        queue = deque([point])
        while queue:
            x = queue.popleft()
            ux = trans[x]
            for g in gens:
                y = g(x)
                if y not in trans:
                    trans[y] = _compose(ux, g)
                    queue.append(y)
        return trans

    def is_transitive(self) -> bool:
        return len(self.orbit(1)) == self.degree

    def _check_point(self, point: int):
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} out of range 1..{self.degree}")

    # -- subgroups ---------------------------------------------------------------

    def stabilizer(self, point: int) -> "PermGroup":
        """Point stabilizer, via the chain when possible, else Schreier generators."""
        self._check_point(point)
        if self._levels and self._levels[0].base == point:
            if len(self._levels) == 1:
                return PermGroup([identity(self.degree)])
            gens = [_trusted_perm(arr) for _, arr in self._levels[1].acting]
            return PermGroup(gens or [identity(self.degree)])
        trans = self.orbit_transversal(point)
        seen = set()
        gens = []
        for x, ux in trans.items():
            for s in self.generators:
                u2 = trans[s(x)]
                sg = _compose(_compose(ux, s), _inverse(u2))
                if not sg.is_identity() and sg._bytes not in seen:
                    seen.add(sg._bytes)
                    gens.append(sg)
        return PermGroup(gens or [identity(self.degree)])

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def equals_group(self, other: "PermGroup") -> bool:
        return self.order == other.order and self.is_subgroup_of(other)

    def normal_closure(self, seeds) -> "PermGroup":
        """Smallest normal subgroup containing the seeds."""
        seeds = list(seeds)
        for s in seeds:
            if not self.contains(s):
                raise ValueError(f"seed {s.cycle_string()} not in the group")
        work = [s for s in seeds if not s.is_identity()]
        closure = PermGroup(work or [identity(self.degree)])
        queue = deque(work)
        while queue:
            s = queue.popleft()
            for g in self.generators:
                c = conjugate(s, g)
                if not closure.contains(c):
                    closure = closure.extend([c])
                    queue.append(c)
        return closure

    def derived_subgroup(self) -> "PermGroup":
        """Normal closure of the commutators of the generators."""
        seeds = []
        seen = set()
        for a in self.generators:
            for b in self.generators:
                c = _compose(_compose(_compose(_inverse(a), _inverse(b)), a), b)
                if not c.is_identity() and c._bytes not in seen:
                    seen.add(c._bytes)
                    seeds.append(c)
        return self.normal_closure(seeds)

    # -- element enumeration -----------------------------------------------------

    def elements_matrix(self, bound: int = DEFAULT_ELEMENT_BOUND):
        """All elements as a (|G|, n) 1-based int32 matrix, in a fixed order."""
        if self.order > bound:
            raise ResourceBoundExceeded(
                f"group order {self.order} exceeds element bound {bound}"
            )
        mat = np.arange(1, self.degree + 1, dtype=np.int32).reshape(1, -1)
        for lv in reversed(self._levels):
            blocks = []
            for x in sorted(lv.orbit):
                u = lv.orbit[x]
                blocks.append(u[mat - 1])
            mat = np.concatenate(blocks, axis=0)
        return mat

    def elements(self, bound: int = DEFAULT_ELEMENT_BOUND):
        return [_trusted_perm(row) for row in self.elements_matrix(bound)]

    def center(self, bound: int = DEFAULT_ELEMENT_BOUND) -> "PermGroup":
        """Elements commuting with every generator.

        For transitive groups the center is semiregular, so each candidate is
        pinned down by the image of one point and no element enumeration is
        needed; otherwise the group is enumerated under the bound.
        """
        if self.order == 1:
            return PermGroup([identity(self.degree)])
        if self.is_transitive():
            e = self._levels[0].base
            trans = self.orbit_transversal(e)
            # z(t_x(e)) = t_x(z(e)), so z is the column y of the transversal
            # table once z(e) = y is chosen: the center acts semiregularly.
            tmat = np.empty((self.degree, self.degree), dtype=np.int32)
            for x, u in trans.items():
                tmat[x - 1] = u.images
            central = []
            for y in range(1, self.degree + 1):
                z = np.ascontiguousarray(tmat[:, y - 1])
                if len(np.unique(z)) != self.degree:
                    continue
                zp = _trusted_perm(z)
                if all(
                    (g.images[z - 1] == z[g.images - 1]).all() for g in self.generators
                ) and self.contains(zp):
                    central.append(zp)
            return PermGroup(central or [identity(self.degree)])
        mat = self.elements_matrix(bound)
        mask = np.ones(mat.shape[0], dtype=bool)
        for g in self.generators:
            # z*g == g*z  <=>  g.images[z-1] == z[g.images-1] row-wise
            left = g.images[mat - 1]
            right = mat[:, g.images - 1]
            mask &= (left == right).all(axis=1)
        central = [_trusted_perm(row) for row in mat[mask]]
        return PermGroup(central or [identity(self.degree)])

    def _class_matrix(self, arr):
        """Conjugation orbit of one image array, as a matrix (BFS, vectorized:
        whole frontiers are conjugated by each generator at once)."""
        frontier = arr.reshape(1, -1).astype(np.int32)
        seen = {arr.tobytes()}
        rows = [frontier]
        while frontier.shape[0]:
            batches = []
            for s in self.generators:
                simg = s.images
                conj = np.empty_like(frontier)
                conj[:, simg - 1] = simg[frontier - 1]
                batches.append(conj)
            fresh = []
            for batch in batches:
                for row in batch:
                    key = row.tobytes()
                    if key not in seen:
                        seen.add(key)
                        fresh.append(row)
            if not fresh:
                break
            frontier = np.stack(fresh)
            rows.append(frontier)
        return np.concatenate(rows, axis=0)

    def conjugacy_class(self, g: Permutation):
        """Orbit of g under conjugation by the group, canonically sorted."""
        if not self.contains(g):
            raise ValueError(f"{g.cycle_string()} is not in the group")
        mat = self._class_matrix(g.images)
        order_keys = np.lexsort(mat.T[::-1])
        return [_trusted_perm(mat[i]) for i in order_keys]

    def conjugacy_class_reps(self, bound: int = DEFAULT_ELEMENT_BOUND):
        """One representative per conjugacy class (needs element enumeration)."""
        mat = self.elements_matrix(bound)
        order_keys = np.lexsort(mat.T[::-1])
        seen = set()
        reps = []
        for idx in order_keys:
            row = mat[idx]
            key = row.tobytes()
            if key in seen:
                continue
            reps.append(_trusted_perm(row))
            for crow in self._class_matrix(row):
                seen.add(crow.tobytes())
        return reps

    # -- blocks, primitivity, quasiprimitivity ------------------------------------

    def minimal_block_system(self, a: int, b: int) -> "BlockSystem":
        """Finest G-invariant partition merging a and b (G transitive)."""
        self._check_point(a)
        self._check_point(b)
        if a == b:
            raise ValueError("block seed points must differ")
        if not self.is_transitive():
            raise ValueError("block systems are defined for transitive groups")
        from ._kernels import block_close

        parent = block_close(self.gen_matrix(), a - 1, b - 1, self.degree)
        return BlockSystem.from_parent(self.degree, parent)

    def is_primitive(self) -> bool:
        """Transitive with no nontrivial block system (degree 1: primitive)."""
        if not self.is_transitive():
            return False
        if self.degree == 1:
            return True
        from ._kernels import block_close

        gm = self.gen_matrix()
        for b in range(2, self.degree + 1):
            parent = block_close(gm, 0, b - 1, self.degree)
            if (parent != parent[0]).any():
                return False
        return True

    def is_quasiprimitive(self, bound: int = DEFAULT_ELEMENT_BOUND) -> bool:
        """Every nontrivial normal subgroup is transitive.

        A primitive group qualifies outright; otherwise one normal closure per
        conjugacy class representative is checked (the closure of any g in a
        normal subgroup N sits inside N, and each closure is itself normal).
        """
        if not self.is_transitive():
            return False
        if self.is_primitive():
            return True
        for rep in self.conjugacy_class_reps(bound):
            if rep.is_identity():
                continue
            ncl = self.normal_closure([rep])
            if len(ncl.orbit(1)) != self.degree:
                return False
        return True

    # -- quotients and coset actions ------------------------------------------------

    def coset_canonical_rep(self, g: Permutation) -> Permutation:
        """Canonical representative of the right coset (self)·g.

        Greedy through the chain: at each level pick the transversal element
        minimizing the image of the level's base point.  The result depends
        only on the coset, never on g itself.
        """
        arr = g.images
        for lv in self._levels:
            best_x = None
            best_img = None
            for x in lv.orbit:
                img = int(arr[x - 1])
                if best_img is None or img < best_img:
                    best_img = img
                    best_x = x
            arr = arr[lv.orbit[best_x] - 1]
        return _trusted_perm(arr)

    def coset_action(self, sub: "PermGroup"):
        """Right-multiplication action on right cosets of ``sub``.

        Returns (image group, faithful flag, coset representatives).  The
        identity coset gets label 1 and the remaining cosets are sorted by
        their canonical representative's image tuple.
        """
        if not sub.is_subgroup_of(self):
            raise ValueError("not a subgroup")
        reps = {}
        start = sub.coset_canonical_rep(identity(self.degree))
        reps[start._bytes] = start
        queue = deque([start])
        index = self.order // sub.order
        while queue:
            r = queue.popleft()
            for s in self.generators:
                nxt = sub.coset_canonical_rep(_compose(r, s))
                if nxt._bytes not in reps:
                    reps[nxt._bytes] = nxt
                    queue.append(nxt)
        if len(reps) != index:
            raise RuntimeError("coset enumeration mismatch")  # pragma: no cover
        ordered = sorted(reps.values(), key=lambda p: tuple(p.images))
        label = {p._bytes: i + 1 for i, p in enumerate(ordered)}
        action_gens = []
        for s in self.generators:
            images = np.empty(index, dtype=np.int32)
            for i, r in enumerate(ordered):
                images[i] = label[sub.coset_canonical_rep(_compose(r, s))._bytes]
            action_gens.append(Permutation(images))
        image = PermGroup(action_gens)
        return image, image.order == self.order, ordered

    def quotient_is_cyclic(self, nsub: "PermGroup", index_bound: int = DEFAULT_INDEX_BOUND) -> bool:
        """True iff G/N is cyclic; N must be normal and of small index."""
        for s in nsub.generators:
            for g in self.generators:
                if not nsub.contains(conjugate(s, g)):
                    raise ValueError("subgroup is not normal")
        index = self.order // nsub.order
        if index > index_bound:
            raise ResourceBoundExceeded(
                f"quotient index {index} exceeds bound {index_bound}"
            )
        if index == 1:
            return True
        image, _, _ = self.coset_action(nsub)
        if image.order != index:
            raise RuntimeError("normal coset action has wrong order")  # pragma: no cover
        return any(p.order() == index for p in image.elements(index_bound + 1))


class BlockSystem:
    """A partition of {1..n} into blocks of a transitive action."""

    def __init__(self, degree: int, classes):
        self.degree = degree
        self.classes = tuple(tuple(sorted(c)) for c in classes)
        covered = sorted(x for c in self.classes for x in c)
        if covered != list(range(1, degree + 1)):
            raise ValueError("classes do not partition 1..n")

    @classmethod
    def from_parent(cls, degree: int, parent):
        groups = {}
        for i, r in enumerate(parent):
            groups.setdefault(int(r), []).append(i + 1)
        classes = sorted(groups.values(), key=lambda c: c[0])
        return cls(degree, classes)

    def is_trivial(self) -> bool:
        return len(self.classes) in (1, self.degree)

    def class_sizes(self):
        return sorted(len(c) for c in self.classes)

    def __repr__(self):
        return f"BlockSystem({self.classes})"


def make_group(gens) -> PermGroup:
    """Build a PermGroup from a nonempty list of equal-degree permutations."""
    return PermGroup(gens)


def symmetric_group_order(n: int) -> int:
    return factorial(n)
