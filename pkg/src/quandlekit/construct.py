"""Quandle constructions from transitive permutation groups.

The central object is an envelope: a transitive group G with a base point e
and a distinguished element of Z(G_e) whose conjugacy class generates G.
Envelopes and connected quandles convert back and forth; conjugation classes,
coset tables and affine (Alexander) presentations give alternative models of
the same quandles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationFailure
from .group import PermGroup
from .perm import Permutation, compose, compose_many, identity, inverse
from .quandle import Quandle, inner_group, is_connected, right_translation


class FolderNotEnvelope(ValidationFailure):
    """The distinguished element's class does not generate the group."""


@dataclass(frozen=True)
class Envelope:
    """Transitive group with base point and a central stabilizer element.

    ``translation`` plays the role of the right translation at the base point
    of the quandle the envelope describes.  ``is_envelope`` records whether
    its conjugacy class generates the whole group; a pair failing that is
    still a valid folder but does not describe a connected quandle.
    """

    group: PermGroup
    base_point: int
    translation: Permutation
    is_envelope: bool = field(init=False)

    def __post_init__(self):
        g = self.group
        e = self.base_point
        rho = self.translation
        if not 1 <= e <= g.degree:
            raise ValidationFailure(f"base point {e} out of range 1..{g.degree}")
        if not g.is_transitive():
            raise ValidationFailure("envelope group must be transitive")
        if rho(e) != e:
            raise ValidationFailure("translation must fix the base point")
        if not g.contains(rho):
            raise ValidationFailure("translation must lie in the group")
        stab = g.stabilizer(e)
        for s in stab.generators:
            if compose(s, rho) != compose(rho, s):
                raise ValidationFailure(
                    "translation is not central in the base-point stabilizer"
                )
        closure = g.normal_closure([rho])
        object.__setattr__(self, "is_envelope", closure.order == g.order)


def quandle_from_envelope(env: Envelope) -> Quandle:
    """Quandle on {1..n} whose column at y is t_y ∘ rho ∘ t_y⁻¹ with t_y(e) = y.

    The choice of transversal does not matter because the translation is
    central in the stabilizer.  Requires a genuine envelope, otherwise the
    columns do not generate the intended inner group.
    """
    if not env.is_envelope:
        raise FolderNotEnvelope(
            "conjugacy class of the translation does not generate the group"
        )
    return _folder_quandle(env)


def _folder_quandle(env: Envelope, reverse_gens: bool = False) -> Quandle:
    g = env.group
    n = g.degree
    trans = g.orbit_transversal(env.base_point, reverse_gens=reverse_gens)
    rho = env.translation
    table = np.empty((n, n), dtype=np.int32)
    for y in range(1, n + 1):
        ty = trans[y]
        col = compose_many(inverse(ty), rho, ty)
        table[:, y - 1] = col.images
    return Quandle(table)


def envelope_of(q: Quandle, e: int) -> Envelope:
    """The envelope (Inn(Q), e, R_e) of a connected quandle."""
    if not 1 <= e <= q.order:
        raise ValueError(f"base point {e} out of range 1..{q.order}")
    if not is_connected(q):
        raise ValidationFailure("quandle is not connected; inner group not transitive")
    return Envelope(inner_group(q), e, right_translation(q, e))


def conj_quandle(group: PermGroup, g: Permutation):
    """Conjugation quandle on the class of g, with canonical labels.

    Class elements are sorted by image sequence and labeled 1..m; the
    operation is a ▷ b = b ∘ a ∘ b⁻¹ (as functions), so that the column at b
    is conjugation by b.  Returns (quandle, labeled class elements).
    """
    cls = group.conjugacy_class(g)
    cls.sort(key=lambda p: tuple(p.images))
    index = {p: i + 1 for i, p in enumerate(cls)}
    m = len(cls)
    table = np.empty((m, m), dtype=np.int32)
    for b_i, b in enumerate(cls):
        binv = inverse(b)
        for a_i, a in enumerate(cls):
            conj = compose_many(binv, a, b)
            table[a_i, b_i] = index[conj]
    return Quandle(table), cls


def coset_quandle(env: Envelope) -> Quandle:
    """The same quandle presented on right cosets of the stabilizer.

    Cosets of G_e are sorted by canonical representative; the coset of g acted
    on by the coset of h goes to the coset of g·h⁻¹·rho·h (left-to-right
    products).  Mapping the coset of g to g(e) is an isomorphism onto the
    envelope's quandle.
    """
    if not env.is_envelope:
        raise FolderNotEnvelope(
            "conjugacy class of the translation does not generate the group"
        )
    g = env.group
    stab = g.stabilizer(env.base_point)
    _, _, reps = g.coset_action(stab)
    label = {r._bytes: i + 1 for i, r in enumerate(reps)}
    rho = env.translation
    m = len(reps)
    table = np.empty((m, m), dtype=np.int32)
    for h_i, h in enumerate(reps):
        tail = compose_many(inverse(h), rho, h)
        for g_i, gg in enumerate(reps):
            word = compose(gg, tail)
            table[g_i, h_i] = label[stab.coset_canonical_rep(word)._bytes]
    return Quandle(table)


def transport(env: Envelope, phi: Permutation) -> Envelope:
    """Conjugate the whole envelope by a permutation fixing the base point."""
    if phi(env.base_point) != env.base_point:
        raise ValidationFailure("transport permutation must fix the base point")
    phi_inv = inverse(phi)
    new_gens = [compose_many(phi_inv, g, phi) for g in env.group.generators]
    new_rho = compose_many(phi_inv, env.translation, phi)
    return Envelope(PermGroup(new_gens), env.base_point, new_rho)


# -- affine (Alexander) quandles ---------------------------------------------------


def _mat_mod(mat, p):
    arr = np.asarray(mat, dtype=np.int64) % p
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValidationFailure("matrix must be square")
    return arr


def _det_mod(mat, p):
    """Determinant mod p by fraction-free Gaussian elimination."""
    a = mat.copy() % p
    k = a.shape[0]
    det = 1
    for col in range(k):
        pivot = None
        for row in range(col, k):
            if a[row, col] % p:
                pivot = row
                break
        if pivot is None:
            return 0
        if pivot != col:
            a[[col, pivot]] = a[[pivot, col]]
            det = -det % p
        det = det * a[col, col] % p
        inv = pow(int(a[col, col]), -1, p)
        a[col] = a[col] * inv % p
        for row in range(col + 1, k):
            a[row] = (a[row] - a[row, col] * a[col]) % p
    return det % p


def _vectors(p, k):
    """All vectors of F_p^k in lexicographic order (first coordinate major)."""
    grids = np.indices((p,) * k).reshape(k, -1).T
    return np.ascontiguousarray(grids, dtype=np.int64)


def affine_quandle(p: int, k: int, psi) -> Quandle:
    """Quandle on F_p^k with x ▷ y = psi(x - y) + y, for fixed-point-free
    invertible psi.

    Vectors are labeled 1..p^k in lexicographic order.
    """
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValidationFailure(f"{p} is not prime")
    psi = _mat_mod(psi, p)
    if psi.shape[0] != k:
        raise ValidationFailure(f"expected a {k} x {k} matrix")
    if _det_mod(psi, p) == 0:
        raise ValidationFailure("matrix is singular mod p")
    eye = np.eye(k, dtype=np.int64)
    if _det_mod((psi - eye) % p, p) == 0:
        raise ValidationFailure("matrix fixes a nonzero vector")
    vecs = _vectors(p, k)
    m = vecs.shape[0]
    weights = p ** np.arange(k - 1, -1, -1, dtype=np.int64)
    # x ▷ y for all pairs at once: psi(x - y) + y
    diff = (vecs[:, None, :] - vecs[None, :, :]) % p
    mapped = (diff @ psi.T + vecs[None, :, :]) % p
    table = (mapped @ weights.astype(np.int64)) + 1
    return Quandle(table.astype(np.int32))


def is_irreducible(p: int, k: int, psi, k_bound: int = 8) -> bool:
    """True iff psi admits no nonzero proper invariant subspace over F_p.

    Brute force over cyclic subspaces: every invariant subspace contains the
    cyclic span of one of its nonzero vectors, so it is enough to check that
    every nonzero vector has full-dimensional orbit span.
    """
    if k > k_bound:
        from .errors import ResourceBoundExceeded

        raise ResourceBoundExceeded(f"irreducibility bound is k <= {k_bound}")
    psi = _mat_mod(psi, p)
    if psi.shape[0] != k:
        raise ValidationFailure(f"expected a {k} x {k} matrix")
    if _det_mod(psi, p) == 0:
        raise ValidationFailure("matrix is singular mod p")
    if k == 1:
        return True
    for vec in _vectors(p, k)[1:]:
        basis = []
        v = vec % p
        for _ in range(k + 1):
            if not _in_span(basis, v, p):
                basis.append(v.copy())
            v = (psi @ v) % p
        if len(basis) < k:
            return False
    return True


def _in_span(basis, v, p):
    if not basis:
        return not v.any()
    mat = np.stack(basis + [v]) % p
    return _rank_mod(mat, p) == _rank_mod(np.stack(basis) % p, p)


def _rank_mod(mat, p):
    a = mat.copy() % p
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        pivot = None
        for row in range(rank, rows):
            if a[row, col] % p:
                pivot = row
                break
        if pivot is None:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = a[rank] * inv % p
        for row in range(rows):
            if row != rank and a[row, col]:
                a[row] = (a[row] - a[row, col] * a[rank]) % p
        rank += 1
    return rank
