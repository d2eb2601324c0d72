"""Hot inner loops, compiled with numba when available.

Every kernel has identical pure-python/numpy semantics; the active backend is
chosen once at import time from the environment variable QUANDLEKIT_KERNELS
("numba" or "python", default: numba when importable).  Tables and generator
matrices passed to kernels are 0-based int32 arrays; all translation from the
1-based public API happens in the callers.  Union-find is inlined (path
halving) so each kernel is a single self-contained nopython function.
"""

from __future__ import annotations

import os

import numpy as np


def _congruence_close(table, pairs, parent):
    """Union-find closure of ``pairs`` under both translation arguments.

    table is n x n, 0-based.  Merging i~j forces table[i,k]~table[j,k] and
    table[k,i]~table[k,j] for every k; propagating along the merge edges only
    is enough because the generated relation is transitive.
    """
    n = table.shape[0]
    cap = 2 * n * n + pairs.shape[0] + 4
    qa = np.empty(cap, dtype=np.int32)
    qb = np.empty(cap, dtype=np.int32)
    head = 0
    tail = 0
    for t in range(pairs.shape[0]):
        u = pairs[t, 0]
        v = pairs[t, 1]
        ru = u
        while parent[ru] != ru:
            parent[ru] = parent[parent[ru]]
            ru = parent[ru]
        rv = v
        while parent[rv] != rv:
            parent[rv] = parent[parent[rv]]
            rv = parent[rv]
        if ru != rv:
            parent[rv] = ru
            qa[tail] = u
            qb[tail] = v
            tail += 1
    while head < tail:
        x = qa[head]
        y = qb[head]
        head += 1
        for k in range(n):
            for side in range(2):
                if side == 0:
                    u = table[x, k]
                    v = table[y, k]
                else:
                    u = table[k, x]
                    v = table[k, y]
                ru = u
                while parent[ru] != ru:
                    parent[ru] = parent[parent[ru]]
                    ru = parent[ru]
                rv = v
                while parent[rv] != rv:
                    parent[rv] = parent[parent[rv]]
                    rv = parent[rv]
                if ru != rv:
                    parent[rv] = ru
                    qa[tail] = u
                    qb[tail] = v
                    tail += 1
    for i in range(n):
        r = i
        while parent[r] != r:
            r = parent[r]
        parent[i] = r
    return parent


def _is_simple_table(table):
    """True when every single-pair congruence closure collapses everything."""
    n = table.shape[0]
    if n <= 1:
        return False
    pair = np.empty((1, 2), dtype=np.int32)
    for a in range(n):
        for b in range(a + 1, n):
            parent = np.arange(n, dtype=np.int32)
            pair[0, 0] = a
            pair[0, 1] = b
            _congruence_close(table, pair, parent)
            root = parent[0]
            full = True
            for i in range(1, n):
                if parent[i] != root:
                    full = False
                    break
            if not full:
                return False
    return True


def _idempotence_witness(table):
    n = table.shape[0]
    for i in range(n):
        if table[i, i] != i:
            return i
    return -1


def _column_witness(table):
    """First column that is not a bijection, as (row1, row2, col); else (-1,-1,-1)."""
    n = table.shape[0]
    first = np.empty(n, dtype=np.int32)
    for j in range(n):
        for v in range(n):
            first[v] = -1
        for i in range(n):
            v = table[i, j]
            if first[v] >= 0:
                return first[v], i, j
            first[v] = i
    return -1, -1, -1


def _distributivity_witness(table):
    """First (i, j, k) with (i▷j)▷k != (i▷k)▷(j▷k); else (-1,-1,-1)."""
    n = table.shape[0]
    for k in range(n):
        for j in range(n):
            tjk = table[j, k]
            for i in range(n):
                if table[table[i, j], k] != table[table[i, k], tjk]:
                    return i, j, k
    return -1, -1, -1


def _block_close(gens, a, b, n):
    """Finest partition merging a,b and closed under the generator images.

    gens is a (g, n) matrix of 0-based generator images (Atkinson's minimal
    block system closure).
    """
    parent = np.arange(n, dtype=np.int32)
    cap = n + 4
    qa = np.empty(cap, dtype=np.int32)
    qb = np.empty(cap, dtype=np.int32)
    parent[b] = a
    qa[0] = a
    qb[0] = b
    head = 0
    tail = 1
    while head < tail:
        x = qa[head]
        y = qb[head]
        head += 1
        for g in range(gens.shape[0]):
            u = gens[g, x]
            v = gens[g, y]
            ru = u
            while parent[ru] != ru:
                parent[ru] = parent[parent[ru]]
                ru = parent[ru]
            rv = v
            while parent[rv] != rv:
                parent[rv] = parent[parent[rv]]
                rv = parent[rv]
            if ru != rv:
                parent[rv] = ru
                qa[tail] = u
                qb[tail] = v
                tail += 1
    for i in range(n):
        r = i
        while parent[r] != r:
            r = parent[r]
        parent[i] = r
    return parent


def _chain_strip(arr, bases, inv3d, nlevels, start):
    """Sift an image array through a stabilizer chain.

    inv3d[i, x-1] holds the inverse transversal image array for point x at
    level i (all zeros when x is outside the level's orbit).  Returns the
    residue and the first level whose orbit missed, or nlevels on full sift.
    """
    out = arr.copy()
    n = out.shape[0]
    tmp = np.empty(n, dtype=out.dtype)
    for i in range(start, nlevels):
        x = out[bases[i] - 1]
        if inv3d[i, x - 1, 0] == 0:
            return out, i
        for t in range(n):
            tmp[t] = inv3d[i, x - 1, out[t] - 1]
        for t in range(n):
            out[t] = tmp[t]
    return out, nlevels


_PY_KERNELS = {
    "congruence_close": _congruence_close,
    "is_simple_table": _is_simple_table,
    "idempotence_witness": _idempotence_witness,
    "column_witness": _column_witness,
    "distributivity_witness": _distributivity_witness,
    "block_close": _block_close,
    "chain_strip": _chain_strip,
}


def _select_backend():
    choice = os.environ.get("QUANDLEKIT_KERNELS", "").strip().lower()
    if choice not in ("", "numba", "python"):
        raise ValueError(f"QUANDLEKIT_KERNELS must be 'numba' or 'python', got {choice!r}")
    if choice == "python":
        return "python", dict(_PY_KERNELS)
    try:
        from numba import njit
    except ImportError:
        if choice == "numba":
            raise
        return "python", dict(_PY_KERNELS)
    jitted = {}
    close = njit(cache=True)(_congruence_close)
    jitted["congruence_close"] = close

    # _is_simple_table calls the closure kernel; rebuild it against the jitted
    # version so the whole search stays in nopython mode.
    def _is_simple_jit_src(table):
        n = table.shape[0]
        if n <= 1:
            return False
        pair = np.empty((1, 2), dtype=np.int32)
        for a in range(n):
            for b in range(a + 1, n):
                parent = np.arange(n, dtype=np.int32)
                pair[0, 0] = a
                pair[0, 1] = b
                close(table, pair, parent)
                root = parent[0]
                full = True
                for i in range(1, n):
                    if parent[i] != root:
                        full = False
                        break
                if not full:
                    return False
        return True

    jitted["is_simple_table"] = njit(cache=True)(_is_simple_jit_src)
    for name in ("idempotence_witness", "column_witness", "distributivity_witness",
                 "block_close", "chain_strip"):
        jitted[name] = njit(cache=True)(_PY_KERNELS[name])
    return "numba", jitted


BACKEND, _ACTIVE = _select_backend()

congruence_close = _ACTIVE["congruence_close"]
is_simple_table = _ACTIVE["is_simple_table"]
idempotence_witness = _ACTIVE["idempotence_witness"]
column_witness = _ACTIVE["column_witness"]
distributivity_witness = _ACTIVE["distributivity_witness"]
block_close = _ACTIVE["block_close"]
chain_strip = _ACTIVE["chain_strip"]

python_kernels = dict(_PY_KERNELS)


def backend_name() -> str:
    return BACKEND
