"""Connected-quandle enumeration over catalogs of transitive groups.

For each catalog group of the requested degree the pipeline stabilizes the
point 1, collects the non-identity central stabilizer elements whose
conjugacy class generates the whole group, builds one quandle per such
element, and filters the results up to isomorphism (per group, then
globally).  Symmetric and alternating groups in their natural action are
skipped for degree > 4: their point stabilizers have trivial center, so they
never contribute.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial

import numpy as np

from .construct import Envelope, affine_quandle, quandle_from_envelope
from .errors import ResourceBoundExceeded, ValidationFailure
from .group import DEFAULT_ELEMENT_BOUND, PermGroup
from .perm import Permutation, conjugate, parse_cycles
from .quandle import (
    Quandle,
    are_isomorphic,
    displacement_group,
    inner_group,
    invariant_fingerprint,
    is_faithful,
    is_latin,
    is_simple,
)


def central_class_generators(group: PermGroup, base_point: int = 1,
                             bound: int = DEFAULT_ELEMENT_BOUND):
    """Non-identity elements of Z(G_e) whose conjugacy class generates G.

    These are exactly the translations that make (G, e, rho) an envelope.
    Returned in canonical order (sorted by image sequence).
    """
    stab = group.stabilizer(base_point)
    out = []
    for z in sorted(stab.center(bound).elements(bound), key=lambda p: tuple(p.images)):
        if z.is_identity():
            continue
        if group.normal_closure([z]).order == group.order:
            out.append(z)
    return out


def filter_up_to_iso(quandles):
    """Maximal pairwise non-isomorphic sublist, canonical-least representative
    kept per class, bucketed by invariants before pairwise testing."""
    buckets = {}
    for q in quandles:
        buckets.setdefault(invariant_fingerprint(q), []).append(q)
    kept = []
    for fp in sorted(buckets, key=repr):
        reps = []
        for q in sorted(buckets[fp], key=Quandle.canonical_key):
            if not any(are_isomorphic(q, r, skip_invariants=True) is not None for r in reps):
                reps.append(q)
        kept.extend(reps)
    return sorted(kept, key=Quandle.canonical_key)


@dataclass
class EnumerationEntry:
    quandle: Quandle
    source: str
    rho: str
    flags: dict
    inn_order: int
    dis_order: int
    index: int = 0  # position after canonical sorting, assigned by the caller


@dataclass
class EnumerationResult:
    degree: int
    mode: str
    entries: list
    raw_total: int
    filtered_total: int
    per_group: dict  # label -> {"xi": int, "filtered": int}
    skipped: dict  # label -> reason
    catalog_digest: str = ""

    def count(self, simple_only: bool = False, non_affine_only: bool = False) -> int:
        n = 0
        for e in self.entries:
            if simple_only and not e.flags["simple"]:
                continue
            if non_affine_only and e.flags["affine"]:
                continue
            n += 1
        return n


def _natural_sym_alt(group: PermGroup) -> bool:
    n = group.degree
    return n > 4 and 2 * group.order >= factorial(n)


def _assert_class_fusion(group: PermGroup, rho1: Permutation, rho2: Permutation, images):
    """An isomorphism between two quandles of one group must fuse the classes.

    Relabeling by the found bijection conjugates the inner group onto itself,
    so it carries the first translation's class onto the second's.
    """
    f = Permutation(np.asarray(images, dtype=np.int32))
    cls1 = {conjugate(c, f) for c in group.conjugacy_class(rho1)}
    cls2 = set(group.conjugacy_class(rho2))
    if cls1 != cls2:  # pragma: no cover - would contradict the theory
        raise RuntimeError("isomorphic quandles with non-fused translation classes")


def _process_record(payload):
    """One catalog record end to end; also the unit of --jobs parallelism.

    Returns raw/filtered counts and serialized entries so the payload stays
    picklable for worker processes.
    """
    label, degree, gen_strings, bound = payload
    group = PermGroup([parse_cycles(s, degree) for s in gen_strings])
    rhos = central_class_generators(group, 1, bound)
    pairs = []
    for rho in rhos:
        env = Envelope(group, 1, rho)
        pairs.append((rho, quandle_from_envelope(env)))
    survivors = []
    for rho, q in pairs:
        dup = False
        for rho2, q2 in survivors:
            images = are_isomorphic(q, q2)
            if images is not None:
                _assert_class_fusion(group, rho, rho2, images)
                dup = True
                break
        if not dup:
            survivors.append((rho, q))
    entries = []
    for rho, q in survivors:
        inn = inner_group(q)
        if not inn.equals_group(group):  # pragma: no cover - theory guarantee
            raise RuntimeError(f"inner group of quandle from {label} differs from source")
        simple = is_simple(q)
        primitive = inn.is_primitive()
        faithful = is_faithful(q)
        qp = faithful and (primitive or inn.is_quasiprimitive(bound))
        affine, _ = classify_affine(q, simple)
        entries.append(
            {
                "table": q.table.tolist(),
                "rho": rho.cycle_string(),
                "flags": {
                    "simple": simple,
                    "primitive": primitive,
                    "quasiprimitive": qp,
                    "affine": affine,
                    "faithful": faithful,
                    "latin": is_latin(q),
                    "connected": True,
                },
                "inn_order": inn.order,
                "dis_order": displacement_group(q).order,
            }
        )
    return {"label": label, "xi": len(pairs), "entries": entries}


def enumerate_degree(degree, records, mode, verify_flags=True, jobs=1,
                     bound=DEFAULT_ELEMENT_BOUND, catalog_digest=""):
    """Run the enumeration pipeline for one degree over catalog records.

    ``records`` are loaded catalog records (label, degree, group, flags,
    gen_strings).  ``mode`` is "primitive" or "quasiprimitive"; only records
    carrying the mode's flag participate.  An empty selection yields a
    zero-entry result rather than an error.
    """
    if mode not in ("primitive", "quasiprimitive"):
        raise ValueError(f"unknown mode {mode!r}")
    selected = [r for r in records if r.degree == degree and mode in r.flags]
    skipped = {}
    admitted = []
    for rec in selected:
        if verify_flags:
            ok = (
                rec.group.is_primitive()
                if mode == "primitive"
                else rec.group.is_quasiprimitive(bound)
            )
            if not ok:
                raise ValidationFailure(
                    f"record {rec.label!r} fails verification of flag {mode!r}"
                )
        if _natural_sym_alt(rec.group):
            skipped[rec.label] = "natural symmetric/alternating action"
            continue
        derived = rec.group.derived_subgroup()
        if not rec.group.quotient_is_cyclic(derived):
            skipped[rec.label] = "abelianization not cyclic"
            continue
        admitted.append(rec)

    payloads = [(rec.label, rec.degree, rec.gen_strings, bound) for rec in admitted]
    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_process_record, payloads))
    else:
        outcomes = [_process_record(p) for p in payloads]

    raw_total = 0
    per_group = {}
    flagged = []
    for rec, outcome in zip(admitted, outcomes):
        raw_total += outcome["xi"]
        per_group[rec.label] = {"xi": outcome["xi"], "filtered": len(outcome["entries"])}
        for item in outcome["entries"]:
            flagged.append(
                EnumerationEntry(
                    quandle=Quandle(np.asarray(item["table"], dtype=np.int32), _validated=True),
                    source=rec.label,
                    rho=item["rho"],
                    flags=item["flags"],
                    inn_order=item["inn_order"],
                    dis_order=item["dis_order"],
                )
            )

    globally = filter_up_to_iso([e.quandle for e in flagged])
    keep_keys = {q._bytes for q in globally}
    entries = []
    seen = set()
    for e in sorted(flagged, key=lambda e: e.quandle.canonical_key()):
        if e.quandle._bytes in keep_keys and e.quandle._bytes not in seen:
            seen.add(e.quandle._bytes)
            entries.append(e)
    for i, e in enumerate(entries):
        e.index = i + 1
    return EnumerationResult(
        degree=degree,
        mode=mode,
        entries=entries,
        raw_total=raw_total,
        filtered_total=len(entries),
        per_group=per_group,
        skipped=skipped,
        catalog_digest=catalog_digest,
    )


def merge_results(results):
    """Merge entry lists from several runs and re-filter globally up to iso.

    Used to combine the primitive and quasiprimitive modes for one degree.
    """
    flagged = [e for res in results for e in res.entries]
    globally = filter_up_to_iso([e.quandle for e in flagged])
    keep_keys = {q._bytes for q in globally}
    entries = []
    seen = set()
    for e in sorted(flagged, key=lambda e: e.quandle.canonical_key()):
        if e.quandle._bytes in keep_keys and e.quandle._bytes not in seen:
            seen.add(e.quandle._bytes)
            entries.append(e)
    for i, e in enumerate(entries):
        e.index = i + 1
    return entries


# -- affine classification -------------------------------------------------------


def _prime_power(n: int):
    """(p, k) with n = p^k, or None."""
    if n < 2:
        return None
    p = None
    for d in range(2, int(n**0.5) + 1):
        if n % d == 0:
            p = d
            break
    if p is None:
        return (n, 1)
    m = n
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return (p, k) if m == 1 else None


def _monic_polys(p, deg):
    """Monic polynomials of exact degree, as coefficient tuples (low first)."""
    out = []
    for idx in range(p**deg):
        coeffs = []
        rest = idx
        for _ in range(deg):
            coeffs.append(rest % p)
            rest //= p
        out.append(tuple(coeffs) + (1,))
    return out


def _poly_divides(g, f, p):
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], -1, p)
    while len(f) - 1 >= dg:
        if f[-1] == 0:
            f.pop()
            continue
        coef = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - coef * gi) % p
        f.pop()
    return not any(f)


def _irreducible_polys(p, deg):
    """Monic irreducibles of exact degree over F_p, by trial division."""
    irr = {1: _monic_polys(p, 1)}
    for d in range(2, deg + 1):
        found = []
        for f in _monic_polys(p, d):
            reducible = False
            for d2 in range(1, d // 2 + 1):
                if any(_poly_divides(g, f, p) for g in irr[d2]):
                    reducible = True
                    break
            if not reducible:
                found.append(f)
        irr[d] = found
    return irr[deg]


def _companion(poly, p):
    k = len(poly) - 1
    mat = np.zeros((k, k), dtype=np.int64)
    for i in range(1, k):
        mat[i, i - 1] = 1
    for i in range(k):
        mat[i, k - 1] = (-poly[i]) % p
    return mat


@dataclass(frozen=True)
class AffineWitness:
    p: int
    k: int
    psi: tuple
    images: tuple


def classify_affine(q: Quandle, simple: bool, witness_bound: int = 64):
    """Affine flag for an enumerated quandle.

    A simple quandle is affine exactly when its order is a prime power; when
    it also fits the witness bound, an explicit model (companion matrix of an
    irreducible polynomial, acting irreducibly by construction) and a point
    bijection are searched and returned.  Non-simple quandles report
    non-affine: the prime-power criterion only applies to simple ones.
    Returns (is_affine, witness-or-None).
    """
    if not simple or q.order <= 2:
        return False, None
    pk = _prime_power(q.order)
    if pk is None:
        return False, None
    p, k = pk
    if q.order > witness_bound:
        return True, None
    for poly in _irreducible_polys(p, k):
        # fixed-point-free <=> 1 is not a root of the minimal polynomial
        if sum(poly) % p == 0:
            continue
        psi = _companion(poly, p)
        candidate = affine_quandle(p, k, psi)
        images = are_isomorphic(q, candidate)
        if images is not None:
            return True, AffineWitness(p, k, tuple(map(tuple, psi.tolist())), tuple(images))
    raise RuntimeError(
        "simple quandle of prime-power order matched no irreducible affine model"
    )  # pragma: no cover


# -- characterization of inner groups of simple quandles -----------------------


@dataclass
class InnerConditionsReport:
    center_trivial: bool
    abelianization_cyclic: bool
    derived_nontrivial: bool
    derived_minimal_normal: bool | None  # None when the class-rep bound was hit

    @property
    def holds(self):
        return (
            self.center_trivial
            and self.abelianization_cyclic
            and self.derived_nontrivial
            and self.derived_minimal_normal is True
        )


def inner_conditions_report(group: PermGroup, bound: int = DEFAULT_ELEMENT_BOUND):
    """The three classical conditions for G = Inn of some simple quandle:
    trivial center, cyclic G/G', and G' the smallest nontrivial normal
    subgroup.  The last takes one normal closure per conjugacy class and is
    None when the group exceeds the enumeration bound."""
    center_trivial = group.center(bound).order == 1
    derived = group.derived_subgroup()
    abelianization_cyclic = group.quotient_is_cyclic(derived)
    derived_nontrivial = derived.order > 1
    if not derived_nontrivial:
        minimal = False
    else:
        try:
            minimal = True
            for rep in group.conjugacy_class_reps(bound):
                if rep.is_identity():
                    continue
                if not derived.is_subgroup_of(group.normal_closure([rep])):
                    minimal = False
                    break
        except ResourceBoundExceeded:
            minimal = None
    return InnerConditionsReport(
        center_trivial, abelianization_cyclic, derived_nontrivial, minimal
    )


def check_inner_conditions(group: PermGroup, bound: int = DEFAULT_ELEMENT_BOUND) -> bool:
    """Boolean form of the report; raises when the class-rep bound is exceeded."""
    report = inner_conditions_report(group, bound)
    if report.center_trivial and report.abelianization_cyclic and report.derived_nontrivial:
        if report.derived_minimal_normal is None:
            raise ResourceBoundExceeded(
                f"group order {group.order} too large for class representatives"
            )
    return report.holds
