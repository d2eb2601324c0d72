"""Plain-text formats: group catalogs and quandle table files.

Catalog records look like::

    group S5-pairs-d10
    degree 10
    gen (1,3)(2,5)(4,7)(6,8)
    gen (1,4,7,2,5)(3,6,8,9,10)
    flags transitive,primitive,quasiprimitive
    provenance symmetric group of degree 5 acting on unordered pairs
    end

``#`` starts a comment line.  Writing after parsing is byte-stable.  Quandle
files are ``quandle <order>`` followed by the table rows, one row of
space-separated 1-based entries per line.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from .errors import ValidationFailure
from .group import PermGroup
from .perm import parse_cycles
from .quandle import Quandle, from_table

KNOWN_FLAGS = ("transitive", "primitive", "quasiprimitive")


@dataclass
class CatalogRecord:
    label: str
    degree: int
    gen_strings: tuple
    flags: tuple
    provenance: str
    group: PermGroup | None = field(default=None, repr=False)

    def build_group(self) -> PermGroup:
        if self.group is None:
            gens = [parse_cycles(s, self.degree) for s in self.gen_strings]
            self.group = PermGroup(gens)
        return self.group


def parse_catalog(text: str):
    """Parse catalog text into records; errors carry line numbers."""
    records = []
    labels = set()
    current = None
    current_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "group":
            if current is not None:
                raise ValidationFailure(f"line {lineno}: record started before 'end'")
            if not rest:
                raise ValidationFailure(f"line {lineno}: empty group label")
            if rest in labels:
                raise ValidationFailure(f"line {lineno}: duplicate label {rest!r}")
            labels.add(rest)
            current = {"label": rest, "gens": [], "flags": (), "provenance": "", "degree": None}
            current_line = lineno
        elif current is None:
            raise ValidationFailure(f"line {lineno}: {key!r} outside a record")
        elif key == "degree":
            try:
                current["degree"] = int(rest)
            except ValueError:
                raise ValidationFailure(f"line {lineno}: bad degree {rest!r}") from None
            if current["degree"] < 1:
                raise ValidationFailure(f"line {lineno}: degree must be positive")
        elif key == "gen":
            if current["degree"] is None:
                raise ValidationFailure(f"line {lineno}: gen before degree")
            try:
                parse_cycles(rest, current["degree"])
            except ValueError as exc:
                raise ValidationFailure(f"line {lineno}: {exc}") from None
            current["gens"].append(rest)
        elif key == "flags":
            flags = tuple(f.strip() for f in rest.split(",") if f.strip())
            for f in flags:
                if f not in KNOWN_FLAGS:
                    raise ValidationFailure(f"line {lineno}: unknown flag {f!r}")
            current["flags"] = flags
        elif key == "provenance":
            current["provenance"] = rest
        elif key == "end":
            if current["degree"] is None:
                raise ValidationFailure(f"line {current_line}: record missing degree")
            if not current["gens"]:
                raise ValidationFailure(f"line {current_line}: record has no generators")
            records.append(
                CatalogRecord(
                    label=current["label"],
                    degree=current["degree"],
                    gen_strings=tuple(current["gens"]),
                    flags=current["flags"],
                    provenance=current["provenance"],
                )
            )
            current = None
        else:
            raise ValidationFailure(f"line {lineno}: unknown key {key!r}")
    if current is not None:
        raise ValidationFailure(f"line {current_line}: record not closed with 'end'")
    return records


def write_catalog(records) -> str:
    out = []
    for rec in records:
        out.append(f"group {rec.label}")
        out.append(f"degree {rec.degree}")
        for g in rec.gen_strings:
            out.append(f"gen {g}")
        if rec.flags:
            out.append("flags " + ",".join(rec.flags))
        if rec.provenance:
            out.append(f"provenance {rec.provenance}")
        out.append("end")
        out.append("")
    return "\n".join(out)


def verify_record_flags(rec: CatalogRecord, bound=None):
    """Check declared flags against the built group; witnesses in messages.

    Transitivity is always checked.  A primitive flag is checked directly; a
    quasiprimitive flag is implied by a verified primitive flag and otherwise
    checked through normal closures of class representatives.
    """
    from .group import DEFAULT_ELEMENT_BOUND

    bound = DEFAULT_ELEMENT_BOUND if bound is None else bound
    g = rec.build_group()
    if not g.is_transitive():
        orbit = g.orbit(1)
        raise ValidationFailure(
            f"record {rec.label!r}: not transitive, orbit of 1 is {orbit}"
        )
    if "primitive" in rec.flags:
        if not g.is_primitive():
            witness = None
            for b in range(2, g.degree + 1):
                system = g.minimal_block_system(1, b)
                if not system.is_trivial():
                    witness = system
                    break
            raise ValidationFailure(
                f"record {rec.label!r}: primitive flag fails, blocks {witness.classes}"
            )
    elif "quasiprimitive" in rec.flags:
        for rep in g.conjugacy_class_reps(bound):
            if rep.is_identity():
                continue
            ncl = g.normal_closure([rep])
            if len(ncl.orbit(1)) != g.degree:
                raise ValidationFailure(
                    f"record {rec.label!r}: quasiprimitive flag fails, normal closure "
                    f"of {rep.cycle_string()} has orbit {ncl.orbit(1)}"
                )


def load_catalog(text: str, verify: bool = True, build: bool = True):
    """Parse, optionally build groups and verify declared flags."""
    records = parse_catalog(text)
    if build:
        for rec in records:
            rec.build_group()
            if verify:
                verify_record_flags(rec)
    return records


def catalog_digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


# -- quandle table files ------------------------------------------------------


def parse_quandle_file(text: str) -> Quandle:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValidationFailure("empty quandle file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "quandle":
        raise ValidationFailure(f"bad header {lines[0]!r}, expected 'quandle <order>'")
    try:
        n = int(head[1])
    except ValueError:
        raise ValidationFailure(f"bad order {head[1]!r}") from None
    if n < 1:
        raise ValidationFailure("order must be positive")
    if len(lines) != n + 1:
        raise ValidationFailure(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for i, ln in enumerate(lines[1:], start=1):
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise ValidationFailure(f"row {i}: non-integer entry") from None
        if len(row) != n:
            raise ValidationFailure(f"row {i}: expected {n} entries, found {len(row)}")
        for v in row:
            if not 1 <= v <= n:
                raise ValidationFailure(f"row {i}: entry {v} outside 1..{n}")
        rows.append(row)
    return from_table(n, rows)


def write_quandle_file(q: Quandle) -> str:
    lines = [f"quandle {q.order}"]
    for i in range(q.order):
        lines.append(" ".join(str(int(v)) for v in q.table[i]))
    return "\n".join(lines) + "\n"


# -- bundled data ---------------------------------------------------------------


def bundled_text(name: str) -> str:
    return (resources.files("quandlekit") / "data" / name).read_text(encoding="utf-8")


def load_bundled_catalog(name: str, verify: bool = False):
    """Load a catalog shipped in quandlekit/data (pre-verified at build time)."""
    return load_catalog(bundled_text(name), verify=verify)
