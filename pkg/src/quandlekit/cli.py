"""Command-line interface.

Exit codes: 0 success (or isomorphic), 1 negative result (not isomorphic),
2 usage error, 3 validation failure, 4 resource bound exceeded.  Every
command ends with a machine-readable ``key=value`` summary line.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import (
    catalog_digest,
    load_catalog,
    parse_quandle_file,
    write_quandle_file,
)
from .construct import conj_quandle, affine_quandle
from .enumerate import (
    central_class_generators,
    classify_affine,
    enumerate_degree,
)
from .errors import ResourceBoundExceeded, ValidationFailure
from .group import PermGroup
from .perm import parse_cycles
from .quandle import (
    are_isomorphic,
    displacement_group,
    inner_group,
    is_connected,
    is_faithful,
    is_latin,
    is_simple,
)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _analysis_summary(q) -> str:
    inn = inner_group(q)
    dis = displacement_group(q)
    simple = is_simple(q)
    primitive = inn.is_primitive()
    faithful = is_faithful(q)
    qp = faithful and (primitive or inn.is_quasiprimitive())
    affine, _ = classify_affine(q, simple)
    return (
        f"order={q.order} inn={inn.order} dis={dis.order} "
        f"connected={_yn(inn.is_transitive())} faithful={_yn(faithful)} "
        f"latin={_yn(is_latin(q))} simple={_yn(simple)} "
        f"primitive={_yn(primitive)} quasiprimitive={_yn(qp)} affine={_yn(affine)}"
    )


def format_report(result) -> str:
    """One line per enumerated quandle, plus a header."""
    lines = [
        f"# degree={result.degree} mode={result.mode} raw={result.raw_total} "
        f"filtered={result.filtered_total} catalog={result.catalog_digest}"
    ]
    for e in result.entries:
        lines.append(
            f"[{result.degree},{e.index}] inn_order={e.inn_order} dis_order={e.dis_order} "
            f"simple={_yn(e.flags['simple'])} primitive={_yn(e.flags['primitive'])} "
            f"quasiprimitive={_yn(e.flags['quasiprimitive'])} affine={_yn(e.flags['affine'])} "
            f"src={e.source} rho={e.rho}"
        )
    return "\n".join(lines) + "\n"


def cmd_validate(args) -> int:
    try:
        q = parse_quandle_file(Path(args.file).read_text(encoding="utf-8"))
    except ValidationFailure as exc:
        print(f"invalid: {exc}")
        print("valid=no")
        return 3
    print(f"valid=yes order={q.order}")
    return 0


def cmd_analyze(args) -> int:
    q = parse_quandle_file(Path(args.file).read_text(encoding="utf-8"))
    print(_analysis_summary(q))
    return 0


def cmd_iso(args) -> int:
    q1 = parse_quandle_file(Path(args.file1).read_text(encoding="utf-8"))
    q2 = parse_quandle_file(Path(args.file2).read_text(encoding="utf-8"))
    images = are_isomorphic(q1, q2)
    if images is None:
        print("isomorphic=no")
        return 1
    witness = ",".join(str(v) for v in images)
    print(f"witness={witness}")
    print("isomorphic=yes")
    return 0


def cmd_conj(args) -> int:
    records = load_catalog(
        Path(args.catalog).read_text(encoding="utf-8"), verify=False
    )
    match = [r for r in records if r.label == args.group]
    if not match:
        raise ValidationFailure(f"no catalog record labeled {args.group!r}")
    group = match[0].build_group()
    rep = parse_cycles(args.rep, group.degree)
    if not group.contains(rep):
        raise ValidationFailure("representative is not in the group")
    q, _ = conj_quandle(group, rep)
    text = write_quandle_file(q)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    print(f"order={q.order} faithful={_yn(is_faithful(q))} simple={_yn(is_simple(q))}")
    return 0


def cmd_affine(args) -> int:
    rows = []
    for chunk in args.psi.split(";"):
        rows.append([int(tok) for tok in chunk.split(",")])
    q = affine_quandle(args.p, args.k, rows)
    text = write_quandle_file(q)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    print(f"order={q.order} latin={_yn(is_latin(q))} connected={_yn(is_connected(q))}")
    return 0


def cmd_enumerate(args) -> int:
    text = Path(args.catalog).read_text(encoding="utf-8")
    records = load_catalog(text, verify=False)
    result = enumerate_degree(
        args.degree,
        records,
        args.mode,
        verify_flags=not args.no_verify_flags,
        jobs=args.jobs,
        catalog_digest=catalog_digest(text),
    )
    entries = result.entries
    if args.non_affine_only:
        entries = [e for e in entries if not e.flags["affine"]]
    report = format_report(result)
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "report.txt").write_text(report, encoding="utf-8")
        for e in entries:
            name = f"q{result.degree}_{e.index}.qnd"
            (outdir / name).write_text(write_quandle_file(e.quandle), encoding="utf-8")
    sys.stdout.write(report)
    kept = len(entries)
    print(f"degree={args.degree} mode={args.mode} raw={result.raw_total} "
          f"filtered={result.filtered_total} kept={kept}")
    return 0


def cmd_oracle(args) -> int:
    from .oracle import enumerate_quandles

    counts = []
    simple_counts = []
    for n in range(1, args.max_order + 1):
        qs = enumerate_quandles(n)
        counts.append(len(qs))
        simple_counts.append(sum(1 for q in qs if is_simple(q)))
        print(f"order {n}: {len(qs)} quandles, {simple_counts[-1]} simple")
    print(
        "counts=" + ",".join(map(str, counts))
        + " simple=" + ",".join(map(str, simple_counts))
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandlekit",
        description="Construct, analyze and enumerate finite quandles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a quandle table file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("analyze", help="invariants and flags of a quandle file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("iso", help="isomorphism test for two quandle files")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(fn=cmd_iso)

    p = sub.add_parser("conj", help="conjugation quandle on a class of a catalog group")
    p.add_argument("--catalog", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--rep", required=True, help='class representative, e.g. "(1,2)"')
    p.add_argument("--out")
    p.set_defaults(fn=cmd_conj)

    p = sub.add_parser("affine", help="affine quandle on F_p^k")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--psi", required=True, help='matrix rows, e.g. "0,1;1,1"')
    p.add_argument("--out")
    p.set_defaults(fn=cmd_affine)

    p = sub.add_parser("enumerate", help="enumerate quandles for one degree of a catalog")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--catalog", required=True)
    p.add_argument("--mode", choices=("primitive", "quasiprimitive"), required=True)
    p.add_argument("--non-affine-only", action="store_true")
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-verify-flags", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("oracle", help="exhaustive enumeration of small orders")
    p.add_argument("--max-order", type=int, default=5)
    p.set_defaults(fn=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValidationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ResourceBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
