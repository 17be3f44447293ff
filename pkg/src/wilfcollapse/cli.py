"""
Command-line front end: enumeration, Wilf classification, canonical forms,
generating functions, roots, and verification as reproducible batch runs.

Identical invocations produce byte-identical output.  Results go to stdout
unless --out is given; diagnostics go to stderr.  Exit codes: 0 success,
1 verification failure or data error, 2 usage error.

A flat key=value file passed with --config supplies defaults that explicit
flags override, for scripted runs.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .canonical import (
    canonical_class_count,
    canonical_pair,
    canonical_partition,
    format_canonical_pair,
    format_canonical_partition,
)
from .encodings import ClassId, format_element, generate, parse_element, to_permutation
from .engine import (
    collapse_csv,
    collapse_rows,
    gf_crosscheck,
    report_json,
    verify_completeness,
    verify_soundness,
    wilf_classes,
)
from .errors import GFMismatchError, ParseError
from .genfun import avoid_gf_layered, avoid_gf_sum_word, layered_root, lis_root
from .perms import format_perm


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wilfcollapse",
        description=(
            "Exact enumeration and Wilf-class verification for the four "
            "permutation classes avoiding 312 together with one further "
            "size-3 pattern."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, with_class=True, with_n=False, with_depth=False):
        p.add_argument("--config", help="flat key=value file of option defaults")
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--out", help="write output to this path instead of stdout")
        if with_class:
            p.add_argument("--class", dest="class_id", required=True,
                           choices=["c1", "c2", "c3", "c4"])
        if with_n:
            p.add_argument("--n", type=int, required=True)
        if with_depth:
            p.add_argument("--depth", type=int, default=16)

    p = sub.add_parser("enumerate", help="list all class members of one size")
    add_common(p, with_n=True)

    p = sub.add_parser("classify",
                       help="group size-n patterns by their avoider counting sequences")
    add_common(p, with_n=True, with_depth=True)

    p = sub.add_parser("canon", help="canonical form of a layered or sum-word pattern")
    add_common(p)
    p.add_argument("--element", required=True)

    p = sub.add_parser("gf", help="avoidance generating function of a pattern")
    add_common(p)
    p.add_argument("--pattern", required=True)
    p.add_argument("--expand", type=int, default=None, metavar="N",
                   help="also print series coefficients up to order N")

    p = sub.add_parser("roots", help="table of separating real roots")
    p.add_argument("--config", help="flat key=value file of option defaults")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.add_argument("--family", choices=["q", "layered"], required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-12)

    p = sub.add_parser("verify",
                       help="check the canonical grouping against brute force")
    add_common(p, with_n=True, with_depth=True)

    p = sub.add_parser("report", help="collapse table n, c_n, w_n, canonical count")
    add_common(p, with_depth=True)
    p.add_argument("--max-n", type=int, required=True)

    return parser


def _apply_config(argv: list[str]) -> list[str]:
    """Splice key=value pairs from a --config file in as defaults."""
    if "--config" not in argv:
        return argv
    at = argv.index("--config")
    if at + 1 >= len(argv):
        return argv
    path = argv[at + 1]
    injected: list[str] = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            injected += [f"--{key.strip()}", value.strip()]
    # Defaults go right after the subcommand so explicit flags win.
    return argv[:1] + injected + argv[1:]


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _cmd_enumerate(args) -> int:
    class_id = ClassId.from_string(args.class_id)
    elements = generate(class_id, args.n)
    if args.format == "json":
        payload = {
            "class": class_id.value,
            "n": args.n,
            "count": len(elements),
            "elements": [format_element(class_id, e) for e in elements],
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    else:
        rows = [
            [format_element(class_id, e), format_perm(to_permutation(class_id, e))]
            for e in elements
        ]
        _emit(_csv_text(["element", "permutation"], rows), args.out)
    return 0


def _cmd_classify(args) -> int:
    class_id = ClassId.from_string(args.class_id)
    report = wilf_classes(class_id, args.n, args.depth)
    count = canonical_class_count(class_id, args.n)
    if args.format == "json":
        _emit(report_json(report, count), args.out)
    else:
        text = "n,c_n,w_n,canonical_count\n"
        text += f"{args.n},{report.c_n},{report.w_n},{count}\n"
        _emit(text, args.out)
    return 0


def _cmd_canon(args) -> int:
    class_id = ClassId.from_string(args.class_id)
    if class_id is ClassId.AV_312_231:
        element = parse_element(class_id, args.element)
        _emit(format_canonical_partition(canonical_partition(element)) + "\n", args.out)
        return 0
    if class_id is ClassId.AV_312_321:
        element = parse_element(class_id, args.element)
        _emit(format_canonical_pair(canonical_pair(element)) + "\n", args.out)
        return 0
    print("canonical forms exist for classes c3 and c4 only", file=sys.stderr)
    return 2


def _cmd_gf(args) -> int:
    class_id = ClassId.from_string(args.class_id)
    pattern = parse_element(class_id, args.pattern)
    if class_id is ClassId.AV_312_231:
        gf = avoid_gf_layered(pattern)
    elif class_id is ClassId.AV_312_321:
        gf = avoid_gf_sum_word(pattern)
    else:
        print("generating functions cover classes c3 and c4 only", file=sys.stderr)
        return 2
    text = str(gf) + "\n"
    if args.expand is not None:
        coeffs = gf.expand(args.expand).integers()
        text += _csv_text(["n", "count"], [[k, c] for k, c in enumerate(coeffs)])
    _emit(text, args.out)
    return 0


def _cmd_roots(args) -> int:
    rows = []
    if args.family == "q":
        for n in range(1, args.max_n + 1):
            root = lis_root(n, args.tol)
            rows.append([root.kind, n, f"{root.value:.15f}"])
    else:
        for a in range(2, args.max_n + 1):
            root = layered_root(a, args.tol)
            rows.append([root.kind, a, f"{root.value:.15f}"])
    if args.format == "json":
        payload = [
            {"kind": kind, "index": index, "value": float(value)}
            for kind, index, value in rows
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit(_csv_text(["kind", "index", "value"], rows), args.out)
    return 0


def _cmd_verify(args) -> int:
    class_id = ClassId.from_string(args.class_id)
    lines = []
    failures = 0
    if class_id in (ClassId.AV_312_231, ClassId.AV_312_321):
        soundness = verify_soundness(class_id, args.n, args.depth)
        lines.append(
            f"soundness,{'ok' if soundness.ok else f'{len(soundness.violations)} violations'}"
        )
        failures += not soundness.ok
        completeness = verify_completeness(class_id, args.n, args.depth)
        status = "ok" if completeness.ok else f"{len(completeness.unseparated)} unseparated"
        lines.append(f"completeness,{status}")
        failures += not completeness.ok
        try:
            checked = gf_crosscheck(class_id, args.n, args.depth)
            lines.append(f"gf_crosscheck,ok ({checked} patterns)")
        except GFMismatchError as exc:
            lines.append(f"gf_crosscheck,failed: {exc}")
            failures += 1
    else:
        report = wilf_classes(class_id, args.n, args.depth)
        expected = canonical_class_count(class_id, args.n)
        ok = report.w_n == expected
        lines.append(f"wilf_count,{'ok' if ok else f'{report.w_n} != {expected}'}")
        failures += not ok
    _emit("check,result\n" + "\n".join(lines) + "\n", args.out)
    return 1 if failures else 0


def _cmd_report(args) -> int:
    class_id = ClassId.from_string(args.class_id)
    rows = collapse_rows(class_id, args.max_n, args.depth)
    if args.format == "json":
        payload = [
            {"n": r.n, "c_n": r.c_n, "w_n": r.w_n, "canonical_count": r.canonical_count}
            for r in rows
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit(collapse_csv(rows), args.out)
    return 0


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "classify": _cmd_classify,
    "canon": _cmd_canon,
    "gf": _cmd_gf,
    "roots": _cmd_roots,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        argv = _apply_config(argv)
    except OSError as exc:
        print(f"cannot read config: {exc}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, ParseError) else 1
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
