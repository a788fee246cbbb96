"""``symq`` command line.

Exit status: 0 on success, 1 for bad input or a failed check, 2 when a size
guard or the closure budget stops the computation.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from importlib import resources

from . import algebra
from .algebra import (
    RackTable,
    SymmetricQuandleTable,
    conjugation_quandle,
    cyclic_group,
    dihedral_quandle,
    double_cover,
    enumerate_good_involutions,
    symmetric_group,
    table_to_json,
    table_to_text,
    trivial_quandle,
)
from .diagram import (
    Diagram,
    flip_normals,
    load_diagram,
    oriented_presentation_from_diagram,
    parse_pd,
    pd_to_diagram,
    presentation_from_diagram,
    save_diagram,
)
from .errors import SizeGuardError, SymqError
from .invariants import count_colorings, enumerate_colorings
from .presentation import (
    Budget,
    abelianization,
    associated_group,
    eliminate_generator,
    load_presentation,
    merge_aliases,
    search_equal,
    simplify,
)
from .targets import builtin_target


class UsageError(SymqError):
    pass


def read_source(arg: str) -> str:
    """``-`` is stdin; otherwise a file path, then a bundled data file, then inline text."""
    if arg == "-":
        return sys.stdin.read()
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    bundled = resources.files("symq").joinpath("data", arg)
    if bundled.is_file():
        return bundled.read_text(encoding="utf-8")
    if any(ch in arg for ch in " \n[{="):
        return arg
    raise UsageError(f"no such file: {arg}")


def _quandle_source(args) -> RackTable | SymmetricQuandleTable:
    if getattr(args, "dihedral", None) is not None:
        return dihedral_quandle(args.dihedral)
    if getattr(args, "trivial", None) is not None:
        return trivial_quandle(args.trivial)
    if getattr(args, "builtin", None):
        return builtin_target(args.builtin)
    if getattr(args, "table", None):
        return algebra.load_table(read_source(args.table))
    raise UsageError("give a table file or one of --dihedral, --trivial, --builtin")


def _plain(t):
    return t.quandle if isinstance(t, SymmetricQuandleTable) else t


def _emit_table(args, t) -> None:
    print(table_to_json(t) if args.json else table_to_text(t))


def _diagram(args) -> Diagram:
    if getattr(args, "pd", None):
        pd = parse_pd(read_source(args.pd))
        d = pd_to_diagram(pd)
    elif getattr(args, "diagram", None):
        d = load_diagram(read_source(args.diagram))
    else:
        raise UsageError("give --pd or --diagram")
    if getattr(args, "flip", None):
        d = flip_normals(d, [d.label_index(x.strip()) for x in args.flip.split(",") if x.strip()])
    return d


def _target(spec: str) -> tuple[str, SymmetricQuandleTable]:
    try:
        return spec, builtin_target(spec)
    except ValueError:
        t = algebra.load_table(read_source(spec))
        if not isinstance(t, SymmetricQuandleTable):
            raise UsageError(f"target {spec} has no 'rho' line")
        return spec, t


# --- subcommands -------------------------------------------------------------

def cmd_check(args) -> int:
    t = _quandle_source(args)
    if isinstance(t, SymmetricQuandleTable) and args.kind in ("auto", "symmetric"):
        verdict = algebra.verify_good_involution(t, exhaustive=args.exhaustive)
    elif args.kind == "symmetric":
        raise UsageError("table has no involution")
    elif args.kind == "rack":
        verdict = algebra.verify_rack(_plain(t), exhaustive=args.exhaustive)
    else:
        verdict = algebra.verify_quandle(_plain(t), exhaustive=args.exhaustive)
    if args.json:
        print(json.dumps({"ok": verdict.ok, "axiom": verdict.axiom, "witness": list(verdict.witness),
                          "violations": [[a, list(w)] for a, w in verdict.violations]}))
    else:
        print(verdict)
    return 0 if verdict else 1


def _format_perm(p) -> str:
    return "identity" if list(p) == list(range(len(p))) else " ".join(map(str, p))


def cmd_good_involutions(args) -> int:
    t = _plain(_quandle_source(args))
    found = enumerate_good_involutions(t, limit=args.limit, max_n=args.max_n)
    if args.json:
        print(json.dumps({"involutions": [list(p) for p in found.items], "truncated": found.truncated}))
    else:
        for p in found.items:
            print(_format_perm(p))
        if found.truncated:
            print("truncated", file=sys.stderr)
    return 0


def cmd_double_cover(args) -> int:
    _emit_table(args, double_cover(_plain(_quandle_source(args))))
    return 0


def cmd_dihedral(args) -> int:
    t = dihedral_quandle(args.n)
    if args.rho:
        t = SymmetricQuandleTable(t, [int(v) for v in args.rho.split(",")])
    _emit_table(args, t)
    return 0


def cmd_conj(args) -> int:
    if args.cyclic is not None:
        g = cyclic_group(args.cyclic)
    else:
        g = symmetric_group(args.symmetric)
    _emit_table(args, conjugation_quandle(g))
    return 0


def cmd_pd(args) -> int:
    d = _diagram(argparse.Namespace(pd=args.code, flip=args.flip))
    print(save_diagram(d))
    return 0


def cmd_present(args) -> int:
    d = _diagram(args)
    p = oriented_presentation_from_diagram(d) if args.oriented else presentation_from_diagram(d)
    _emit_presentation(args, p)
    return 0


def _emit_presentation(args, p) -> None:
    if args.json:
        print(p.to_json())
    else:
        print(p.to_text(), end="")


def _presentation(args):
    if getattr(args, "presentation", None):
        return load_presentation(read_source(args.presentation))
    return presentation_from_diagram(_diagram(args))


def cmd_eliminate(args) -> int:
    p = _presentation(args)
    for step in args.step:
        name, sep, rel = step.rpartition(":")
        if not sep:
            raise UsageError(f"--step needs GENERATOR:RELATION, got {step!r}")
        p = eliminate_generator(p, name, int(rel))
    if args.merge_aliases:
        p = merge_aliases(p)
    if args.simplify:
        p = simplify(p)
    _emit_presentation(args, p)
    return 0


def cmd_group(args) -> int:
    g = associated_group(_presentation(args))
    factors = abelianization(g)
    if args.json:
        data = json.loads(g.to_json())
        data["invariant_factors"] = factors
        print(json.dumps(data))
    else:
        print(g.to_text() + "factors " + " ".join(map(str, factors)))
    return 0


def cmd_color(args) -> int:
    d = _diagram(args)
    targets = [_target(s) for s in args.target]
    if args.enumerate:
        out = {}
        for name, t in targets:
            found = enumerate_colorings(d, t, limit=args.limit)
            out[name] = {"colorings": [list(c) for c in found], "truncated": found.truncated}
        if len(targets) == 1 and not args.json:
            print(json.dumps(out[targets[0][0]]["colorings"]))
        else:
            print(json.dumps(out))
        return 0
    counts = [(name, count_colorings(d, t)) for name, t in targets]
    label = args.pd or args.diagram
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["diagram", "target", "count"])
        for name, n in counts:
            writer.writerow([label, name, n])
        print(buf.getvalue(), end="")
    elif args.json:
        print(json.dumps({name: n for name, n in counts}))
    elif len(counts) == 1:
        print(counts[0][1])
    else:
        for name, n in counts:
            print(f"{name} {n}")
    return 0


def cmd_prove(args) -> int:
    p = _presentation(args)
    try:
        length, pairs = (int(v) for v in args.budget.split(","))
    except ValueError:
        raise UsageError("--budget takes L,M (word length, pair count)") from None
    lhs, rhs = p.element(args.lhs), p.element(args.rhs)
    result, closure = search_equal(p, lhs, rhs, Budget(length, pairs))
    if args.json:
        print(json.dumps({"result": result.value, "pairs": len(closure), "saturated": closure.saturated}))
    else:
        print(result.value)
    if not result and not closure.saturated:
        print(f"closure budget exhausted after {len(closure)} pairs", file=sys.stderr)
        return 2
    return 0


# --- parser -------------------------------------------------------------------

def _add_quandle_source(sp, table_positional=True) -> None:
    if table_positional:
        sp.add_argument("table", nargs="?", help="table file (text rows or JSON), '-' for stdin")
    sp.add_argument("--dihedral", type=int, metavar="N")
    sp.add_argument("--trivial", type=int, metavar="N")
    sp.add_argument("--builtin", metavar="NAME")


def _add_diagram_source(sp) -> None:
    sp.add_argument("--pd", metavar="CODE", help="PD code text or file")
    sp.add_argument("--diagram", metavar="FILE", help="diagram JSON")
    sp.add_argument("--flip", metavar="LABELS", help="comma-separated semi-sheet labels whose normals are reversed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symq", description="Symmetric quandles and knot colorings.")
    parser.add_argument("--json", action="store_true", help="JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="verify rack/quandle/good-involution axioms")
    _add_quandle_source(sp)
    sp.add_argument("--kind", choices=("auto", "rack", "quandle", "symmetric"), default="auto")
    sp.add_argument("--exhaustive", action="store_true")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("good-involutions", help="list good involutions")
    _add_quandle_source(sp)
    sp.add_argument("--limit", type=int)
    sp.add_argument("--max-n", type=int, default=algebra.DEFAULT_MAX_N)
    sp.set_defaults(func=cmd_good_involutions)

    sp = sub.add_parser("double-cover", help="double cover with the swap involution")
    _add_quandle_source(sp)
    sp.set_defaults(func=cmd_double_cover)

    sp = sub.add_parser("dihedral", help="dihedral quandle R_n")
    sp.add_argument("n", type=int)
    sp.add_argument("--rho", help="comma-separated involution")
    sp.set_defaults(func=cmd_dihedral)

    sp = sub.add_parser("conj", help="conjugation quandle with inversion")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--cyclic", type=int, metavar="N")
    group.add_argument("--symmetric", type=int, metavar="K")
    sp.set_defaults(func=cmd_conj)

    sp = sub.add_parser("pd", help="PD code to diagram JSON")
    sp.add_argument("code", help="PD code text or file")
    sp.add_argument("--flip", metavar="LABELS")
    sp.set_defaults(func=cmd_pd)

    sp = sub.add_parser("present", help="presentation of a diagram")
    _add_diagram_source(sp)
    sp.add_argument("--oriented", action="store_true", help="quandle presentation on sheets")
    sp.set_defaults(func=cmd_present)

    sp = sub.add_parser("eliminate", help="eliminate generators")
    sp.add_argument("--presentation", metavar="FILE")
    _add_diagram_source(sp)
    sp.add_argument("--step", action="append", default=[], metavar="GEN:REL",
                    help="eliminate GEN using relation REL (0-based); repeatable")
    sp.add_argument("--merge-aliases", action="store_true",
                    help="also eliminate generators equated with another generator")
    sp.add_argument("--simplify", action="store_true", help="normalize relations")
    sp.set_defaults(func=cmd_eliminate)

    sp = sub.add_parser("group", help="associated group and its abelianization")
    sp.add_argument("--presentation", metavar="FILE")
    _add_diagram_source(sp)
    sp.set_defaults(func=cmd_group)

    sp = sub.add_parser("color", help="count colorings")
    _add_diagram_source(sp)
    sp.add_argument("--target", action="append", required=True,
                    help="built-in name or table file with a rho line; repeatable")
    sp.add_argument("--enumerate", action="store_true")
    sp.add_argument("--limit", type=int)
    sp.add_argument("--csv", action="store_true")
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("prove", help="search for a proof that two elements are equal")
    sp.add_argument("--presentation", metavar="FILE")
    _add_diagram_source(sp)
    sp.add_argument("lhs")
    sp.add_argument("rhs")
    sp.add_argument("--budget", default="4,10000", metavar="L,M")
    sp.set_defaults(func=cmd_prove)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"symq: {exc}", file=sys.stderr)
        return 2
    except (SymqError, ValueError, OSError) as exc:
        print(f"symq: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
