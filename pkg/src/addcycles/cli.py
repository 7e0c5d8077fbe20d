"""Command-line front end.

Exit status: 0 on success, 1 when a check or admissibility test fails,
2 on syntax or parameter errors.  Results go to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import verify as _verify
from .boundary import boundary, check_admissible
from .catalog import CATALOG
from .dsl import evaluate, parse
from .errors import AddCycleError, DSLSyntaxError
from .regulator import regulator_points
from .tensor import g_map

__all__ = ["main"]

MAX_SHOWN = 5


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def _cycle(args):
    return evaluate(parse(args.expr), repaired=args.repaired)


def cmd_boundary(args):
    z = boundary(_cycle(args))
    _emit(args, {"expr": args.expr, "boundary": z.to_json(), "text": str(z)}, str(z))
    return 0


def cmd_regulator(args):
    z = _cycle(args)
    total = Fraction(0)
    rows = []
    disagree = False
    for coeff, scale, curve in z.terms():
        weight = coeff * scale.cube()
        for pv in regulator_points(curve, crosscheck=args.crosscheck):
            total += weight * pv.value
            disagree = disagree or pv.disagrees
            rows.append({
                "curve": str(curve),
                "weight": str(weight),
                "point": str(pv.point),
                "branch": pv.branch,
                "value": str(pv.value),
                "alt_value": None if pv.alt_value is None else str(pv.alt_value),
            })
    if disagree:
        print("warning: the two modulus branches disagree at some point", file=sys.stderr)
    if args.json:
        payload = {"expr": args.expr, "value": str(total)}
        if args.per_point or args.crosscheck:
            payload["points"] = rows
        _emit(args, payload, "")
    else:
        if args.per_point:
            for r in rows:
                alt = f"  (other branch: {r['alt_value']})" if r["alt_value"] is not None else ""
                print(f"{r['weight']} x [{r['curve']} at t={r['point']}, {r['branch']}] {r['value']}{alt}")
        print(total)
    return 1 if disagree else 0


def cmd_tensor(args):
    t = g_map(boundary(_cycle(args)))
    _emit(args, t.to_json(), str(t))
    return 0


def cmd_admissible(args):
    z = _cycle(args)
    reports = [check_admissible(c) for c in z.curves()]
    ok = all(r.admissible for r in reports)
    lines = []
    for r in reports:
        mark = "ok" if r.admissible else "FAIL"
        lines.append(f"{mark}  {r.curve}")
        for v in r.violations:
            lines.append(f"      {v}")
    lines.append("admissible" if ok else "not admissible")
    _emit(args, {"admissible": ok, "curves": [r.to_json() for r in reports]}, "\n".join(lines))
    return 0 if ok else 1


def cmd_verify(args):
    verdicts = _verify.run(args.check or None, samples=args.samples, seed=args.seed, repaired=args.repaired)
    if args.json:
        print(json.dumps([v.to_json() for v in verdicts], indent=2, ensure_ascii=False))
    else:
        for v in verdicts:
            fails = v.failures
            print(f"{v.id:<4} {v.status:<5} {v.description}  [{len(v.witnesses) - len(fails)}/{len(v.witnesses)}]")
            for w in fails[:MAX_SHOWN]:
                print(f"       {w.input}: {w.claim}")
                print(f"         expected {w.expected}")
                print(f"         computed {w.computed}")
            if len(fails) > MAX_SHOWN:
                print(f"       ... {len(fails) - MAX_SHOWN} more")
            for n in v.notes:
                print(f"       note: {n}")
    return 0 if all(v.status == "pass" for v in verdicts) else 1


def cmd_catalog(args):
    rows = [
        {"name": e.name, "arity": e.arity, "paper_anchor": e.anchor, "description": e.description}
        for e in CATALOG.values()
    ]
    text = "\n".join(f"{r['name']:<10} {r['description']}\n{'':<10} {r['paper_anchor']}" for r in rows)
    _emit(args, rows, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--repaired", action="store_true",
                        help="use the sign-corrected catalog edition instead of the printed one")

    p = argparse.ArgumentParser(prog="addcycles", description="Exact computations with additive 1-cycles.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, help_ in [
        ("admissible", cmd_admissible, "check faces and the modulus condition"),
        ("boundary", cmd_boundary, "boundary 0-cycle"),
        ("regulator", cmd_regulator, "regulator value R2"),
        ("tensor", cmd_tensor, "image of the boundary in Q ⊗ Q×"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("expr", help='cycle expression, e.g. "Gamma1 + C1(1/2,1/2;2)"')
        sp.set_defaults(fn=fn)
        if name == "regulator":
            sp.add_argument("--crosscheck", action="store_true",
                            help="evaluate both modulus branches where both apply")
            sp.add_argument("--per-point", action="store_true", help="show each local contribution")

    sp = sub.add_parser("verify", parents=[common], help="run the claim checks")
    sp.add_argument("--check", action="append", choices=sorted(_verify.CHECKS, key=lambda s: int(s[1:])),
                    help="check id (repeatable); default all")
    sp.add_argument("--samples", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("catalog", parents=[common], help="list named cycles")
    sp.set_defaults(fn=cmd_catalog)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except DSLSyntaxError as exc:
        print(f"syntax error: {exc}\n{exc.caret()}", file=sys.stderr)
        return 2
    except (AddCycleError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
