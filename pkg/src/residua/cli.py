"""Command line interface: ``residua <subcommand> [flags] [args]``.

Negative positional numbers may need a ``--`` separator, e.g.
``residua congruent -- -9 16 5``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
import warnings
from dataclasses import dataclass, field

from . import classes, integers, powers, render, suites, systems
from .errors import ResidueError

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Report:
    text: str
    data: object
    rows: list[dict] | None = None
    status: int = EXIT_OK
    jsonl: str | None = None
    svg: str | None = None
    notes: list[str] = field(default_factory=list)


def _cls_text(c: classes.ResidueClass) -> str:
    return str(c)


def _class_report(c: classes.ResidueClass) -> Report:
    return Report(_cls_text(c), c.to_json())


def cmd_congruent(args) -> Report:
    m = integers.Modulus(args.m)
    ok = integers.congruent(args.b, args.c, m)
    sym = "≡" if ok else "≢"
    return Report(
        f"{args.b} {sym} {args.c} (mod {m})",
        {"b": args.b, "c": args.c, "mod": int(m), "congruent": ok},
        status=EXIT_OK if ok else EXIT_FALSE,
    )


def cmd_residues(args) -> Report:
    lr = classes.least_residues(args.a, args.m)
    text = (
        f"least positive: {lr.least_positive}\n"
        f"least negative: {lr.least_negative}\n"
        f"absolutely least: {lr.absolutely_least}"
    )
    return Report(text, {"a": args.a, "mod": int(integers.Modulus(args.m)), **lr.to_json()})


def cmd_classify(args) -> Report:
    return _class_report(classes.classify(args.a, args.m))


def cmd_add(args) -> Report:
    return _class_report(classes.add(classes.classify(args.x, args.m), classes.classify(args.y, args.m)))


def cmd_mul(args) -> Report:
    return _class_report(classes.mul(classes.classify(args.x, args.m), classes.classify(args.y, args.m)))


def cmd_pow(args) -> Report:
    return _class_report(classes.power(classes.classify(args.x, args.m), args.k))


def _parse_term(s: str) -> tuple[int, int]:
    try:
        coef, _, exp = s.partition(":")
        return int(coef), int(exp or 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad term {s!r}; expected COEF:EXP") from None


def cmd_poly(args) -> Report:
    x = classes.classify(args.x, args.m)
    return _class_report(classes.eval_poly(args.terms, x))


def cmd_project(args) -> Report:
    return _class_report(classes.project(classes.classify(args.x, args.m), args.d))


def _system_report(s: systems.ResidueSystem) -> Report:
    text = f"{s.kind} system mod {s.modulus}: " + " ".join(map(str, s.members))
    rows = [{"member": v, "class": r} for v, r in zip(s.members, s.classes())]
    return Report(text, s.to_json(), rows)


def cmd_system(args) -> Report:
    kind = systems.REDUCED if args.reduced else systems.COMPLETE
    if not args.members:
        s = systems.reduced_system(args.m) if args.reduced else systems.canonical_complete_system(args.m)
        return _system_report(s)
    check = systems.is_reduced_system if args.reduced else systems.is_complete_system
    ok = check(args.members, args.m)
    m = integers.Modulus(args.m)
    return Report(
        f"{'is' if ok else 'is not'} a {kind} system mod {m}",
        {"mod": int(m), "kind": kind, "members": args.members, "valid": ok},
        status=EXIT_OK if ok else EXIT_FALSE,
    )


def cmd_affine(args) -> Report:
    base = systems.canonical_complete_system(args.m)
    return _system_report(systems.affine_image(args.a, args.b, base))


def cmd_window(args) -> Report:
    r = systems.window_representative(args.a, args.m, args.A)
    return Report(str(r), {"start": args.a, "mod": int(integers.Modulus(args.m)), "target": args.A, "member": r})


def cmd_gcd(args) -> Report:
    g = integers.gcd(args.a, args.b)
    return Report(str(g), {"a": args.a, "b": args.b, "gcd": g})


def cmd_totient(args) -> Report:
    phi = integers.totient(args.k)
    return Report(str(phi), {"k": int(integers.Modulus(args.k)), "totient": phi})


def cmd_order(args) -> Report:
    t = powers.multiplicative_order(args.a, args.m).t
    return Report(str(t), {"a": args.a, "mod": int(integers.Modulus(args.m)), "order": t})


def cmd_period(args) -> Report:
    ps = powers.period_structure(args.a, args.m)
    tail = " ".join(str(c.rep) for c in ps.tail)
    cyc = " ".join(str(c.rep) for c in ps.cycle)
    text = f"preperiod {ps.preperiod}, period {ps.period}\ntail: {tail}\ncycle: {cyc}"
    rows = [{"index": i, "class": c.rep, "part": "tail"} for i, c in enumerate(ps.tail)]
    rows += [
        {"index": ps.preperiod + i, "class": c.rep, "part": "cycle"} for i, c in enumerate(ps.cycle)
    ]
    return Report(text, {"a": args.a, "mod": int(integers.Modulus(args.m)), **ps.to_json()}, rows)


def cmd_fermat(args) -> Report:
    r = powers.fermat_euler_check(args.a, args.k)
    k = integers.Modulus(args.k)
    phi = integers.totient(k)
    ok = r == classes.classify(1, k)
    return Report(
        f"{args.a}^{phi} ≡ {r.rep} (mod {k})",
        {"a": args.a, "mod": int(k), "totient": phi, **r.to_json(), "holds": ok},
        status=EXIT_OK if ok else EXIT_FALSE,
    )


def cmd_trace(args) -> Report:
    tr = powers.binomial_proof_trace(args.p, args.a_max)
    ok = tr.check()
    lines = [f"{s.a}^{tr.p} - {s.a} = {s.value} = {tr.p} * {s.witness}" for s in tr.steps]
    rows = [s.to_json() for s in tr.steps]
    return Report(
        "\n".join(lines),
        [s.to_json() for s in tr.steps],
        rows,
        status=EXIT_OK if ok else EXIT_FALSE,
        jsonl=tr.to_jsonl(),
    )


def cmd_render(args) -> Report:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        spec = render.LineRenderSpec(args.m, args.lo, args.hi, tuple(args.highlight or ()), grays=args.grays)
    rows = [
        {"value": v, "class": spec.color_index(v), "color": spec.color(v), "highlight": v in spec.highlights}
        for v in spec.values
    ]
    data = {"mod": int(spec.m), "lo": spec.lo, "hi": spec.hi, "cells": rows}
    rep = Report(render.render_text(spec, color=args.use_color), data, rows, svg=render.render_svg(spec))
    rep.notes = [str(w.message) for w in caught]
    return rep


def cmd_suite(args) -> Report:
    if args.name not in suites.SUITES:
        raise UsageError(f"unknown suite {args.name!r}; choose from {', '.join(suites.SUITES)}")
    if not 1 <= args.bound <= suites.MAX_BOUND:
        raise UsageError(f"bound must be in 1..{suites.MAX_BOUND}")
    t0 = time.perf_counter()
    res = suites.run_suite(args.name, args.bound, keep_rows=args.format == "csv")
    elapsed = time.perf_counter() - t0
    text = f"suite {res.name} up to {res.bound}: {res.cases} cases, {len(res.counterexamples)} counterexamples"
    rep = Report(text, res.to_json(), res.rows, status=EXIT_OK if res.ok else EXIT_FALSE)
    if res.cases == 0:
        rep.notes.append(f"suite {res.name} with bound {res.bound} runs no cases")
    rep.notes.append(f"elapsed {elapsed:.3f}s")
    return rep


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=["text", "json", "csv", "svg"], default="text")
    p.add_argument("--color", choices=["auto", "always", "never"], default="auto")
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="residua",
        description="Residue arithmetic. Put '--' before negative positional numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, func, help, *arguments):
        p = sub.add_parser(name, help=help)
        for a, kw in arguments:
            p.add_argument(a, **kw)
        _add_common(p)
        p.set_defaults(func=func)
        return p

    I = {"type": int}
    cmd("congruent", cmd_congruent, "test b ≡ c (mod m)", ("b", I), ("c", I), ("m", I))
    cmd("residues", cmd_residues, "least residues of a", ("a", I), ("m", I))
    cmd("classify", cmd_classify, "residue class of a", ("a", I), ("m", I))
    cmd("add", cmd_add, "x + y (mod m)", ("x", I), ("y", I), ("m", I))
    cmd("mul", cmd_mul, "x * y (mod m)", ("x", I), ("y", I), ("m", I))
    cmd("pow", cmd_pow, "x ** k (mod m)", ("x", I), ("k", I), ("m", I))
    cmd(
        "poly", cmd_poly, "evaluate sum of COEF*x**EXP (mod m)",
        ("x", I), ("m", I), ("terms", {"type": _parse_term, "nargs": "*", "metavar": "COEF:EXP"}),
    )
    cmd("project", cmd_project, "reduce class x mod m to a divisor d", ("x", I), ("m", I), ("d", I))
    p = cmd(
        "system", cmd_system, "canonical system mod m, or check MEMBERS",
        ("m", I), ("members", {"type": int, "nargs": "*"}),
    )
    p.add_argument("--reduced", action="store_true", help="reduced instead of complete")
    cmd("affine", cmd_affine, "image of 0..m-1 under x -> a*x + b", ("a", I), ("b", I), ("m", I))
    cmd("window", cmd_window, "member of a..a+m-1 congruent to A", ("a", I), ("m", I), ("A", I))
    cmd("gcd", cmd_gcd, "greatest common divisor", ("a", I), ("b", I))
    cmd("totient", cmd_totient, "Euler's totient", ("k", I))
    cmd("order", cmd_order, "multiplicative order of a mod m", ("a", I), ("m", I))
    cmd("period", cmd_period, "period structure of 1, a, a^2, ... mod m", ("a", I), ("m", I))
    cmd("fermat", cmd_fermat, "a ** totient(k) mod k", ("a", I), ("k", I))
    cmd("trace", cmd_trace, "binomial induction trace for p | a^p - a", ("p", I), ("a_max", I))
    p = cmd("render", cmd_render, "colored integer line", ("m", I), ("lo", I), ("hi", I))
    p.add_argument(
        "--highlight", action="extend", metavar="N[,N...]",
        type=lambda s: [int(v) for v in s.split(",") if v],
        help="mark these integers",
    )
    p.add_argument("--grays", action="store_true", help="shade by absolute least residue, dark for 0")
    cmd(
        "suite", cmd_suite, "exhaustive theorem sweep",
        ("name", {"help": ", ".join(suites.SUITES)}), ("bound", I),
    )
    return parser


def _to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if rows:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    return buf.getvalue()


def _format(rep: Report, fmt: str, command: str) -> str:
    if fmt == "svg":
        if rep.svg is None:
            raise UsageError("--format svg is only valid for render")
        return rep.svg
    if fmt == "json":
        if rep.jsonl is not None:
            return rep.jsonl
        return json.dumps(rep.data, ensure_ascii=False) + "\n"
    if fmt == "csv":
        rows = rep.rows
        if rows is None:
            data = rep.data if isinstance(rep.data, dict) else {"value": rep.data}
            rows = [{k: v for k, v in data.items() if not isinstance(v, (list, dict))}]
        return _to_csv(rows)
    return rep.text + "\n"


def _use_color(choice: str, out) -> bool:
    if choice == "always":
        return True
    if choice == "never":
        return False
    return out is None and sys.stdout.isatty() and "NO_COLOR" not in os.environ


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    args.use_color = _use_color(args.color, args.out)
    try:
        rep = args.func(args)
        payload = _format(rep, args.format, args.command)
    except (UsageError, ResidueError) as e:
        print(f"residua {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    for note in rep.notes:
        print(f"residua {args.command}: {note}", file=sys.stderr)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return rep.status


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
