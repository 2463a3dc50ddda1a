"""``frob``: command-line front end.

Exit codes: 0 success, 2 bad input, 3 budget/size exceeded, 4 internal
invariant violated. Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .arith import CoprimePair, frobenius_two
from .audit import audit_sweep
from .engine import (
    candidate_points,
    evaluate,
    selmer_g,
    selmer_triple,
)
from .errors import DomainError, InvariantViolation, ResourceError
from .oracle import frobenius_oracle
from .region import classify_point, enumerate_exceptional, count_exceptional, linear_form
from .viz import RenderOptions, render_region_svg

EXIT_OK, EXIT_DOMAIN, EXIT_RESOURCE, EXIT_INVARIANT = 0, 2, 3, 4


@dataclass
class CommandResult:
    exit_code: int
    stdout_payload: str


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(self.format_usage() + f"{self.prog}: error: {message}\n")


class _UsageError(Exception):
    pass


def _point(text: str) -> tuple[int, int]:
    try:
        x, y = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y, got {text!r}") from None
    return x, y


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="frob", description="Frobenius numbers via lattice-point classification.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("two", help="g(a, b) for a coprime pair")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("three", help="g(a, b, c); generators in any order")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--method", choices=["formula", "oracle", "both"], default="formula")
    p.add_argument("--explain", action="store_true", help="show decomposition, case and winning candidate")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("exceptional", help="list exceptional third generators for (a, b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="colour and value of a lattice point")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("selmer", help="g(a, h*a + d, h*a + 2d)")
    p.add_argument("a", type=int)
    p.add_argument("h", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("audit", help="compare closed form and oracle over a sweep")
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--b-max", type=int, required=True)
    p.add_argument("--out", type=Path, help="write the JSON report here instead of stdout")
    p.add_argument("--figure", type=Path, help="also write a matplotlib summary figure (png/svg/pdf)")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("plot", help="SVG drawing of the lattice strip")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--out", type=Path)
    p.add_argument("--highlight", type=_point, action="append", metavar="X,Y")
    p.add_argument("--values", action="store_true", help="label points with their values")
    p.add_argument("--scale", type=float, default=24.0)
    return parser


def _emit(args, data: dict, text: str) -> str:
    return json.dumps(data, sort_keys=True) + "\n" if getattr(args, "json", False) else text + "\n"


def _cmd_two(args) -> str:
    pair = CoprimePair.of(args.a, args.b)
    g = frobenius_two(pair)
    return _emit(args, {"a": pair.a, "b": pair.b, "g": g}, f"g({pair.a}, {pair.b}) = {g}")


def _explain_lines(ev) -> list[str]:
    lines = []
    if ev.johnson_d > 1:
        lines.append(f"gcd(a, b) = {ev.johnson_d}: reduced via g = d*g(a/d, b/d, c) + c*(d-1)")
        if ev.inner is None:
            lines.append("inner semigroup contains 1, inner g = -1")
        else:
            lines.append(f"inner triple ({ev.inner.a}, {ev.inner.b}, {ev.inner.c}): g = {ev.inner.g}")
            lines.extend("  " + s for s in _explain_lines(ev.inner))
        return lines
    if ev.decomposition is None:
        lines.append("c is not exceptional: g(a, b, c) = g(a, b)")
        return lines
    dec = ev.decomposition
    pair = CoprimePair(ev.a, ev.b)
    lines.append(f"decomposition: c = {dec.l}*{ev.b} - {dec.h}*{ev.a}  (h={dec.h}, l={dec.l}, q={dec.q}, r={dec.r})")
    lines.append(f"case: {ev.case.value}")
    for p in candidate_points(pair, dec):
        mark = "  <- winner" if p.kind is ev.winner.kind else ""
        lines.append(f"  {p.kind.value}: (u, v) = ({p.u}, {p.v}), value {p.value_xy}{mark}")
    return lines


def _cmd_three(args) -> str:
    ev = None
    g_formula = g_oracle = None
    if args.method in ("formula", "both") or args.explain:
        ev = evaluate(args.a, args.b, args.c)
        a, b, c = ev.a, ev.b, ev.c
        g_formula = ev.g
    if args.method in ("oracle", "both"):
        if ev is None:
            # validates and sorts the same way as the formula path
            from .engine import _canonical_triple

            a, b, c = _canonical_triple(args.a, args.b, args.c)
        g_oracle = frobenius_oracle((a, b, c))
    head = f"g({a}, {b}, {c})"
    data = {"a": a, "b": b, "c": c}
    if args.method == "formula":
        data["g"] = g_formula
        text = f"{head} = {g_formula}"
    elif args.method == "oracle":
        data["g"] = g_oracle
        text = f"{head} = {g_oracle}"
    else:
        agree = g_formula == g_oracle
        data.update(g_formula=g_formula, g_oracle=g_oracle, agree=agree)
        if agree:
            data["g"] = g_formula
            text = f"{head} = {g_formula} (formula {g_formula}, oracle {g_oracle})"
        else:
            text = f"{head}: formula {g_formula}, oracle {g_oracle}"
            print(f"warning: closed form disagrees with oracle for {head}", file=sys.stderr)
    if args.explain:
        lines = _explain_lines(ev)
        text += "\n" + "\n".join(lines)
        data["case"] = ev.case.value
        if ev.decomposition is not None:
            dec = ev.decomposition
            data["decomposition"] = {"h": dec.h, "l": dec.l, "q": dec.q, "r": dec.r}
            data["winner"] = {"kind": ev.winner.kind.value, "u": ev.winner.u, "v": ev.winner.v,
                              "value": ev.winner.value_xy}
    return _emit(args, data, text)


def _cmd_exceptional(args) -> str:
    pair = CoprimePair.of(args.a, args.b)
    items = enumerate_exceptional(pair)
    assert len(items) == count_exceptional(pair)
    if args.json:
        data = {
            "a": pair.a,
            "b": pair.b,
            "count": len(items),
            "exceptional": [{"c": c, "x": p.x, "y": p.y} for c, p in items],
        }
        return json.dumps(data, sort_keys=True) + "\n"
    lines = [f"{len(items)} exceptional values for ({pair.a}, {pair.b})"]
    lines += [f"{c}\t({p.x}, {p.y})" for c, p in items]
    return "\n".join(lines) + "\n"


def _cmd_classify(args) -> str:
    pair = CoprimePair.of(args.a, args.b)
    colour = classify_point(pair, (args.x, args.y))
    value = linear_form(pair, (args.x, args.y))
    return _emit(
        args,
        {"a": pair.a, "b": pair.b, "x": args.x, "y": args.y, "color": colour.value, "value": value},
        f"({args.x}, {args.y}): {colour.value}, value {value}",
    )


def _cmd_selmer(args) -> str:
    g = selmer_g(args.a, args.h, args.d)
    a, b, c = selmer_triple(args.a, args.h, args.d)
    return _emit(args, {"a": a, "b": b, "c": c, "g": g}, f"g({a}, {b}, {c}) = {g}")


def _cmd_audit(args) -> str:
    report = audit_sweep(args.a_max, args.b_max, workers=args.workers)
    payload = report.to_json(indent=1) + "\n"
    if args.figure is not None:
        from .figures import plot_audit_summary

        plot_audit_summary(report, args.figure)
    wrong = len(report.disagreements())
    print(f"{len(report.records)} records, {wrong} disagreements", file=sys.stderr)
    if args.out is not None:
        args.out.write_text(payload)
        return ""
    return payload


def _cmd_plot(args) -> str:
    pair = CoprimePair.of(args.a, args.b)
    svg = render_region_svg(pair, RenderOptions(args.scale, args.values, args.highlight))
    if args.out is not None:
        args.out.write_text(svg)
        return ""
    return svg


COMMANDS = {
    "two": _cmd_two,
    "three": _cmd_three,
    "exceptional": _cmd_exceptional,
    "classify": _cmd_classify,
    "selmer": _cmd_selmer,
    "audit": _cmd_audit,
    "plot": _cmd_plot,
}


def run(argv) -> CommandResult:
    try:
        args = build_parser().parse_args(list(argv))
    except _UsageError as exc:
        print(str(exc), end="", file=sys.stderr)
        return CommandResult(EXIT_DOMAIN, "")
    except SystemExit as exc:  # --help
        return CommandResult(exc.code or 0, "")
    try:
        return CommandResult(EXIT_OK, COMMANDS[args.command](args))
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CommandResult(EXIT_DOMAIN, "")
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CommandResult(EXIT_RESOURCE, "")
    except (InvariantViolation, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return CommandResult(EXIT_INVARIANT, "")


def main(argv=None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout_payload)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
