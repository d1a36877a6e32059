"""Command-line entry point: ``cagelift <verb> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .analysis import analyze
from .constructions import FAMILIES, ConstructionSpec
from .errors import CageLiftError
from .identification import IdentifySpec, identify
from .search import SearchProblem, search
from .voltage import SimpleGraph, VoltageGraph, lift
from .walks import certify

FORMATS = ("g6", "edges", "dot", "vg")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _sniff(text: str) -> str:
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head = line.split()[0]
        if head in ("vertex", "arc"):
            return "vg"
        if head == "n" or head.lstrip("-").isdigit():
            return "edges"
        return "g6"
    return "vg"


def load(path: str):
    """Read a voltage graph or simple graph, guessing the format from the content."""
    text = _read_text(path)
    kind = _sniff(text)
    if kind == "vg":
        return io.read_voltage_graph(text)
    if kind == "edges":
        return io.read_edge_list(text)
    graphs = io.read_graph6_file(text)
    if len(graphs) != 1:
        raise CageLiftError(f"{path}: expected one graph6 line, found {len(graphs)}")
    return graphs[0]


def load_simple(path: str, m: int | None = None) -> SimpleGraph:
    g = load(path)
    if isinstance(g, VoltageGraph):
        if m is None:
            raise CageLiftError(f"{path} holds a voltage graph; pass --m to lift it")
        return lift(g, m)
    return g


def load_voltage(path: str) -> VoltageGraph:
    g = load(path)
    if not isinstance(g, VoltageGraph):
        raise CageLiftError(f"{path} does not hold a voltage graph")
    return g


def render(g, fmt: str | None) -> str:
    if fmt is None:
        fmt = "vg" if isinstance(g, VoltageGraph) else "g6"
    if fmt == "dot":
        return io.export_dot(g)
    if isinstance(g, VoltageGraph):
        if fmt != "vg":
            raise CageLiftError(f"a voltage graph cannot be written as {fmt}; lift it first")
        return io.write_voltage_graph(g)
    if fmt == "g6":
        return io.write_graph6(g) + "\n"
    if fmt == "edges":
        return io.write_edge_list(g)
    raise CageLiftError("a simple graph cannot be written in the voltage-graph format")


def emit(args, text: str) -> None:
    if args.output and args.output != "-":
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------


def cmd_construct(args):
    params: tuple[int, ...] = ()
    if args.family == "G6":
        params = (args.alpha, args.beta)
    elif args.family == "G8":
        params = (args.alpha, args.beta, args.gamma, args.delta)
    if any(p is None for p in params):
        raise CageLiftError(f"{args.family} needs --alpha/--beta" + ("/--gamma/--delta" if len(params) == 4 else ""))
    spec = ConstructionSpec(args.family, args.t, params, args.h12_v)
    emit(args, render(spec.build(), args.format))


def cmd_lift(args):
    emit(args, render(lift(load_voltage(args.input), args.m), args.format or "g6"))


def cmd_analyze(args):
    report = analyze(load_simple(args.input, args.m), with_diameter=not args.no_diameter)
    emit(args, report.to_json() + "\n" if args.json else "\n".join(report.lines()) + "\n")


def cmd_certify(args):
    g = load_voltage(args.input)
    cert = certify(g, args.girth, range(args.m_min, args.m_max + 1), with_census=args.census)
    if args.json:
        data = {
            "target_girth": cert.target_girth,
            "verdicts": [
                {
                    "m": v.m,
                    "certified": v.certified,
                    "witness": None if v.witness is None else v.witness.describe(g),
                    "lift_cycle_length": None if v.witness is None else v.witness.length,
                }
                for v in cert.verdicts.values()
            ],
        }
        if cert.census:
            data["census"] = {
                "directed": cert.census.directed,
                "undirected": cert.census.undirected,
                "by_length": {str(k): c for k, c in cert.census.directed_by_length.items()},
                "sums": list(cert.census.sums),
            }
        emit(args, json.dumps(data, sort_keys=True) + "\n")
        return
    lines = ["m\tverdict\twitness"]
    for v in cert.verdicts.values():
        status = "certified" if v.certified else "violated"
        lines.append(f"{v.m}\t{status}\t{'-' if v.witness is None else v.witness.describe(g)}")
    if cert.census:
        c = cert.census
        lines.append(f"census max_len={c.max_len} directed={c.directed} undirected={c.undirected}")
        lines.extend(f"  length {k}: {n}" for k, n in c.directed_by_length.items())
        lines.append("  sums: " + " ".join(str(s) for s in c.sums))
    emit(args, "\n".join(lines) + "\n")


def cmd_identify(args):
    base = load_simple(args.base)
    pair = None
    if (args.x is None) != (args.y is None):
        raise CageLiftError("--x and --y go together")
    if args.x is not None:
        pair = (base.index_of(args.x), base.index_of(args.y))
    out = identify(IdentifySpec(base, args.girth, args.m, pair))
    emit(args, render(out, args.format or "g6"))


def cmd_search(args):
    g = load_voltage(args.skeleton)
    free = args.free
    if free is None:
        free = tuple(k for k, a in enumerate(g.arcs) if a.voltage)
    problem = SearchProblem(
        skeleton=g,
        free_arcs=free,
        target_girth=args.girth,
        m_set=args.m_set,
        value_range=args.range,
        strategy=args.strategy,
        seed=args.seed,
        budget=args.budget,
        max_solutions=args.max_solutions,
    )
    result = search(problem)
    if args.json:
        data = {
            "solutions": [list(v) for v, _ in result.assignments_found],
            "candidates_tried": result.candidates_tried,
            "budget_exhausted": result.budget_exhausted,
        }
        emit(args, json.dumps(data, sort_keys=True) + "\n")
    else:
        lines = []
        for values, _ in result.assignments_found:
            parts = []
            for k, x in zip(free, values):
                tail, head, _ = g.arc_names(k)
                parts.append(f"arc {tail} {head} {x}")
            lines.append("; ".join(parts))
        emit(args, "".join(line + "\n" for line in lines))
    note = "budget exhausted" if result.budget_exhausted else "done"
    print(
        f"{len(result.assignments_found)} solution(s), {result.candidates_tried} candidate(s) tried, {note}",
        file=sys.stderr,
    )


def cmd_convert(args):
    emit(args, render(load(args.input), args.format))


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write here instead of stdout")
    common.add_argument("--format", choices=FORMATS, help="output format")
    common.add_argument("--json", action="store_true", help="machine-readable report where supported")

    parser = argparse.ArgumentParser(prog="cagelift", description="Biregular cage constructions from voltage graphs.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("construct", parents=[common], help="emit a named voltage graph")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--t", type=int)
    for name in ("alpha", "beta", "gamma", "delta"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--h12-v", type=int, dest="h12_v")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("lift", parents=[common], help="lift a voltage graph over Z_m")
    p.add_argument("input")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("analyze", parents=[common], help="order, size, girth, bipartiteness, degrees, diameter")
    p.add_argument("input")
    p.add_argument("--m", type=int, help="lift a voltage-graph input first")
    p.add_argument("--no-diameter", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", parents=[common], help="girth verdict per modulus")
    p.add_argument("input")
    p.add_argument("--girth", type=int, required=True)
    p.add_argument("--m-min", type=int, default=3)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--census", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("identify", parents=[common], help="glue copies of a cubic graph at remote vertices")
    p.add_argument("--base", required=True)
    p.add_argument("--girth", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x")
    p.add_argument("--y")
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser("search", parents=[common], help="search voltage assignments on a skeleton")
    p.add_argument("--skeleton", required=True)
    p.add_argument("--free", type=parse_int_list, help="arc indices (default: every nonzero arc)")
    p.add_argument("--girth", type=int, required=True)
    p.add_argument("--m-set", type=parse_int_list, required=True)
    p.add_argument("--range", type=parse_range)
    p.add_argument("--strategy", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--max-solutions", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("convert", parents=[common], help="re-encode a graph")
    p.add_argument("input")
    p.set_defaults(func=cmd_convert)
    return parser


def _glue_negative_range(argv: list[str]) -> list[str]:
    # argparse takes "-6..6" for an option; fold it into "--range=-6..6"
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok == "--range":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--range={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative_range(argv))
    try:
        args.func(args)
    except (ValueError, OSError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"cagelift: {type(exc).__name__}: {msg}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
