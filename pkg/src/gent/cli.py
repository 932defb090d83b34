"""Command-line interface: ``gent <subcommand> ...``.

Graphs come from a DIMACS file or an inline generator (``--gen kneser 5 2``);
``--line-graph`` replaces the graph by its line graph first. Every command
prints one JSON object (``"schema": 1``) or a short text rendering.

Exit codes: 0 success, 1 input error, 2 iteration budget exhausted,
3 failed verification or internal consistency check.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path
from typing import Callable, Sequence

from . import __version__, config
from .closed_forms import bipartite_entropy
from .coloring import (
    chromatic_entropy_lower_bound,
    chromatic_number,
    clique_entropy,
    grundy_number,
    max_chi_H,
    min_entropy_details,
)
from .combinatorics import bipartition
from .corner import entropy_am, entropy_fw, max_entropy_distribution
from .counting import PointSet3D, bregman_bound, count_perfect_matchings, shearer_check
from .errors import ConsistencyError, GentError, NonConvergence
from .fractional import (
    format_rational,
    fractional_chromatic_number,
    fractional_clique_weights,
    fractional_edge_chromatic_witness,
)
from .graph import FAMILIES, Graph, bits, format_dimacs, generate, line_graph, parse_graph
from .prob import load_distribution
from .symmetry import (
    check_bipartite_symmetric,
    check_line_graph_symmetric,
    check_perfect_symmetric,
    is_perfect,
    numeric_symmetry_check,
)
from .verify import SUITES, run_suite

SCHEMA = 1
EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; here 2 means budget exhausted."""

    def error(self, message):
        raise UsageError(message)


# ------------------------------------------------------------------ inputs

def _load_graph(args) -> Graph:
    if args.gen:
        family, *params = args.gen
        try:
            ints = [int(x) for x in params]
        except ValueError:
            raise UsageError(f"generator parameters must be integers: {params}") from None
        g = generate(family, *ints)
    elif args.graph:
        text = sys.stdin.read() if args.graph == "-" else _read(args.graph)
        g = parse_graph(text)
    else:
        raise UsageError("give a DIMACS file or --gen FAMILY [PARAMS...]")
    if getattr(args, "line_graph", False):
        g, _ = line_graph(g)
    return g


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_dist(args, n: int):
    source = args.dist
    if source == "uniform":
        return load_distribution("uniform", n)
    return load_distribution(_read(source), n)


def _positive(kind: type, name: str) -> Callable[[str], object]:
    def parse(text: str):
        try:
            value = kind(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be a number") from None
        if not value > 0:
            raise argparse.ArgumentTypeError(f"{name} must be positive")
        return value

    return parse


# ------------------------------------------------------------------ commands

def cmd_entropy(args) -> dict:
    g = _load_graph(args)
    p = _load_dist(args, g.n)
    out: dict = {"n": g.n}
    if args.method in ("fw", "both"):
        out["fw"] = entropy_fw(g, p, args.tol, args.budget).to_json()
    if args.method in ("am", "both"):
        out["am"] = entropy_am(g, p, args.tol, args.budget).to_json()
    if args.method == "both":
        out["difference_bits"] = abs(out["fw"]["value_bits"] - out["am"]["value_bits"])
    if args.bipartite:
        out["bipartite_formula"] = bipartite_entropy(g, p, tol=args.tol).to_json()
    return out


def cmd_chromatic_entropy(args) -> dict:
    g = _load_graph(args)
    what = args.what
    if what == "min-entropy":
        p = _load_dist(args, g.n)
        return min_entropy_details(g, p).to_json(p)
    if what == "chromatic":
        chi, col = chromatic_number(g)
        return {"chromatic_number": chi, "classes": [bits(c) for c in col.classes]}
    if what == "grundy":
        gamma, col = grundy_number(g)
        return {"grundy_number": gamma, "classes": [bits(c) for c in col.classes]}
    if what == "max-chi-h":
        return max_chi_H(g).to_json()
    if what == "clique-entropy":
        p = _load_dist(args, g.n)
        return {"clique_entropy_bits": clique_entropy(g, p, args.tol)}
    return {"lower_bound_bits": chromatic_entropy_lower_bound(g)}


def cmd_fractional(args) -> dict:
    g = _load_graph(args)
    res = fractional_chromatic_number(g)
    value, y = fractional_clique_weights(g)
    return {
        "chi_f": format_rational(res.value),
        "log_chi_f_bits": math.log2(res.value) if res.value > 0 else None,
        "weights": [{"set": bits(s), "weight": format_rational(w)} for s, w in sorted(res.weights.items())],
        "clique_weights": [format_rational(v) for v in y],
        "dual_value": format_rational(value),
    }


def cmd_fractional_edge(args) -> dict:
    g = _load_graph(args)
    value, witness = fractional_edge_chromatic_witness(g)
    return {"chi_f_edge": format_rational(value),
            "odd_set_witness": None if witness is None else bits(witness)}


def cmd_max_entropy(args) -> dict:
    g = _load_graph(args)
    return max_entropy_distribution(g, args.tol).to_json()


def cmd_symmetry(args) -> dict:
    g = _load_graph(args)
    if args.line_of:
        return check_line_graph_symmetric(g).to_json()
    crit = args.criterion
    if crit == "auto":
        if g.n and min(g.degrees()) > 0 and bipartition(g) is not None:
            crit = "bipartite"
        elif g.n <= config.cap("perfect_vertices") and is_perfect(g):
            crit = "perfect"
        else:
            crit = "numeric"
    if crit == "bipartite":
        return check_bipartite_symmetric(g).to_json()
    if crit == "perfect":
        return check_perfect_symmetric(g).to_json()
    return numeric_symmetry_check(g, args.sym_tol).to_json()


def cmd_generate(args) -> dict | str:
    g = _load_graph(args)
    if args.format == "text":
        return format_dimacs(g, " ".join(args.gen or []))
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def cmd_counting(args) -> dict:
    if args.points:
        return {"shearer": shearer_check(PointSet3D.parse(_read(args.points))).to_json()}
    g = _load_graph(args)
    report = bregman_bound(g)
    return {"perfect_matchings": count_perfect_matchings(g), "bregman": report.to_json()}


# ------------------------------------------------------------------ parser

def _graph_args(p: argparse.ArgumentParser, line: bool = True):
    p.add_argument("graph", nargs="?", help="DIMACS graph file ('-' for stdin)")
    p.add_argument("--gen", nargs="+", metavar="ARG",
                   help=f"generator: FAMILY [PARAMS...]; families: {', '.join(FAMILIES)}")
    if line:
        p.add_argument("--line-graph", action="store_true", help="use the line graph of the input")


def _common_args(p: argparse.ArgumentParser):
    p.add_argument("--tol", type=_positive(float, "--tol"), default=config.DEFAULT_TOL,
                   help="solver tolerance in bits (default %(default)g)")
    p.add_argument("--budget", type=_positive(int, "--budget"), default=config.DEFAULT_BUDGET,
                   help="iteration budget (default %(default)d)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--no-timing", action="store_true", help="omit wall-clock timing for byte-stable output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gent", description="Graph entropy toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("entropy", help="graph entropy H_k(G,P)")
    _graph_args(p)
    _common_args(p)
    p.add_argument("--dist", default="uniform", help="JSON file with probabilities, or 'uniform'")
    p.add_argument("--method", choices=("fw", "am", "both"), default="fw")
    p.add_argument("--bipartite", action="store_true", help="also evaluate the bipartite closed form")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("chromatic-entropy", help="colorings: minimum entropy, chi, Grundy, bounds")
    _graph_args(p)
    _common_args(p)
    p.add_argument("--dist", default="uniform")
    p.add_argument("--what", default="min-entropy",
                   choices=("min-entropy", "chromatic", "grundy", "max-chi-h", "clique-entropy", "lower-bound"))
    p.set_defaults(func=cmd_chromatic_entropy)

    p = sub.add_parser("fractional", help="fractional chromatic number (exact LP)")
    _graph_args(p)
    _common_args(p)
    p.set_defaults(func=cmd_fractional)

    p = sub.add_parser("fractional-edge", help="fractional edge-chromatic number")
    _graph_args(p)
    _common_args(p)
    p.set_defaults(func=cmd_fractional_edge)

    p = sub.add_parser("max-entropy", help="distribution maximising H_k(G,P)")
    _graph_args(p)
    _common_args(p)
    p.set_defaults(func=cmd_max_entropy)

    p = sub.add_parser("symmetry", help="is the uniform distribution entropy-maximising?")
    _graph_args(p)
    _common_args(p)
    p.add_argument("--line-of", action="store_true",
                   help="decide for the line graph of the (regular) input")
    p.add_argument("--criterion", choices=("auto", "bipartite", "perfect", "numeric"), default="auto")
    p.add_argument("--sym-tol", type=_positive(float, "--sym-tol"), default=1e-4,
                   help="numeric verdict tolerance in bits (default %(default)g)")
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser("generate", help="print a generated graph")
    _graph_args(p)
    _common_args(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("counting", help="Shearer projections or Bregman permanent bound")
    _graph_args(p)
    _common_args(p)
    p.add_argument("--points", help="file of 'x y z' integer triples")
    p.set_defaults(func=cmd_counting)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--suite", choices=tuple(SUITES), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--full", action="store_true", help="splitting check over every graph with n <= 7")
    p.set_defaults(func=None)
    return parser


# ------------------------------------------------------------------ main

def _text(value, indent: str = "") -> str:
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, dict):
                lines.append(f"{indent}{k}:")
                lines.append(_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {json.dumps(v)}")
        return "\n".join(lines)
    return f"{indent}{value}"


def _emit(result, args, elapsed: float, out) -> None:
    if isinstance(result, str):
        out.write(result if result.endswith("\n") else result + "\n")
        return
    payload = {"schema": SCHEMA, "command": args.command, "result": result}
    if not getattr(args, "no_timing", False):
        payload["timing_s"] = round(elapsed, 6)
    if getattr(args, "format", "json") == "text":
        out.write(_text(payload) + "\n")
    else:
        out.write(json.dumps(payload, sort_keys=True) + "\n")


def _verify(args, out) -> int:
    checks = run_suite(args.suite, args.seed, args.full)
    for c in checks:
        out.write(json.dumps({"schema": SCHEMA, **c.to_json()}, sort_keys=True, default=str) + "\n")
    return EXIT_OK if all(c.passed for c in checks) else EXIT_VERIFY


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify":
            return _verify(args, out)
        start = time.perf_counter()
        result = args.func(args)
        _emit(result, args, time.perf_counter() - start, out)
        return EXIT_OK
    except UsageError as exc:
        err.write(f"gent: error: {exc}\n")
        return EXIT_INPUT
    except NonConvergence as exc:
        err.write(f"gent: budget exhausted: {exc}\n")
        return EXIT_BUDGET
    except ConsistencyError as exc:
        err.write(f"gent: consistency check failed: {exc}\n")
        return EXIT_VERIFY
    except (GentError, ValueError) as exc:
        err.write(f"gent: error: {exc}\n")
        return EXIT_INPUT
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
