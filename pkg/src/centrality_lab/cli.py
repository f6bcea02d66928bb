"""``centrality-lab`` command line.

Exit codes: 0 success, 1 a violation was found and ``--fail-on-violation``
was given, 2 bad usage or unreadable input.
"""

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .axioms import Axiom, CheckConfig, check_axiom
from .errors import CentralityLabError
from .fixtures import FIXTURE_IDS, export_fixtures, paper_fixture
from .graphio import parse_graph, read_graph
from .measures import DEFAULT_EC_TOL, MEASURE_NAMES, get_measure, measure_registry
from .report import FORMATS, render_centralities, render_fixture_list, render_matrix, render_search, render_verdicts
from .search import SearchBudget, build_satisfiability_matrix, search_axiom

FIXTURE_PREFIX = "fixture:"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def load_graph(spec):
    """A graph from a path, ``-`` for stdin, or ``fixture:<id>``; also returns the fixture if any."""
    if spec.startswith(FIXTURE_PREFIX):
        fx = paper_fixture(spec[len(FIXTURE_PREFIX) :])
        return fx.graph, fx
    if spec == "-":
        return parse_graph(sys.stdin.read()), None
    path = Path(spec)
    if not path.is_file():
        raise UsageError(f"graph file not found: {spec}")
    return read_graph(path), None


def _measures(text, beta, tol):
    if text.strip().lower() == "all":
        return measure_registry(beta, tol)
    return [get_measure(part, beta, tol) for part in text.split(",") if part.strip()]


def _axioms(text):
    if text.strip().lower() == "all":
        return list(Axiom)
    return [Axiom.parse(part) for part in text.split(",") if part.strip()]


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {text!r}")
    return value


def _nonneg_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def build_parser():
    p = _Parser(prog="centrality-lab", description="Centrality measures and their axioms on small undirected graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--decimal", type=_nonneg_int, metavar="K", help="print values as K-digit decimals")
    common.add_argument("--beta", type=_fraction, default=Fraction(1), help="uniform centrality value (default 1)")
    common.add_argument("--tol", type=float, default=DEFAULT_EC_TOL, help="eigenvector convergence tolerance")

    budget = _Parser(add_help=False)
    budget.add_argument("--n-max", "--exhaustive-n", dest="n_max", type=_positive_int, default=5)
    budget.add_argument("--n-min", dest="n_min", type=_positive_int, default=2)
    budget.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    budget.add_argument("--samples", type=_positive_int, default=1000, help="random-mode sample count")
    budget.add_argument("--edge-probability", type=float, default=0.5, help="random-mode edge density")
    budget.add_argument("--seed", type=int, default=0)
    budget.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    budget.add_argument("--jobs", type=_positive_int, help="worker processes (env CENTRALITY_LAB_JOBS wins)")

    c = sub.add_parser("compute", parents=[common], help="centrality values of a graph")
    c.add_argument("--graph", required=True, help="edge-list or JSON file, '-' or fixture:<id>")
    c.add_argument("--measure", default="all", help=f"'all' or comma list of {', '.join(MEASURE_NAMES)}")

    k = sub.add_parser("check", parents=[common], help="check axioms on one graph")
    k.add_argument("--graph", required=True)
    k.add_argument("--measure", default="all")
    k.add_argument("--axiom", default="all", help="'all' or comma list of 1-6")
    k.add_argument(
        "--edge",
        nargs=2,
        type=int,
        metavar=("U", "V"),
        help="edge to add for axioms 4 and 5 (default: every non-edge; a fixture's own edge for fixtures)",
    )
    k.add_argument("--all-edges", action="store_true", help="ignore a fixture's own edge")
    k.add_argument("--trials", type=_positive_int, default=20, help="random relabelings for axiom 1")
    k.add_argument("--exhaustive-relabel", action="store_true", help="axiom 1 over all n! relabelings")
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("--fail-on-violation", action="store_true")

    s = sub.add_parser("search", parents=[common, budget], help="mine a counterexample")
    s.add_argument("--measure", required=True)
    s.add_argument("--axiom", required=True)
    s.add_argument("--fail-on-violation", action="store_true")

    m = sub.add_parser("matrix", parents=[common, budget], help="satisfiability matrix of all measures and axioms")
    m.add_argument("--no-fixtures", action="store_true", help="settle every cell by search alone")

    f = sub.add_parser("fixtures", help="the built-in counterexample graphs")
    fsub = f.add_subparsers(dest="action", required=True, parser_class=_Parser)
    fl = fsub.add_parser("list")
    fl.add_argument("--format", choices=FORMATS, default="plain")
    fl.add_argument("--out")
    fe = fsub.add_parser("export")
    fe.add_argument("directory")
    fe.add_argument("--ids", help=f"comma list from {', '.join(FIXTURE_IDS)}")
    return p


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _budget(args):
    return SearchBudget(
        n_max=args.n_max,
        mode=args.mode,
        random_samples=args.samples,
        edge_probability=args.edge_probability,
        seed=args.seed,
        dedup_isomorphic=args.dedup,
        n_min=args.n_min,
    )


def _cmd_compute(args):
    g, fx = load_graph(args.graph)
    vectors = [m(g) for m in _measures(args.measure, args.beta, args.tol)]
    labels = None
    if fx is not None:
        labels = [fx.label(u) for u in range(g.n)]
    _emit(render_centralities(g, vectors, args.format, args.decimal, labels), args.out)
    return 0


def _cmd_check(args):
    g, fx = load_graph(args.graph)
    edges = None
    if args.edge:
        edges = [tuple(args.edge)]
    elif fx is not None and fx.added_edge is not None and not args.all_edges:
        edges = [fx.added_edge]
    if edges:
        u, v = edges[0]
        if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
            raise UsageError(f"--edge {u} {v} is not a pair of distinct nodes of the graph")
        if g.has_edge(u, v):
            raise UsageError(f"--edge {u} {v} is already an edge")
    config = CheckConfig(a1_trials=args.trials, a1_exhaustive=args.exhaustive_relabel, seed=args.seed)
    verdicts = []
    for m in _measures(args.measure, args.beta, args.tol):
        for ax in _axioms(args.axiom):
            verdicts.append(check_axiom(m, ax, g, config, edges))
    _emit(render_verdicts(verdicts, args.format, args.decimal), args.out)
    return 1 if args.fail_on_violation and any(v.violated for v in verdicts) else 0


def _cmd_search(args):
    m = get_measure(args.measure, args.beta, args.tol)
    outcome = search_axiom(m, Axiom.parse(args.axiom), _budget(args), args.jobs)
    _emit(render_search(outcome, args.format, args.decimal), args.out)
    return 1 if args.fail_on_violation and outcome.witness is not None else 0


def _cmd_matrix(args):
    matrix = build_satisfiability_matrix(
        _budget(args), args.jobs, include_fixtures=not args.no_fixtures, beta=args.beta
    )
    _emit(render_matrix(matrix, args.format, args.decimal), args.out)
    return 0


def _cmd_fixtures(args):
    if args.action == "list":
        _emit(render_fixture_list(args.format), args.out)
        return 0
    ids = [i.strip() for i in args.ids.split(",")] if args.ids else None
    for path in export_fixtures(args.directory, ids):
        print(path)
    return 0


COMMANDS = {
    "compute": _cmd_compute,
    "check": _cmd_check,
    "search": _cmd_search,
    "matrix": _cmd_matrix,
    "fixtures": _cmd_fixtures,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"centrality-lab: error: {exc}", file=sys.stderr)
        return 2
    except (CentralityLabError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"centrality-lab: error: {msg}", file=sys.stderr)
        return 2


run_cli = main


if __name__ == "__main__":
    sys.exit(main())
