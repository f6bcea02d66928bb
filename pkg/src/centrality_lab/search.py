"""Counterexample mining and the measure-by-axiom satisfiability matrix.

Scan order is fixed: increasing node count, then increasing edge bitmask
(canonical representatives in the same order when deduplicating). Parallel
runs hand out contiguous ranges of that order and merge in range order, so
the first witness never depends on the worker count.
"""

import os
import pickle
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .axioms import Axiom, CheckConfig, Status, Witness, check_axiom, run_axiom_suite
from .errors import BudgetExceeded, InvalidArguments
from .fixtures import check_fixture_verdict, fixtures_for
from .graph import Graph
from .isomorphism import MAX_DEDUP_N, MAX_LABELED_N, count_graphs, enumerate_graphs
from .measures import MEASURE_NAMES, cached_measure, measure_registry

JOBS_ENV = "CENTRALITY_LAB_JOBS"
MODES = ("exhaustive", "random")

# expected verdicts, True = satisfied; rows in MEASURE_NAMES order, columns A1..A6
EXPECTED_TABLE = {
    "uniform": (True, True, False, False, False, False),
    "degree": (True, True, True, True, False, False),
    "closeness": (True, True, True, True, False, False),
    "betweenness": (True, True, True, False, False, False),
    "weighted_degree": (True, True, True, True, False, False),
    "eigenvector": (True, False, True, False, False, True),
    "decaying_degree": (True, False, True, True, True, False),
}

KNOWN_DISCREPANCIES = {
    ("uniform", Axiom.STRUCTURAL_CONSISTENCY): (
        "expected violated, found vacuously satisfied: uniform scores are all equal, so no "
        "neighbour of u ever strictly outscores a neighbour of v and the premise never holds"
    ),
}


@dataclass(frozen=True)
class SearchBudget:
    n_max: int = 5
    mode: str = "exhaustive"
    random_samples: int = 1000
    edge_probability: float = 0.5
    seed: int = 0
    dedup_isomorphic: bool = False
    n_min: int = 2

    def __post_init__(self):
        if self.mode not in MODES:
            raise InvalidArguments(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.n_min < 1:
            raise InvalidArguments("n_min must be at least 1")
        if self.n_max < self.n_min:
            raise InvalidArguments(f"n_max ({self.n_max}) is below n_min ({self.n_min})")
        if not 0.0 < self.edge_probability < 1.0:
            raise InvalidArguments("edge_probability must lie strictly between 0 and 1")
        if self.random_samples < 1:
            raise InvalidArguments("random_samples must be at least 1")
        if self.mode == "exhaustive":
            limit = MAX_DEDUP_N if self.dedup_isomorphic else MAX_LABELED_N
            if self.n_max > limit:
                kind = "deduplicated" if self.dedup_isomorphic else "labeled"
                raise BudgetExceeded(f"exhaustive {kind} search supports n_max <= {limit}, got {self.n_max}")

    def scope(self, graphs_checked):
        if self.mode == "exhaustive":
            return {
                "kind": "exhaustive",
                "n_min": self.n_min,
                "n_max": self.n_max,
                "dedup_isomorphic": self.dedup_isomorphic,
                "graphs_checked": graphs_checked,
            }
        return {
            "kind": "sampled",
            "n_min": self.n_min,
            "n_max": self.n_max,
            "count": self.random_samples,
            "seed": self.seed,
            "edge_probability": self.edge_probability,
            "graphs_checked": graphs_checked,
        }


def resolve_jobs(jobs=None):
    """Worker count: the environment override, then ``jobs``, then the CPU count."""
    env = os.environ.get(JOBS_ENV)
    if env:
        try:
            jobs = int(env)
        except ValueError:
            raise InvalidArguments(f"{JOBS_ENV} must be an integer, got {env!r}") from None
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs < 1:
        raise InvalidArguments(f"jobs must be at least 1, got {jobs}")
    return jobs


def random_graphs(budget):
    """The seeded sample stream of random mode, as a list of graphs."""
    rng = random.Random(budget.seed)
    out = []
    for _ in range(budget.random_samples):
        n = rng.randint(budget.n_min, budget.n_max)
        mask = 0
        for slot in range(n * (n - 1) // 2):
            if rng.random() < budget.edge_probability:
                mask |= 1 << slot
        out.append(Graph.from_mask(n, mask))
    return out


def _segments(budget, pieces):
    """Split the scan into contiguous ``(n, start, stop)`` ranges, in scan order."""
    segs = []
    for n in range(budget.n_min, budget.n_max + 1):
        total = count_graphs(n, budget.dedup_isomorphic)
        step = max(1, -(-total // pieces))
        for start in range(0, total, step):
            segs.append((n, start, min(total, start + step)))
    return segs


def iter_budget_graphs(budget):
    if budget.mode == "random":
        yield from random_graphs(budget)
        return
    for n in range(budget.n_min, budget.n_max + 1):
        yield from enumerate_graphs(n, budget.dedup_isomorphic)


@dataclass
class SearchOutcome:
    measure_name: str
    axiom: Axiom
    witness: Optional[Witness]
    graphs_checked: int
    vacuous_count: int
    scope: dict

    @property
    def status(self):
        return Status.VIOLATED if self.witness is not None else Status.SATISFIED


def _scan(m, axiom, graphs, config):
    checked = vacuous = 0
    for g in graphs:
        verdict = check_axiom(m, axiom, g, config)
        checked += 1
        if verdict.vacuous:
            vacuous += 1
        if verdict.violated:
            return checked, vacuous, verdict.witness
    return checked, vacuous, None


def _scan_segment(m, axiom, config, budget, seg):
    n, start, stop = seg
    m = cached_measure(m, maxsize=4096)
    return _scan(m, axiom, enumerate_graphs(n, budget.dedup_isomorphic, start, stop), config)


def _scan_samples(m, axiom, config, graphs):
    return _scan(cached_measure(m, maxsize=4096), axiom, graphs, config)


def _picklable(obj):
    try:
        pickle.dumps(obj)
    except Exception:
        return False
    return True


def _merge(parts):
    """Combine per-range results in range order, truncating at the first witness."""
    checked = vacuous = 0
    for c, v, w in parts:
        checked += c
        vacuous += v
        if w is not None:
            return checked, vacuous, w
    return checked, vacuous, None


def search_axiom(m, axiom, budget=None, jobs=1, config=None):
    """Scan the budget for a violation of one axiom; a :class:`SearchOutcome`."""
    budget = budget or SearchBudget()
    config = config or CheckConfig()
    axiom = Axiom.parse(axiom)
    jobs = resolve_jobs(jobs)
    parallel = jobs > 1 and _picklable(m)
    if budget.mode == "random":
        graphs = random_graphs(budget)
        if parallel:
            step = -(-len(graphs) // jobs)
            chunks = [graphs[i : i + step] for i in range(0, len(graphs), step)]
            with ProcessPoolExecutor(jobs) as pool:
                parts = list(pool.map(_scan_samples, *zip(*[(m, axiom, config, c) for c in chunks])))
        else:
            parts = [_scan_samples(m, axiom, config, graphs)]
    elif parallel:
        segs = _segments(budget, jobs)
        with ProcessPoolExecutor(jobs) as pool:
            futures = [pool.submit(_scan_segment, m, axiom, config, budget, s) for s in segs]
            parts = [f.result() for f in futures]
    else:
        parts = [_scan(cached_measure(m, maxsize=4096), axiom, iter_budget_graphs(budget), config)]
    checked, vacuous, witness = _merge(parts)
    return SearchOutcome(m.name, axiom, witness, checked, vacuous, budget.scope(checked))


def find_counterexample(m, axiom, budget=None, jobs=1, config=None):
    """First witness against ``axiom`` in the budget's scan order, or None."""
    return search_axiom(m, axiom, budget, jobs, config).witness


# ---------------------------------------------------------------------------
# satisfiability matrix


@dataclass
class MatrixCell:
    measure_name: str
    axiom: Axiom
    status: Status
    evidence: dict
    witness: Optional[Witness] = None
    graphs_checked: int = 0
    vacuous_count: int = 0
    expected_satisfied: Optional[bool] = None
    note: Optional[str] = None

    @property
    def violated(self):
        return self.status is Status.VIOLATED

    @property
    def vacuous(self):
        return not self.violated and self.graphs_checked > 0 and self.vacuous_count == self.graphs_checked

    @property
    def matches_expected(self):
        if self.expected_satisfied is None:
            return None
        return self.expected_satisfied == (not self.violated)

    def to_json(self):
        return {
            "measure": self.measure_name,
            "axiom": self.axiom.label,
            "status": self.status.value,
            "vacuous": self.vacuous,
            "vacuous_count": self.vacuous_count,
            "graphs_checked": self.graphs_checked,
            "expected": None if self.expected_satisfied is None else ("satisfied" if self.expected_satisfied else "violated"),
            "matches_expected": self.matches_expected,
            "evidence": self.evidence,
            "witness": None if self.witness is None else self.witness.to_json(),
            "note": self.note,
        }


@dataclass
class SatisfiabilityMatrix:
    budget: SearchBudget
    cells: dict = field(default_factory=dict)  # (measure_name, Axiom) -> MatrixCell
    measures: tuple = MEASURE_NAMES
    abbrevs: dict = field(default_factory=dict)

    def cell(self, measure_name, axiom):
        return self.cells[(measure_name, Axiom.parse(axiom))]

    def row(self, measure_name):
        return [self.cells[(measure_name, ax)] for ax in Axiom]

    @property
    def match_count(self):
        return sum(1 for c in self.cells.values() if c.matches_expected)

    @property
    def mismatches(self):
        return [c for c in self.cells.values() if c.matches_expected is False]

    def to_json(self):
        return {
            "budget": {
                "n_min": self.budget.n_min,
                "n_max": self.budget.n_max,
                "mode": self.budget.mode,
                "random_samples": self.budget.random_samples,
                "edge_probability": self.budget.edge_probability,
                "seed": self.budget.seed,
                "dedup_isomorphic": self.budget.dedup_isomorphic,
            },
            "axioms": [ax.label for ax in Axiom],
            "rows": [
                {
                    "measure": name,
                    "abbrev": self.abbrevs.get(name, name),
                    "cells": [c.to_json() for c in self.row(name)],
                }
                for name in self.measures
            ],
            "matches_expected": self.match_count,
            "cell_count": len(self.cells),
        }


def _sweep_measure(m, axioms, budget, config):
    """Run a measure's open axioms over the whole budget; plain tuples for pickling."""
    cm = cached_measure(m)
    results = run_axiom_suite(cm, iter_budget_graphs(budget), config, axioms)
    return {
        ax: (r.witness, r.graphs_checked, r.vacuous_count)
        for ax, r in results.items()
    }


def build_satisfiability_matrix(budget=None, jobs=1, include_fixtures=True, config=None, beta=1, measures=None):
    """Fill every (measure, axiom) cell with a witness or a verification scope.

    A cell is settled by a fixture first when one reproduces a violation;
    every other cell is swept over the budget. Axiom 1 is checked against
    all relabelings of each graph.
    """
    budget = budget or SearchBudget()
    config = config or CheckConfig(a1_exhaustive=True)
    handles = [m for m in measure_registry(beta) if measures is None or m.name in measures]
    matrix = SatisfiabilityMatrix(budget, measures=tuple(m.name for m in handles))
    matrix.abbrevs = {m.name: m.abbrev for m in handles}

    pending = {}
    for m in handles:
        open_axioms = []
        for ax in Axiom:
            cell = None
            if include_fixtures:
                for fx in fixtures_for(m.name, ax):
                    for exp in fx.verdicts:
                        if exp.measure != m.name or exp.axiom is not ax or not exp.violated:
                            continue
                        verdict = check_fixture_verdict(fx, exp, config)
                        if verdict.violated:
                            cell = MatrixCell(
                                m.name,
                                ax,
                                Status.VIOLATED,
                                {"kind": "witness", "source": f"fixture:{fx.id}"},
                                verdict.witness,
                                graphs_checked=1,
                            )
                            break
                    if cell:
                        break
            if cell:
                matrix.cells[(m.name, ax)] = cell
            else:
                open_axioms.append(ax)
        if open_axioms:
            pending[m.name] = (m, open_axioms)

    jobs = resolve_jobs(jobs)
    if jobs > 1 and len(pending) > 1:
        with ProcessPoolExecutor(min(jobs, len(pending))) as pool:
            futures = {name: pool.submit(_sweep_measure, m, axs, budget, config) for name, (m, axs) in pending.items()}
            swept = {name: f.result() for name, f in futures.items()}
    else:
        swept = {name: _sweep_measure(m, axs, budget, config) for name, (m, axs) in pending.items()}

    for name, per_axiom in swept.items():
        for ax, (witness, checked, vacuous) in per_axiom.items():
            if witness is not None:
                evidence = {"kind": "witness", "source": "search", "scope": budget.scope(checked)}
                status = Status.VIOLATED
            else:
                evidence = budget.scope(checked)
                status = Status.SATISFIED
            matrix.cells[(name, ax)] = MatrixCell(name, ax, status, evidence, witness, checked, vacuous)

    for (name, ax), cell in matrix.cells.items():
        expected = EXPECTED_TABLE.get(name)
        cell.expected_satisfied = None if expected is None else expected[ax - 1]
        if cell.matches_expected is False:
            cell.note = KNOWN_DISCREPANCIES.get(
                (name, ax),
                "differs from the expected verdict within this budget",
            )
    return matrix
