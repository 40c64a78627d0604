"""Randomized validity sweeps and the exhaustive cycle-partition sweep.

Violations are collected, not raised: a sweep is a measurement instrument, and
any entry in ``violations`` points at a defect in the solver or in a
transcribed formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graphs import Graph, from_graph6, graph6_str, is_connected
from .params import structural_params, srg_verdict
from .spectral import laplacian_spectrum
from .bounds import (compute_bounds, classical_bounds, master_inequality,
                     master_tolerance, alpha1_beta1)
from .certify import certify_graph, equality_conditions
from .families import CyclePartition, cycle_partitions, kn_minus_cycles, predict_family

_MASK64 = (1 << 64) - 1


class Xorshift64Star:
    """Deterministic, platform-independent PRNG (xorshift64*).

    State update:  x ^= x >> 12;  x ^= (x << 25) & (2^64 - 1);  x ^= x >> 27.
    Output:        (x * 0x2545F4914F6CDD1D) & (2^64 - 1).

    The seed passes through one splitmix64 scramble so that any 64-bit seed,
    including 0, produces a nonzero state.  Streams are reproducible across
    platforms and languages implementing the same recurrence.
    """

    def __init__(self, seed: int):
        z = (int(seed) + 0x9E3779B97F4A7C15) & _MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        z ^= z >> 31
        self._state = z if z != 0 else 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self._state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK64
        x ^= x >> 27
        self._state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK64

    def random(self) -> float:
        """Uniform float in [0, 1) from the top 53 output bits."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] (modulo reduction; spans here are tiny)."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.next_u64() % (hi - lo + 1)


def random_graph(n: int, p: float, rng: Xorshift64Star) -> Graph:
    """Independent edges with probability p, pairs drawn in row-major order."""
    adj = np.zeros((n, n), dtype=bool)
    for i in range(n - 1):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i, j] = adj[j, i] = True
    return Graph(n, adj)


def random_connected(n: int, p: float, rng, max_tries: int = 1000) -> Graph:
    """Edge-probability sample conditioned on connectivity by rejection."""
    if n < 2:
        raise ValueError("need at least two vertices")
    if not 0.0 < p < 1.0:
        raise ValueError(f"edge probability must be in (0, 1), got {p}")
    if isinstance(rng, int):
        rng = Xorshift64Star(rng)
    for _ in range(max_tries):
        g = random_graph(n, p, rng)
        if is_connected(g):
            return g
    raise RuntimeError(
        f"no connected sample in {max_tries} tries at n={n}, p={p}; raise p")


@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 4
    n_max: int = 12
    samples: int = 500
    edge_probabilities: tuple = (0.3, 0.5, 0.8)
    seed: int = 7
    validity_tol: float = 1e-9
    tightness_tol: float = 1e-7

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if not 2 <= self.n_min <= self.n_max:
            raise ValueError(f"bad order range [{self.n_min}, {self.n_max}]")


@dataclass(frozen=True)
class Violation:
    graph6: str
    bound: str
    lhs: float
    rhs: float
    gap: float
    context: str = ""

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "bound": self.bound, "lhs": self.lhs,
                "rhs": self.rhs, "gap": self.gap, "context": self.context}


@dataclass
class SweepResult:
    graphs_tested: int = 0
    violations: list = field(default_factory=list)
    tight_instances: list = field(default_factory=list)
    diagnostics: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "graphs_tested": self.graphs_tested,
            "violations": [v.to_dict() for v in self.violations],
            "tight_instances": [dict(t) for t in self.tight_instances],
            "diagnostics": list(self.diagnostics),
        }


def _check_graph(g: Graph, cfg: SweepConfig, result: SweepResult) -> None:
    """Run every validity, tightness, and equality check on one graph."""
    tol = cfg.validity_tol
    g6 = graph6_str(g)
    params = structural_params(g)
    spectrum = laplacian_spectrum(g)
    index = float(spectrum.values[0])
    conn = float(spectrum.values[g.n - 2])
    spread = index - conn

    def violate(bound, lhs, rhs, context=""):
        result.violations.append(Violation(g6, bound, float(lhs), float(rhs),
                                           float(lhs - rhs), context))

    # Degree-only bounds hold regardless of lam/mu.
    cl = classical_bounds(g, params=params)
    for name, value in (("anderson_morley", cl.anderson_morley), ("merris", cl.merris),
                        ("rojo", cl.rojo), ("li_pan", cl.li_pan), ("zhang", cl.zhang)):
        if index > value + tol:
            violate(name, index, value)
    if cl.grone_merris > index + tol:
        violate("grone_merris", cl.grone_merris, index)
    if conn > cl.fiedler_kappa + tol:
        violate("fiedler_kappa", conn, cl.fiedler_kappa)
    if cl.fiedler_kappa > cl.fiedler_delta + tol:
        violate("kappa_le_delta", cl.fiedler_kappa, cl.fiedler_delta)
    # Per-vertex dominance of the zhang term over the li_pan term.
    d = params.degrees.astype(float)
    s = params.avg2_num.astype(float)
    zhang_terms = d + np.sqrt(s)
    li_pan_terms = np.sqrt(2.0 * d * (d + params.avg2))
    worst = int(np.argmax(zhang_terms - li_pan_terms))
    if zhang_terms[worst] > li_pan_terms[worst] + tol:
        violate("zhang_dominates_li_pan", zhang_terms[worst], li_pan_terms[worst],
                context=f"vertex {worst}")

    lam_g = params.min_common_adjacent
    mu_g = params.min_common_nonadjacent
    choices = [("zero", 0, 0)]
    if lam_g is not None:
        choices.append(("half", lam_g, 0))
    if lam_g is not None and mu_g is not None:
        choices.append(("min", lam_g, mu_g))

    for label, lam, mu in choices:
        bs = compute_bounds(g, lam, mu, params=params, include_kappa=False)
        comparisons = [
            ("alpha1", bs.alpha1, "upper", index),
            ("alpha2", bs.alpha2, "upper", index),
            ("beta1", bs.beta1, "lower", conn),
            ("beta2", bs.beta2, "lower", conn),
            ("spread_vertex", bs.spread_vertex, "upper", spread),
            ("spread_degree", bs.spread_degree, "upper", spread),
            ("spread_regular", bs.spread_regular, "upper", spread),
        ]
        for name, value, kind, target in comparisons:
            if value is None:
                continue
            if kind == "upper" and target > value + tol:
                violate(name, target, value, context=label)
            if kind == "lower" and value > target + tol:
                violate(name, value, target, context=label)
            if label == "min" and abs(value - target) <= cfg.tightness_tol:
                result.tight_instances.append({"graph6": g6, "bound": name})
        # The master inequality for every nontrivial eigenpair.
        for value, vector in spectrum.nontrivial_pairs():
            lhs = master_inequality(g, value, vector, lam, mu, params=params, check=False)
            budget = master_tolerance(g, vector, params=params)
            if lhs > budget:
                violate("master_inequality", lhs, budget,
                        context=f"{label}, eigenvalue {value:.6g}")

    # Equality biconditional at the graph's own minima, per basis vector.
    if lam_g is not None and mu_g is not None:
        for value, vector in spectrum.nontrivial_pairs():
            lhs = master_inequality(g, value, vector, lam_g, mu_g,
                                    params=params, check=False)
            budget = master_tolerance(g, vector, params=params)
            near_zero = abs(lhs) <= budget
            holds = equality_conditions(g, value, vector, params=params,
                                        check=False).holds
            if near_zero != holds:
                violate("master_equality_biconditional", lhs, budget,
                        context=f"eigenvalue {value:.6g}, conditions "
                                f"{'hold' if holds else 'fail'}")
            elif holds:
                which = ("master_index" if abs(value - index) <= cfg.tightness_tol
                         else "master_connectivity" if abs(value - conn) <= cfg.tightness_tol
                         else "master_inner")
                result.tight_instances.append({"graph6": g6, "bound": which})
        # Diagnostic only: alpha1 should not grow when lam grows at fixed mu.
        a_min, _ = alpha1_beta1(g, lam_g, mu_g, params=params)
        a_zero, _ = alpha1_beta1(g, 0, mu_g, params=params)
        if a_min is not None and a_zero is not None and a_min > a_zero + tol:
            result.diagnostics.append(
                f"{g6}: alpha1 increased with lam ({a_zero:.6g} -> {a_min:.6g})")

    result.graphs_tested += 1


def validity_sweep(cfg: SweepConfig) -> SweepResult:
    """Sample connected graphs and run the full check battery on each."""
    rng = Xorshift64Star(cfg.seed)
    result = SweepResult()
    probs = cfg.edge_probabilities
    for _ in range(cfg.samples):
        n = rng.randint(cfg.n_min, cfg.n_max)
        p = probs[rng.randint(0, len(probs) - 1)]
        g = random_connected(n, p, rng)
        _check_graph(g, cfg, result)
    return result


def sweep_graph6_stream(lines, cfg: SweepConfig | None = None) -> SweepResult:
    """Run the check battery on newline-delimited graph6 input."""
    cfg = cfg or SweepConfig()
    result = SweepResult()
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        g = from_graph6(line)
        if not is_connected(g):
            result.diagnostics.append(f"line {lineno}: skipped disconnected graph")
            continue
        _check_graph(g, cfg, result)
    return result


# ---------------------------------------------------------------------------
# The exhaustive sweep over complete-graph-minus-cycles partitions.

# Bounds that must be attained by the regular family rows with t >= 2 and an
# even part, on top of master-inequality equality at both spectrum extremes.
FAMILY_TIGHT_BOUNDS = ("alpha1", "beta1", "spread_vertex",
                       "alpha2", "beta2", "spread_degree")


@dataclass(frozen=True)
class PartitionRow:
    partition: tuple
    n: int
    lam: int
    mu: int
    srg: bool
    index: float
    connectivity: float
    predicted_index: float
    predicted_connectivity: float
    published_index: float
    matches: bool
    extremal_expected: bool
    extremal_confirmed: bool | None

    def to_dict(self) -> dict:
        return {
            "partition": list(self.partition), "n": self.n,
            "lam": self.lam, "mu": self.mu, "srg": self.srg,
            "index": self.index, "connectivity": self.connectivity,
            "predicted_index": self.predicted_index,
            "predicted_connectivity": self.predicted_connectivity,
            "published_index": self.published_index,
            "matches": self.matches,
            "extremal_expected": self.extremal_expected,
            "extremal_confirmed": self.extremal_confirmed,
        }


@dataclass
class PartitionSweepReport:
    rows: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    published_deviations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "rows": [r.to_dict() for r in self.rows],
            "violations": [v.to_dict() for v in self.violations],
            "published_deviations": list(self.published_deviations),
        }


def partition_sweep(n_min: int = 6, n_max: int = 12,
                    golden_tol: float = 1e-9,
                    tightness_tol: float = 1e-7) -> PartitionSweepReport:
    """Compare predictions against computed values for every partition of every
    n in [n_min, n_max] into cycle parts >= 3, and confirm the predicted
    extremal rows."""
    if not 5 <= n_min <= n_max:
        raise ValueError(f"bad partition range [{n_min}, {n_max}]")
    report = PartitionSweepReport()
    for n in range(n_min, n_max + 1):
        for part in cycle_partitions(n):
            g = kn_minus_cycles(part)
            g6 = graph6_str(g)
            pred = predict_family(part)
            params = structural_params(g)
            spectrum = laplacian_spectrum(g)
            verdict = srg_verdict(g)
            index = float(spectrum.values[0])
            conn = float(spectrum.values[g.n - 2])

            def mismatch(what, got, want):
                report.violations.append(Violation(
                    g6, what, float(got), float(want), float(got - want),
                    context=f"partition {part}"))

            matches = True
            if params.min_common_adjacent != pred.min_common_adjacent:
                mismatch("lam", params.min_common_adjacent, pred.min_common_adjacent)
                matches = False
            if params.min_common_nonadjacent != pred.min_common_nonadjacent:
                mismatch("mu", params.min_common_nonadjacent, pred.min_common_nonadjacent)
                matches = False
            if verdict.is_srg != pred.srg:
                mismatch("srg", int(verdict.is_srg), int(pred.srg))
                matches = False
            if abs(index - pred.index) > golden_tol:
                mismatch("index", index, pred.index)
                matches = False
            if abs(conn - pred.connectivity) > golden_tol:
                mismatch("connectivity", conn, pred.connectivity)
                matches = False

            if pred.index_formula_deviates:
                report.published_deviations.append({
                    "partition": list(part.parts),
                    "published_index": pred.index_published,
                    "computed_index": index,
                    "difference": index - pred.index_published,
                })

            expected = part.t >= 2 and any(s % 2 == 0 for s in part.parts)
            confirmed = None
            if expected:
                cert = certify_graph(g, params=params, spectrum=spectrum,
                                     include_kappa=False)
                tight = set(cert.tight_bounds())
                attained = cert.master_equality_eigenvalues("any")
                confirmed = (
                    all(name in tight for name in FAMILY_TIGHT_BOUNDS)
                    and any(abs(v - index) <= tightness_tol for v in attained)
                    and any(abs(v - conn) <= tightness_tol for v in attained)
                )
                if not confirmed:
                    missing = [name for name in FAMILY_TIGHT_BOUNDS if name not in tight]
                    mismatch("extremality", len(missing), 0)
                    matches = False

            report.rows.append(PartitionRow(
                partition=part.parts, n=n,
                lam=params.min_common_adjacent, mu=params.min_common_nonadjacent,
                srg=verdict.is_srg, index=index, connectivity=conn,
                predicted_index=pred.index, predicted_connectivity=pred.connectivity,
                published_index=pred.index_published, matches=matches,
                extremal_expected=expected, extremal_confirmed=confirmed,
            ))
    return report
