"""Tightness certification: equality conditions of the master inequality,
per-bound extremality verdicts, and the extremal-graph summary table."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, common_neighbor_matrix, graph6_str
from .params import StructuralParams, structural_params
from .spectral import (Spectrum, laplacian, laplacian_spectrum,
                       eigenpair_residual)
from .bounds import (compute_bounds, master_inequality, master_tolerance,
                     BoundSet, EIGENPAIR_RESIDUAL_TOL)

TIGHTNESS_TOL = 1e-7     # |gap| below this counts as attained
VALIDITY_TOL = 1e-9      # bounds may undershoot by at most this much
VECTOR_DIFF_TOL = 1e-7   # relative to ||x||_inf, detects x_i != x_j
EIGENVALUE_CLUSTER_TOL = 1e-7


@dataclass(frozen=True)
class EqualityEvidence:
    """Outcome of the equality conditions for one eigenpair.

    Equality in the master inequality (at the graph's own common-neighbor
    minima) holds iff every pair of vertices with distinct eigenvector entries
    has the minimum common-neighbor count for its adjacency class.  Each
    offending pair is recorded as (i, j, adjacent, common_count).
    """

    eigenvalue: float
    basis_index: int
    violating_pairs: tuple

    @property
    def holds(self) -> bool:
        return not self.violating_pairs


def equality_conditions(g: Graph, value: float, x, tol: float = VECTOR_DIFF_TOL, *,
                        params: StructuralParams | None = None,
                        basis_index: int = 0,
                        check: bool = True) -> EqualityEvidence:
    """Check the pairwise equality conditions for the eigenpair (value, x)."""
    params = params or structural_params(g)
    x = np.asarray(x, dtype=np.float64)
    if check:
        norm = float(np.linalg.norm(x))
        if norm == 0.0:
            raise ValueError("eigenvector must be nonzero")
        res = eigenpair_residual(laplacian(g), value, x)
        if res > EIGENPAIR_RESIDUAL_TOL * max(1.0, 2.0 * params.max_degree) * norm:
            raise ValueError(f"(value, x) is not an eigenpair (residual {res:.3e})")
    walks = common_neighbor_matrix(g)
    threshold = tol * float(np.abs(x).max())
    diff = np.abs(x[:, None] - x[None, :]) > threshold
    lam = params.min_common_adjacent
    mu = params.min_common_nonadjacent
    bad = np.zeros((g.n, g.n), dtype=bool)
    if lam is not None:
        bad |= diff & g.adj & (walks != lam)
    if mu is not None:
        nonadj = ~g.adj
        np.fill_diagonal(nonadj, False)
        bad |= diff & nonadj & (walks != mu)
    ii, jj = np.nonzero(np.triu(bad, 1))
    pairs = tuple(
        (int(i), int(j), bool(g.adj[i, j]), int(walks[i, j]))
        for i, j in zip(ii, jj)
    )
    return EqualityEvidence(float(value), basis_index, pairs)


@dataclass(frozen=True)
class EigenvalueEqualityReport:
    """Equality status of one (possibly repeated) nontrivial eigenvalue.

    For a repeated eigenvalue the conditions can differ between basis vectors,
    so both the per-vector evidence and the any/all summary are kept.
    """

    eigenvalue: float
    evidence: tuple          # one EqualityEvidence per basis vector
    master_values: tuple     # master-inequality sum per basis vector
    master_tol: float

    @property
    def holds_any(self) -> bool:
        return any(e.holds for e in self.evidence)

    @property
    def holds_all(self) -> bool:
        return all(e.holds for e in self.evidence)


@dataclass(frozen=True)
class BoundRecord:
    """One bound compared against the quantity it bounds."""

    bound: str
    value: float | None
    attained: str            # "index", "connectivity", or "spread"
    target: float
    gap: float | None        # oriented so that validity means gap >= -VALIDITY_TOL
    reason: str | None = None

    @property
    def tight(self) -> bool | None:
        if self.gap is None:
            return None
        return abs(self.gap) <= TIGHTNESS_TOL


@dataclass(frozen=True)
class ExtremalityCertificate:
    graph6: str
    n: int
    m: int
    lam: int | None
    mu: int | None
    index: float
    connectivity: float
    spread: float
    bounds: tuple            # BoundRecord, fixed order
    equality: tuple          # EigenvalueEqualityReport per distinct nontrivial eigenvalue

    def record(self, name: str) -> BoundRecord:
        for rec in self.bounds:
            if rec.bound == name:
                return rec
        raise KeyError(name)

    def tight_bounds(self) -> list[str]:
        return [rec.bound for rec in self.bounds if rec.tight]

    def master_equality_eigenvalues(self, how: str = "any") -> list[float]:
        """Eigenvalues where the master inequality is attained ('any'/'all' basis)."""
        pick = (lambda r: r.holds_any) if how == "any" else (lambda r: r.holds_all)
        return [r.eigenvalue for r in self.equality if pick(r)]


def _cluster_eigenpairs(spectrum: Spectrum):
    """Group the nontrivial eigenpairs into (value, [vectors]) clusters."""
    groups = []
    scale = max(1.0, abs(float(spectrum.values[0])))
    for k in range(spectrum.n - 1):
        value = float(spectrum.values[k])
        vector = spectrum.vectors[:, k]
        if groups and abs(groups[-1][0] - value) <= EIGENVALUE_CLUSTER_TOL * scale:
            groups[-1][1].append(vector)
        else:
            groups.append((value, [vector]))
    return groups


def certify_graph(g: Graph, *, params: StructuralParams | None = None,
                  spectrum: Spectrum | None = None,
                  bound_set: BoundSet | None = None,
                  include_kappa: bool = True) -> ExtremalityCertificate:
    """Tightness verdict for every bound plus per-eigenvalue equality evidence.

    Bounds are evaluated at the graph's own common-neighbor minima; when one
    of them is undefined the affected rows carry their not-applicable reason.
    """
    params = params or structural_params(g)
    spectrum = spectrum or laplacian_spectrum(g)
    bound_set = bound_set or compute_bounds(g, params=params, include_kappa=include_kappa)
    index = float(spectrum.values[0])
    conn = float(spectrum.values[g.n - 2]) if g.n >= 2 else 0.0
    spread = index - conn
    targets = {"index": index, "connectivity": conn, "spread": spread}

    def upper(name, value, target):
        if value is None:
            reason = bound_set.not_applicable.get(name, "not computed")
            return BoundRecord(name, None, target, targets[target], None, reason)
        return BoundRecord(name, value, target, targets[target], value - targets[target])

    def lower(name, value, target):
        if value is None:
            reason = bound_set.not_applicable.get(name, "not computed")
            return BoundRecord(name, None, target, targets[target], None, reason)
        return BoundRecord(name, value, target, targets[target], targets[target] - value)

    cl = bound_set.classical
    records = [
        upper("alpha1", bound_set.alpha1, "index"),
        upper("alpha2", bound_set.alpha2, "index"),
        lower("beta1", bound_set.beta1, "connectivity"),
        lower("beta2", bound_set.beta2, "connectivity"),
        upper("spread_vertex", bound_set.spread_vertex, "spread"),
        upper("spread_degree", bound_set.spread_degree, "spread"),
        upper("spread_regular", bound_set.spread_regular, "spread"),
        upper("anderson_morley", cl.anderson_morley, "index"),
        upper("merris", cl.merris, "index"),
        upper("rojo", cl.rojo, "index"),
        upper("li_pan", cl.li_pan, "index"),
        upper("zhang", cl.zhang, "index"),
        lower("grone_merris", cl.grone_merris, "index"),
        upper("fiedler_delta", cl.fiedler_delta, "connectivity"),
        upper("fiedler_kappa", cl.fiedler_kappa, "connectivity"),
    ]

    equality = []
    if params.min_common_adjacent is not None and params.min_common_nonadjacent is not None:
        for value, vectors in _cluster_eigenpairs(spectrum):
            evidence = []
            master_values = []
            for b, vec in enumerate(vectors):
                evidence.append(equality_conditions(g, value, vec, params=params,
                                                    basis_index=b, check=False))
                master_values.append(master_inequality(g, value, vec, params=params,
                                                       check=False))
            equality.append(EigenvalueEqualityReport(
                value, tuple(evidence), tuple(master_values),
                master_tolerance(g, vectors[0], params=params)))

    return ExtremalityCertificate(
        graph6=graph6_str(g), n=g.n, m=g.m,
        lam=params.min_common_adjacent, mu=params.min_common_nonadjacent,
        index=index, connectivity=conn, spread=spread,
        bounds=tuple(records), equality=tuple(equality),
    )


def certificate_records(cert: ExtremalityCertificate, graph_name: str | None = None) -> list[dict]:
    """Flatten a certificate into one record per bound for CSV/JSON output."""
    name = graph_name if graph_name is not None else cert.graph6
    return [
        {
            "graph": name,
            "bound": rec.bound,
            "value": rec.value,
            "attained": rec.attained,
            "tight": rec.tight,
            "gap": rec.gap,
        }
        for rec in cert.bounds
    ]


def certificate_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["graph", "bound", "value", "attained",
                                             "tight", "gap"])
    writer.writeheader()
    writer.writerows(records)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# The extremal-graph summary table.


@dataclass(frozen=True)
class TableRow:
    """One graph's index/connectivity values against its alpha/beta bounds."""

    graph: str
    index: float
    alpha1: float
    alpha2: float
    connectivity: float
    beta1: float
    beta2: float

    def as_tuple(self):
        return (self.index, self.alpha1, self.alpha2,
                self.connectivity, self.beta1, self.beta2)


TABLE_COLUMNS = ("graph", "ell1", "alpha1", "alpha2", "ell_n_minus_1", "beta1", "beta2")


def table_row(g: Graph, name: str) -> TableRow:
    params = structural_params(g)
    spectrum = laplacian_spectrum(g)
    bs = compute_bounds(g, params=params, include_kappa=False)
    if bs.alpha1 is None or bs.alpha2 is None or bs.beta1 is None or bs.beta2 is None:
        missing = [k for k in ("alpha1", "alpha2", "beta1", "beta2")
                   if getattr(bs, k) is None]
        raise ValueError(f"{name}: bounds {missing} are not applicable")
    return TableRow(name, float(spectrum.values[0]), bs.alpha1, bs.alpha2,
                    float(spectrum.values[g.n - 2]), bs.beta1, bs.beta2)


def extremal_table(a: int = 2, b: int = 5, t: int = 3) -> list[TableRow]:
    """All eight summary rows; the bipartite and fan rows are instantiated at
    the given (a, b) with a < b and t > 1."""
    from . import families

    if not (1 <= a < b):
        raise ValueError(f"complete bipartite row needs 1 <= a < b, got a={a}, b={b}")
    if t <= 1:
        raise ValueError(f"fan row needs t > 1, got t={t}")
    rows = [table_row(families.named_graph(nm), nm)
            for nm in ("X8", "X8c", "Y8", "Z8", "U8", "U8c")]
    rows.append(table_row(families.complete_bipartite(a, b), f"K_{a},{b}"))
    rows.append(table_row(families.fan(t), f"F_{t}"))
    return rows


def table_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(TABLE_COLUMNS)
    for row in rows:
        writer.writerow([row.graph] + [f"{v:.12g}" for v in row.as_tuple()])
    return buf.getvalue()
