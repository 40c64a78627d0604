"""Eigenvalue and spread bounds driven by degrees, average 2-degrees, and the
minimum common-neighbor counts over adjacent (lam) and nonadjacent (mu) pairs.

The central fact: for any connected graph, any nontrivial Laplacian eigenpair
(value, x), and any lam/mu not exceeding the graph's minimum common-neighbor
counts,

    sum_i [(d_i - value)^2 - d_i*m2_i + lam*value + mu*(n - value)] * x_i^2 <= 0,

where m2_i is the average 2-degree.  Solving the per-vertex quadratic gives
upper bounds for the Laplacian index (alpha1, alpha2), lower bounds for the
algebraic connectivity (beta1, beta2), and spread bounds.  The classical
degree-based bounds are included for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graphs import Graph, common_neighbor_matrix, vertex_connectivity
from .params import StructuralParams, structural_params
from .spectral import laplacian, eigenpair_residual

# Scale factor for declaring the master inequality "satisfied within noise":
# the sum is compared against MASTER_TOL * ||x||^2 * n * max_degree^2.
MASTER_TOL = 1e-7

EIGENPAIR_RESIDUAL_TOL = 1e-8

NA_NO_NONADJACENT = "mu default undefined: no nonadjacent pairs (complete graph)"
NA_NO_ADJACENT = "lam default undefined: no edges"
NA_NEGATIVE_DISCRIMINANT = "negative discriminant"
NA_ALL_VERTICES_EXCLUDED = "all vertex discriminants negative"
NA_NOT_REGULAR = "not regular"


def resolve_lam_mu(params: StructuralParams, lam=None, mu=None):
    """Fill defaults from the graph minima and validate explicit choices.

    Returns (lam, mu) as floats, or None when a default is requested but the
    corresponding pair class is empty.  Explicit values above the graph
    minimum are rejected; when the minimum is undefined the pair class is
    empty and any value is vacuously valid.
    """
    if lam is None:
        if params.min_common_adjacent is None:
            return None
        lam = params.min_common_adjacent
    elif params.min_common_adjacent is not None and lam > params.min_common_adjacent:
        raise ValueError(
            f"lam={lam} exceeds the adjacent-pair minimum {params.min_common_adjacent}"
        )
    if mu is None:
        if params.min_common_nonadjacent is None:
            return None
        mu = params.min_common_nonadjacent
    elif params.min_common_nonadjacent is not None and mu > params.min_common_nonadjacent:
        raise ValueError(
            f"mu={mu} exceeds the nonadjacent-pair minimum {params.min_common_nonadjacent}"
        )
    return float(lam), float(mu)


def master_tolerance(g: Graph, x, params: StructuralParams | None = None) -> float:
    """Noise budget for the master inequality at eigenvector x."""
    params = params or structural_params(g)
    x = np.asarray(x, dtype=np.float64)
    return MASTER_TOL * float(x @ x) * g.n * params.max_degree ** 2


def master_inequality(g: Graph, value: float, x, lam=None, mu=None, *,
                      params: StructuralParams | None = None,
                      check: bool = True) -> float:
    """The weighted quadratic sum that is nonpositive for valid eigenpairs.

    ``value`` must be a nontrivial Laplacian eigenvalue of g with eigenvector
    ``x``; ``lam``/``mu`` default to the graph's minimum common-neighbor
    counts.  With ``check`` the eigenpair residual and the lam/mu choices are
    validated (ValueError on failure).
    """
    params = params or structural_params(g)
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise ValueError(f"vector length {x.shape} does not match n={g.n}")
    resolved = resolve_lam_mu(params, lam, mu)
    if resolved is None:
        raise ValueError("lam/mu defaults are undefined for this graph; pass them explicitly")
    lam, mu = resolved
    if check:
        norm = float(np.linalg.norm(x))
        if norm == 0.0:
            raise ValueError("eigenvector must be nonzero")
        tol = EIGENPAIR_RESIDUAL_TOL * max(1.0, 2.0 * params.max_degree) * norm
        res = eigenpair_residual(laplacian(g), value, x)
        if res > tol:
            raise ValueError(f"eigenpair residual {res:.3e} exceeds tolerance {tol:.3e}")
    d = params.degrees.astype(np.float64)
    s = params.avg2_num.astype(np.float64)  # d_i * m2_i, exactly
    terms = (d - value) ** 2 - s + lam * value + mu * (g.n - value)
    return float(np.sum(terms * x * x))


def vertex_quadratic(g: Graph, i: int, lam: float, mu: float, value: float, *,
                     params: StructuralParams | None = None) -> float:
    """Per-vertex term of the master inequality as a quadratic in the eigenvalue.

    value^2 - (2 d_i - lam + mu) value + (d_i^2 - d_i*m2_i + mu*n); algebraically
    identical to (d_i - value)^2 - d_i*m2_i + lam*value + mu*(n - value).
    """
    params = params or structural_params(g)
    d = float(params.degrees[i])
    s = float(params.avg2_num[i])
    return value * value - (2.0 * d - lam + mu) * value + (d * d - s + mu * g.n)


def _vertex_roots(params: StructuralParams, n: int, lam: float, mu: float):
    """Roots of every vertex quadratic with nonnegative discriminant.

    Returns (upper_roots, lower_roots) arrays over the kept vertices.
    """
    d = params.degrees.astype(np.float64)
    s = params.avg2_num.astype(np.float64)
    disc = 4.0 * s - 4.0 * (lam - mu) * d + (lam - mu) ** 2 - 4.0 * mu * n
    keep = disc >= 0.0
    if not keep.any():
        return None
    root = np.sqrt(disc[keep])
    mid = 2.0 * d[keep] - lam + mu
    return (mid + root) / 2.0, (mid - root) / 2.0


def alpha1_beta1(g: Graph, lam=None, mu=None, *,
                 params: StructuralParams | None = None):
    """Per-vertex upper bound for the Laplacian index and lower bound for the
    algebraic connectivity.

    Vertices whose discriminant is negative are excluded from both the max and
    the min; the result is (None, None) when every vertex is excluded or when
    a lam/mu default is unavailable.
    """
    params = params or structural_params(g)
    resolved = resolve_lam_mu(params, lam, mu)
    if resolved is None:
        return None, None
    roots = _vertex_roots(params, g.n, *resolved)
    if roots is None:
        return None, None
    upper, lower = roots
    return float(upper.max()), float(lower.min())


def spread_bound_vertex(g: Graph, lam=None, mu=None, *,
                        params: StructuralParams | None = None):
    """Spread bound alpha1 - beta1; None when either side is undefined."""
    alpha, beta = alpha1_beta1(g, lam, mu, params=params)
    if alpha is None or beta is None:
        return None
    return alpha - beta


def alpha2(g: Graph, lam=None, mu=None, *, params: StructuralParams | None = None):
    """Upper bound for the Laplacian index from the maximum degree alone:
    (2*Delta - lam + mu + sqrt((2*Delta - lam + mu)^2 - 4*mu*n)) / 2."""
    params = params or structural_params(g)
    resolved = resolve_lam_mu(params, lam, mu)
    if resolved is None:
        return None
    lam, mu = resolved
    mid = 2.0 * params.max_degree - lam + mu
    disc = mid * mid - 4.0 * mu * g.n
    if disc < 0.0:
        return None
    return (mid + math.sqrt(disc)) / 2.0


def beta2(g: Graph, lam=None, mu=None, *, params: StructuralParams | None = None):
    """Lower bound for the algebraic connectivity from the extreme degrees:
    (2*delta - lam + mu - sqrt((2*delta - lam + mu)^2 - 4*mu*n - 4*delta^2 + 4*Delta^2)) / 2."""
    params = params or structural_params(g)
    resolved = resolve_lam_mu(params, lam, mu)
    if resolved is None:
        return None
    lam, mu = resolved
    mid = 2.0 * params.min_degree - lam + mu
    disc = (mid * mid - 4.0 * mu * g.n
            - 4.0 * params.min_degree ** 2 + 4.0 * params.max_degree ** 2)
    if disc < 0.0:
        return None
    return (mid - math.sqrt(disc)) / 2.0


def spread_bound_degree(g: Graph, lam=None, mu=None, *,
                        params: StructuralParams | None = None):
    """Spread bound Delta - delta + (sqrt of both degree discriminants) / 2."""
    params = params or structural_params(g)
    resolved = resolve_lam_mu(params, lam, mu)
    if resolved is None:
        return None
    lam, mu = resolved
    mid_hi = 2.0 * params.max_degree - lam + mu
    disc_hi = mid_hi * mid_hi - 4.0 * mu * g.n
    mid_lo = 2.0 * params.min_degree - lam + mu
    disc_lo = (mid_lo * mid_lo - 4.0 * mu * g.n
               - 4.0 * params.min_degree ** 2 + 4.0 * params.max_degree ** 2)
    if disc_hi < 0.0 or disc_lo < 0.0:
        return None
    return (params.max_degree - params.min_degree
            + (math.sqrt(disc_hi) + math.sqrt(disc_lo)) / 2.0)


def spread_bound_regular(g: Graph, lam=None, mu=None, *,
                         params: StructuralParams | None = None):
    """Spread bound sqrt((2k - lam + mu)^2 - 4*mu*n) for k-regular graphs;
    None for irregular graphs or a negative discriminant."""
    params = params or structural_params(g)
    if params.min_degree != params.max_degree:
        return None
    resolved = resolve_lam_mu(params, lam, mu)
    if resolved is None:
        return None
    lam, mu = resolved
    mid = 2.0 * params.min_degree - lam + mu
    disc = mid * mid - 4.0 * mu * g.n
    if disc < 0.0:
        return None
    return math.sqrt(disc)


@dataclass(frozen=True)
class ClassicalBounds:
    """Degree-based bounds that need no common-neighbor minima.

    All but grone_merris bound the Laplacian index from above; grone_merris
    bounds it from below; fiedler_kappa/fiedler_delta bound the algebraic
    connectivity from above.
    """

    anderson_morley: float   # max over edges of d_i + d_j
    merris: float            # max over vertices of d_i + m2_i
    rojo: float              # max over edges of d_i + d_j - |N(i) cap N(j)|
    li_pan: float            # max over vertices of sqrt(2 d_i (d_i + m2_i))
    zhang: float             # max over vertices of d_i + sqrt(d_i m2_i)
    grone_merris: float      # max_degree + 1
    fiedler_delta: float     # min_degree
    fiedler_kappa: float | None  # vertex connectivity, None when skipped


def classical_bounds(g: Graph, *, params: StructuralParams | None = None,
                     include_kappa: bool = True) -> ClassicalBounds:
    if g.n < 2:
        raise ValueError("classical bounds need at least two vertices")
    params = params or structural_params(g)
    d = params.degrees.astype(np.float64)
    s = params.avg2_num.astype(np.float64)
    m2 = params.avg2
    ii, jj = np.nonzero(np.triu(g.adj, 1))
    if len(ii) == 0:
        raise ValueError("classical bounds need at least one edge")
    walks = common_neighbor_matrix(g)
    return ClassicalBounds(
        anderson_morley=float((d[ii] + d[jj]).max()),
        merris=float((d + m2).max()),
        rojo=float((d[ii] + d[jj] - walks[ii, jj]).max()),
        li_pan=float(np.sqrt(2.0 * d * (d + m2)).max()),
        zhang=float((d + np.sqrt(s)).max()),
        grone_merris=float(params.max_degree + 1),
        fiedler_delta=float(params.min_degree),
        fiedler_kappa=float(vertex_connectivity(g)) if include_kappa else None,
    )


@dataclass(frozen=True)
class BoundSet:
    """Every bound value for one graph at one (lam, mu) choice.

    Bounds that do not apply are None, with the reason recorded under the
    bound's name in ``not_applicable``.
    """

    lam: float | None
    mu: float | None
    alpha1: float | None
    beta1: float | None
    spread_vertex: float | None
    alpha2: float | None
    beta2: float | None
    spread_degree: float | None
    spread_regular: float | None
    classical: ClassicalBounds
    not_applicable: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {
            "lam": self.lam,
            "mu": self.mu,
            "alpha1": self.alpha1,
            "beta1": self.beta1,
            "spread_vertex": self.spread_vertex,
            "alpha2": self.alpha2,
            "beta2": self.beta2,
            "spread_degree": self.spread_degree,
            "spread_regular": self.spread_regular,
            "anderson_morley": self.classical.anderson_morley,
            "merris": self.classical.merris,
            "rojo": self.classical.rojo,
            "li_pan": self.classical.li_pan,
            "zhang": self.classical.zhang,
            "grone_merris": self.classical.grone_merris,
            "fiedler_delta": self.classical.fiedler_delta,
            "fiedler_kappa": self.classical.fiedler_kappa,
        }
        if self.not_applicable:
            out["not_applicable"] = dict(self.not_applicable)
        return out


def compute_bounds(g: Graph, lam=None, mu=None, *,
                   params: StructuralParams | None = None,
                   include_kappa: bool = True) -> BoundSet:
    """Assemble the full bound set for g at the given (lam, mu) choice."""
    params = params or structural_params(g)
    na: dict[str, str] = {}
    resolved = resolve_lam_mu(params, lam, mu)
    if resolved is None:
        reason = NA_NO_ADJACENT if params.min_common_adjacent is None else NA_NO_NONADJACENT
        for name in ("alpha1", "beta1", "spread_vertex", "alpha2", "beta2",
                     "spread_degree", "spread_regular"):
            na[name] = reason
        return BoundSet(None, None, None, None, None, None, None, None, None,
                        classical_bounds(g, params=params, include_kappa=include_kappa), na)
    rlam, rmu = resolved
    a1, b1 = alpha1_beta1(g, rlam, rmu, params=params)
    if a1 is None:
        na["alpha1"] = na["beta1"] = na["spread_vertex"] = NA_ALL_VERTICES_EXCLUDED
    a2 = alpha2(g, rlam, rmu, params=params)
    if a2 is None:
        na["alpha2"] = NA_NEGATIVE_DISCRIMINANT
    b2 = beta2(g, rlam, rmu, params=params)
    if b2 is None:
        na["beta2"] = NA_NEGATIVE_DISCRIMINANT
    sd = spread_bound_degree(g, rlam, rmu, params=params)
    if sd is None:
        na["spread_degree"] = NA_NEGATIVE_DISCRIMINANT
    sr = spread_bound_regular(g, rlam, rmu, params=params)
    if sr is None:
        na["spread_regular"] = (NA_NOT_REGULAR if params.min_degree != params.max_degree
                                else NA_NEGATIVE_DISCRIMINANT)
    sv = None if a1 is None else a1 - b1
    return BoundSet(rlam, rmu, a1, b1, sv, a2, b2, sd, sr,
                    classical_bounds(g, params=params, include_kappa=include_kappa), na)
