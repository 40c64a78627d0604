"""Structural graph parameters: degrees, average 2-degrees, common-neighbor
minima over adjacent and nonadjacent pairs, and strongly-regular detection."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, common_neighbor_matrix, is_connected


@dataclass(frozen=True)
class StructuralParams:
    """Per-vertex and pair statistics of a graph without isolated vertices.

    ``avg2_num[i]`` is the integer sum of neighbor degrees, so the average
    2-degree is the exact rational avg2_num[i] / degrees[i]; ``avg2`` is its
    float value.  ``min_common_adjacent`` / ``min_common_nonadjacent`` are the
    minimum common-neighbor counts over adjacent / nonadjacent vertex pairs,
    None when the corresponding pair class is empty.
    """

    degrees: np.ndarray
    avg2_num: np.ndarray
    avg2: np.ndarray
    min_degree: int
    max_degree: int
    min_common_adjacent: int | None
    min_common_nonadjacent: int | None


def structural_params(g: Graph) -> StructuralParams:
    degrees = g.degrees()
    if (degrees == 0).any():
        bad = int(np.flatnonzero(degrees == 0)[0])
        raise ValueError(f"vertex {bad} is isolated; average 2-degree is undefined")
    avg2_num = (g.adj.astype(np.int64) @ degrees).astype(np.int64)
    walks = common_neighbor_matrix(g)
    iu, ju = np.triu_indices(g.n, 1)
    adjacent = g.adj[iu, ju]
    common = walks[iu, ju]
    lam = int(common[adjacent].min()) if adjacent.any() else None
    mu = int(common[~adjacent].min()) if (~adjacent).any() else None
    return StructuralParams(
        degrees=degrees,
        avg2_num=avg2_num,
        avg2=avg2_num / degrees,
        min_degree=int(degrees.min()),
        max_degree=int(degrees.max()),
        min_common_adjacent=lam,
        min_common_nonadjacent=mu,
    )


@dataclass(frozen=True)
class SrgParameters:
    """The (n, k, lam, mu) tuple of a strongly regular graph."""

    n: int
    k: int
    lam: int
    mu: int

    def feasible(self) -> bool:
        """Edge-count identity k(k - lam - 1) = (n - k - 1) mu."""
        return self.k * (self.k - self.lam - 1) == (self.n - self.k - 1) * self.mu

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)


@dataclass(frozen=True)
class SrgVerdict:
    params: SrgParameters | None
    reason: str

    @property
    def is_srg(self) -> bool:
        return self.params is not None


def srg_verdict(g: Graph) -> SrgVerdict:
    """Decide strong regularity by exhaustive pair counting.

    Complete graphs are rejected (distinct reason) because the two-eigenvalue
    closed form requires at least one nonadjacent pair.
    """
    if g.n < 2:
        raise ValueError("strong regularity needs at least two vertices")
    if not is_connected(g):
        raise ValueError("srg detection expects a connected graph")
    degrees = g.degrees()
    k = int(degrees[0])
    if not (degrees == k).all():
        return SrgVerdict(None, "not regular")
    walks = common_neighbor_matrix(g)
    iu, ju = np.triu_indices(g.n, 1)
    adjacent = g.adj[iu, ju]
    common = walks[iu, ju]
    if not adjacent.any():
        return SrgVerdict(None, "no edges")
    if not (~adjacent).any():
        return SrgVerdict(None, "complete graph")
    lam_counts = np.unique(common[adjacent])
    if len(lam_counts) != 1:
        return SrgVerdict(None, "adjacent common-neighbor counts differ")
    mu_counts = np.unique(common[~adjacent])
    if len(mu_counts) != 1:
        return SrgVerdict(None, "nonadjacent common-neighbor counts differ")
    params = SrgParameters(g.n, k, int(lam_counts[0]), int(mu_counts[0]))
    return SrgVerdict(params, "strongly regular")


def detect_srg(g: Graph) -> SrgParameters | None:
    """SrgParameters when g is strongly regular (and not complete), else None."""
    return srg_verdict(g).params


def srg_eigenvalues(p: SrgParameters) -> tuple[float, float]:
    """The two nontrivial Laplacian eigenvalues of a strongly regular graph.

    (2k - lam + mu +/- sqrt((lam - mu)^2 + 4(k - mu))) / 2, the + root being
    the Laplacian index.  Requires n != k + 1 (non-complete).
    """
    if p.n == p.k + 1:
        raise ValueError("the closed form excludes complete graphs (n = k + 1)")
    disc = (p.lam - p.mu) ** 2 + 4 * (p.k - p.mu)
    if disc < 0:
        raise ValueError(f"infeasible srg parameters {p.as_tuple()}: negative discriminant")
    root = float(np.sqrt(disc))
    base = 2 * p.k - p.lam + p.mu
    return (base + root) / 2.0, (base - root) / 2.0
