"""Dense symmetric eigensolver (cyclic Jacobi) and Laplacian spectral quantities.

Eigenvalues are always reported nonincreasingly; for a Laplacian the last one
is the trivial eigenvalue 0, the first is the Laplacian index, and the
second-to-last is the algebraic connectivity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, is_connected

JACOBI_TOL = 1e-12       # off-diagonal Frobenius target, relative to ||A||_F
JACOBI_MAX_SWEEPS = 100
ZERO_SNAP_TOL = 1e-9     # |value| below this is treated as the trivial eigenvalue


class JacobiConvergenceError(RuntimeError):
    """The rotation sweeps did not reach the off-diagonal target."""

    def __init__(self, residual: float, target: float, sweeps: int):
        self.residual = residual
        self.target = target
        self.sweeps = sweeps
        super().__init__(
            f"Jacobi did not converge in {sweeps} sweeps: "
            f"off-diagonal norm {residual:.3e} > target {target:.3e}"
        )


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted nonincreasingly with matched orthonormal eigenvectors.

    ``vectors[:, k]`` is the unit eigenvector paired with ``values[k]``.
    """

    values: np.ndarray
    vectors: np.ndarray

    @property
    def n(self) -> int:
        return len(self.values)

    def pairs(self):
        """Iterate (value, vector) pairs in nonincreasing eigenvalue order."""
        for k in range(self.n):
            yield float(self.values[k]), self.vectors[:, k]

    def nontrivial_pairs(self):
        """Eigenpairs excluding the single trailing (trivial) eigenvalue."""
        for k in range(self.n - 1):
            yield float(self.values[k]), self.vectors[:, k]


def laplacian(g: Graph) -> np.ndarray:
    """Degree diagonal minus adjacency; symmetric with zero row sums."""
    a = g.adj.astype(np.float64)
    return np.diag(a.sum(axis=1)) - a


def _off_norm(a: np.ndarray) -> float:
    return math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))


def jacobi_eigh(a: np.ndarray, tol: float = JACOBI_TOL,
                max_sweeps: int = JACOBI_MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Diagonalize a symmetric matrix by cyclic Jacobi rotations.

    Sweeps rotate every off-diagonal pair (p, q) in row order until the
    off-diagonal Frobenius norm drops below ``tol * ||a||_F``.  Returns
    ``(values, vectors)`` unsorted, with ``vectors[:, k]`` the eigenvector of
    ``values[k]``; the accumulated rotations keep the basis orthonormal to
    machine precision.

    Raises JacobiConvergenceError after ``max_sweeps`` sweeps (for symmetric
    input this practically cannot happen before the budget is exhausted).
    """
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    v = np.eye(n)
    scale = float(np.linalg.norm(a))
    if n == 1 or scale == 0.0:
        return np.diag(a).copy(), v
    target = tol * scale
    for _ in range(max_sweeps):
        if _off_norm(a) <= target:
            return np.diag(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                v_p = v[:, p].copy()
                v_q = v[:, q].copy()
                v[:, p] = c * v_p - s * v_q
                v[:, q] = s * v_p + c * v_q
    residual = _off_norm(a)
    if residual <= target:
        return np.diag(a).copy(), v
    raise JacobiConvergenceError(residual, target, max_sweeps)


def eigensolve(m: np.ndarray) -> Spectrum:
    """Full eigendecomposition of a symmetric matrix, sorted nonincreasingly.

    The sort is stable, so equal eigenvalues keep the rotation output order.
    """
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    scale = max(1.0, float(np.abs(m).max(initial=0.0)))
    if float(np.abs(m - m.T).max(initial=0.0)) > 1e-12 * scale:
        raise ValueError("eigensolve requires a symmetric matrix")
    values, vectors = jacobi_eigh(m)
    order = np.argsort(-values, kind="stable")
    return Spectrum(values[order], vectors[:, order])


def laplacian_spectrum(g: Graph) -> Spectrum:
    """Laplacian eigendecomposition with the trivial eigenvalue snapped to 0.

    The eigenvalue of minimum magnitude is set to exactly 0 when it is below
    ZERO_SNAP_TOL, and for a connected graph its eigenvector is replaced by the
    normalized all-ones vector (the exact kernel).
    """
    spec = eigensolve(laplacian(g))
    values = spec.values.copy()
    vectors = spec.vectors.copy()
    k = int(np.argmin(np.abs(values)))
    if abs(values[k]) <= ZERO_SNAP_TOL:
        values[k] = 0.0
        if is_connected(g):
            vectors[:, k] = 1.0 / math.sqrt(g.n)
    order = np.argsort(-values, kind="stable")
    return Spectrum(values[order], vectors[:, order])


def laplacian_index(g: Graph) -> float:
    """Largest Laplacian eigenvalue."""
    return float(laplacian_spectrum(g).values[0])


def algebraic_connectivity(g: Graph) -> float:
    """Second-smallest Laplacian eigenvalue; 0 (within tolerance) iff disconnected."""
    if g.n < 2:
        raise ValueError("algebraic connectivity needs at least two vertices")
    return float(laplacian_spectrum(g).values[g.n - 2])


def laplacian_spread(g: Graph) -> float:
    """Largest minus second-smallest Laplacian eigenvalue."""
    if g.n < 2:
        raise ValueError("Laplacian spread needs at least two vertices")
    values = laplacian_spectrum(g).values
    return float(values[0] - values[g.n - 2])


def quadratic_form(g: Graph, x) -> float:
    """Sum of (x_i - x_j)^2 over the edges of g; equals x^T L(g) x."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise ValueError(f"vector length {x.shape} does not match n={g.n}")
    ii, jj = np.nonzero(np.triu(g.adj, 1))
    return float(np.sum((x[ii] - x[jj]) ** 2))


def eigenpair_residual(m: np.ndarray, value: float, vector: np.ndarray) -> float:
    """||m v - value v||_2, the defect of (value, vector) as an eigenpair of m."""
    return float(np.linalg.norm(m @ vector - value * vector))
