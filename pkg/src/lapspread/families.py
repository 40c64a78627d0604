"""Generators for the named extremal graphs and the family of (n-3)-regular
graphs obtained from a complete graph by deleting disjoint cycles, together
with closed-form predictions for that family."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, complement, from_edge_list
from .params import structural_params
from .spectral import laplacian_spectrum

GOLDEN_TOL = 1e-9

# Hand-transcribed adjacency for the two named graphs that have no short
# constructive description.  A triangle and a K_{2,3}, joined by a matching:
_X8_EDGES = (
    (0, 1), (1, 2), (0, 2),                    # triangle
    (3, 6), (4, 6), (5, 6), (3, 7), (4, 7), (5, 7),   # K_{2,3}, parts {6,7} / {3,4,5}
    (1, 3), (0, 4), (2, 5),                    # matching into the 3-side
)
# Two triangles, two hubs each covering one triangle plus the other hub's
# triangle, and a perfect matching between the triangles:
_U8_EDGES = (
    (2, 3), (3, 4), (4, 2),                    # triangle A
    (5, 6), (6, 7), (7, 5),                    # triangle B
    (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7),   # hubs
    (0, 1),                                    # hub edge
    (2, 7), (3, 6), (4, 5),                    # matching A-B
)

# (order, degree, min common adjacent, min common nonadjacent, index, connectivity):
# construction-time guards against transcription slips.
_FINGERPRINTS = {
    "X8": (8, 3, 0, 1, (7 + math.sqrt(17)) / 2, (7 - math.sqrt(17)) / 2),
    "X8c": (8, 4, 1, 2, (9 + math.sqrt(17)) / 2, (9 - math.sqrt(17)) / 2),
    "Y8": (8, 5, 2, 4, 8.0, 4.0),
    "Z8": (8, 5, 2, 4, 8.0, (11 - math.sqrt(5)) / 2),
    "U8": (8, 4, 0, 2, 6.0, 2.0),
    "U8c": (8, 3, 0, 0, 6.0, 2.0),
}

NAMED_GRAPHS = tuple(_FINGERPRINTS)


class FingerprintMismatch(RuntimeError):
    """A named-graph generator produced the wrong graph."""


def _validated(g: Graph, name: str) -> Graph:
    order, degree, lam, mu, index, conn = _FINGERPRINTS[name]
    p = structural_params(g)
    values = laplacian_spectrum(g).values
    checks = [
        ("order", g.n, order),
        ("degree", (p.min_degree, p.max_degree), (degree, degree)),
        ("min common adjacent", p.min_common_adjacent, lam),
        ("min common nonadjacent", p.min_common_nonadjacent, mu),
    ]
    for what, got, want in checks:
        if got != want:
            raise FingerprintMismatch(f"{name}: {what} is {got}, expected {want}")
    if abs(values[0] - index) > GOLDEN_TOL or abs(values[g.n - 2] - conn) > GOLDEN_TOL:
        raise FingerprintMismatch(
            f"{name}: spectrum ({values[0]}, {values[g.n - 2]}) != ({index}, {conn})")
    return g


def named_graph(name: str) -> Graph:
    """One of the six fixed extremal graphs: X8, X8c, Y8, Z8, U8, U8c."""
    if name not in _FINGERPRINTS:
        raise ValueError(f"unknown graph name {name!r}; choose from {NAMED_GRAPHS}")
    if name == "X8":
        g = from_edge_list(8, _X8_EDGES)
    elif name == "X8c":
        g = complement(from_edge_list(8, _X8_EDGES))
    elif name == "U8":
        g = from_edge_list(8, _U8_EDGES)
    elif name == "U8c":
        g = complement(from_edge_list(8, _U8_EDGES))
    elif name == "Y8":
        g = kn_minus_cycles(CyclePartition((4, 4)))
    else:
        g = kn_minus_cycles(CyclePartition((5, 3)))
    return _validated(g, name)


def complete(n: int) -> Graph:
    adj = ~np.eye(n, dtype=bool)
    return Graph(n, adj)


def cycle(s: int) -> Graph:
    if s < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {s}")
    return from_edge_list(s, [(i, (i + 1) % s) for i in range(s)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError(f"both parts must be nonempty, got ({a}, {b})")
    adj = np.zeros((a + b, a + b), dtype=bool)
    adj[:a, a:] = True
    adj[a:, :a] = True
    return Graph(a + b, adj)


def fan(t: int) -> Graph:
    """Hub adjacent to 2t rim vertices that pair up into t disjoint edges."""
    if t < 2:
        raise ValueError(f"the fan needs t >= 2, got {t}")
    hub = 2 * t
    edges = [(hub, i) for i in range(2 * t)]
    edges += [(2 * i, 2 * i + 1) for i in range(t)]
    return from_edge_list(2 * t + 1, edges)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return from_edge_list(10, edges)


@dataclass(frozen=True)
class CyclePartition:
    """Nonincreasing cycle orders n_1 >= ... >= n_t >= 3 with sum >= 5.

    Deleting these disjoint cycles from the complete graph on sum(parts)
    vertices yields a connected (n-3)-regular graph.
    """

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("partition needs at least one part")
        if any(p < 3 for p in parts):
            raise ValueError(f"every part must be >= 3, got {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be nonincreasing, got {parts}")
        if sum(parts) < 5:
            raise ValueError(f"sum of parts must be >= 5 for a connected graph, got {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def t(self) -> int:
        return len(self.parts)

    def __str__(self):
        return ",".join(str(p) for p in self.parts)


def disjoint_cycles(p: CyclePartition) -> Graph:
    """The vertex-disjoint union of cycles with the given orders."""
    n = p.n
    edges = []
    start = 0
    for s in p.parts:
        edges += [(start + k, start + (k + 1) % s) for k in range(s)]
        start += s
    return from_edge_list(n, edges)


def kn_minus_cycles(p: CyclePartition) -> Graph:
    """Complete graph minus the disjoint cycles: connected and (n-3)-regular."""
    return complement(disjoint_cycles(p))


def cycle_partitions(n: int) -> list[CyclePartition]:
    """All nonincreasing partitions of n into parts >= 3."""
    out = []

    def extend(remaining, cap, acc):
        if remaining == 0:
            out.append(CyclePartition(tuple(acc)))
            return
        for part in range(min(cap, remaining), 2, -1):
            if remaining - part != 0 and remaining - part < 3:
                continue
            extend(remaining - part, part, acc + [part])

    extend(n, n, [])
    return out


def cycle_spectrum(s: int) -> tuple[float, float]:
    """(index, algebraic connectivity) of the cycle on s vertices.

    index = 4 for even s and 2 + 2cos(pi/s) for odd s; the connectivity is
    2 - 2cos(2pi/s).
    """
    if s < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {s}")
    index = 4.0 if s % 2 == 0 else 2.0 + 2.0 * math.cos(math.pi / s)
    return index, 2.0 - 2.0 * math.cos(2.0 * math.pi / s)


def cycle_connectivity_published(s: int) -> float:
    """The published closed form 2 - cos(2pi/s) for the cycle's algebraic
    connectivity; kept verbatim so reports can show where it deviates from
    the correct 2 - 2cos(2pi/s)."""
    if s < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {s}")
    return 2.0 - math.cos(2.0 * math.pi / s)


@dataclass(frozen=True)
class FamilyPrediction:
    """Closed-form expectations for the complete graph minus disjoint cycles.

    ``index``/``connectivity`` use the corrected cycle connectivity;
    ``index_published`` applies the published cycle formula instead (the two
    differ exactly when the deleted cycle is a single Hamilton cycle).
    ``alpha``/``beta`` are the common values of both index/connectivity bounds.
    """

    partition: CyclePartition
    min_common_adjacent: int
    min_common_nonadjacent: int
    srg: bool
    index: float
    connectivity: float
    index_published: float
    alpha: float
    beta: float

    @property
    def index_formula_deviates(self) -> bool:
        return abs(self.index - self.index_published) > GOLDEN_TOL


def predict_family(p: CyclePartition) -> FamilyPrediction:
    """Predicted parameters and spectrum extremes of kn_minus_cycles(p).

    Requires n >= 6 except for the single 5-cycle, which is the pentagon and
    is handled by its strongly-regular closed form.
    """
    n = p.n
    if n == 5:
        # K5 minus a 5-cycle is the pentagon: strongly regular (5, 2, 0, 1).
        hi = (5 + math.sqrt(5)) / 2
        lo = (5 - math.sqrt(5)) / 2
        return FamilyPrediction(p, 0, 1, True, hi, lo, hi, hi, lo)
    if n < 6:
        raise ValueError(f"predictions need n >= 6 (or the pentagon case), got n={n}")
    all_triangles = all(part == 3 for part in p.parts)
    lam = n - 6
    if all_triangles:
        mu = n - 3
        return FamilyPrediction(p, lam, mu, True,
                                float(n), float(n - 3), float(n),
                                float(n), float(n - 3))
    mu = n - 4
    if p.t == 1:
        index = n - (2.0 - 2.0 * math.cos(2.0 * math.pi / n))
        index_published = n - math.cos(2.0 * math.pi / n)
    else:
        index = float(n)
        index_published = float(n)
    if all(part % 2 == 1 for part in p.parts):
        conn = n - 2.0 - 2.0 * math.cos(math.pi / p.parts[0])
    else:
        conn = float(n - 4)
    return FamilyPrediction(p, lam, mu, False, index, conn, index_published,
                            float(n), float(n - 4))
