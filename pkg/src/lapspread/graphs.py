"""Immutable simple-graph container, constructors, and graph6 / edge-list I/O."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

# graph6 length headers are parsed up to this order; full spectral analysis is
# only intended for small graphs (memory binds far earlier than the header).
GRAPH6_MAX_ORDER = 1 << 18

_G6_HEADER = b">>graph6<<"


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on vertices 0..n-1 with a boolean adjacency matrix.

    The adjacency matrix is validated (symmetric, zero diagonal) and frozen at
    construction, so instances are safe to share across workers.
    """

    n: int
    adj: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        a = np.asarray(self.adj, dtype=bool)
        if a.shape != (self.n, self.n):
            raise ValueError(f"adjacency shape {a.shape} does not match n={self.n}")
        if a.diagonal().any():
            raise ValueError("loops are not allowed")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "adj", a)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash((self.n, self.adj.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        """Number of edges."""
        return int(np.count_nonzero(self.adj)) // 2

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1).astype(np.int64)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i, j])

    def neighbors(self, i: int) -> list[int]:
        return np.flatnonzero(self.adj[i]).tolist()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as pairs (i, j) with i < j, lexicographically ordered."""
        ii, jj = np.nonzero(np.triu(self.adj, 1))
        return list(zip(ii.tolist(), jj.tolist()))

    def is_regular(self) -> bool:
        d = self.degrees()
        return bool((d == d[0]).all())


def from_edge_list(n: int, edges) -> Graph:
    """Build a graph from an iterable of (i, j) pairs; duplicates collapse."""
    adj = np.zeros((n, n), dtype=bool)
    for i, j in edges:
        i, j = int(i), int(j)
        if i == j:
            raise ValueError(f"loop ({i},{j}) is not allowed")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i},{j}) out of range for n={n}")
        adj[i, j] = adj[j, i] = True
    return Graph(n, adj)


def complement(g: Graph) -> Graph:
    """The graph with exactly the non-edges of g."""
    adj = ~g.adj
    np.fill_diagonal(adj, False)
    return Graph(g.n, adj)


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0."""
    seen = np.zeros(g.n, dtype=bool)
    seen[0] = True
    frontier = seen.copy()
    while frontier.any():
        frontier = (g.adj[frontier].any(axis=0)) & ~seen
        seen |= frontier
    return bool(seen.all())


def common_neighbors(g: Graph, i: int, j: int) -> int:
    """Number of vertices adjacent to both i and j (i != j required)."""
    if i == j:
        raise ValueError("common_neighbors requires two distinct vertices")
    return int(np.count_nonzero(g.adj[i] & g.adj[j]))


def common_neighbor_matrix(g: Graph) -> np.ndarray:
    """Integer matrix whose (i, j) entry counts walks of length 2 from i to j.

    Off the diagonal this is the common-neighbor count; the diagonal holds the
    degrees.
    """
    a = g.adj.astype(np.int64)
    return a @ a


def _neighbor_bitmasks(g: Graph) -> list[int]:
    masks = []
    for i in range(g.n):
        m = 0
        for j in np.flatnonzero(g.adj[i]):
            m |= 1 << int(j)
        masks.append(m)
    return masks


def _bitmask_connected(masks: list[int], vertices: int) -> bool:
    # BFS restricted to the vertex set encoded by the `vertices` bitmask.
    start = vertices & -vertices
    seen = start
    frontier = start
    while frontier:
        grown = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            grown |= masks[v]
        frontier = grown & vertices & ~seen
        seen |= frontier
    return seen == vertices


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertices whose deletion disconnects g.

    Complete graphs return n-1 by convention.  The search is exhaustive over
    candidate separators in increasing size, which is exponential in n and
    intended for n <= 16.
    """
    if g.n < 2:
        raise ValueError("vertex connectivity needs at least two vertices")
    if not is_connected(g):
        raise ValueError("vertex connectivity requires a connected graph")
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    masks = _neighbor_bitmasks(g)
    full = (1 << g.n) - 1
    for k in range(1, g.n - 1):
        for combo in itertools.combinations(range(g.n), k):
            removed = 0
            for v in combo:
                removed |= 1 << v
            if not _bitmask_connected(masks, full & ~removed):
                return k
    # A non-complete connected graph always has a separator of size <= n-2
    # (the neighborhood of either endpoint of a non-edge).
    raise AssertionError("unreachable: no separator found in a non-complete graph")


# ---------------------------------------------------------------------------
# graph6 format: 6-bit big-endian packing of the upper triangle, column-major
# (j from 1 to n-1, i from 0 to j-1), each byte biased by 63.


def _g6_order_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    return bytes([126, 126] + [63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0)])


def _g6_parse_order(data: bytes) -> tuple[int, int]:
    """Decode the graph6 length prefix; returns (n, header_length)."""
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] != 126:
        n = data[0] - 63
        if not 0 <= n <= 62:
            raise ValueError(f"bad graph6 length byte {data[0]:#x}")
        return n, 1
    if len(data) >= 2 and data[1] == 126:
        chunk, offset = data[2:8], 8
    else:
        chunk, offset = data[1:4], 4
    if len(data) < offset:
        raise ValueError("truncated graph6 length prefix")
    n = 0
    for b in chunk:
        if not 63 <= b <= 126:
            raise ValueError(f"bad graph6 length byte {b:#x}")
        n = (n << 6) | (b - 63)
    return n, offset


def to_graph6(g: Graph) -> bytes:
    """Canonical graph6 encoding of g (no header, no trailing newline)."""
    n = g.n
    if n > 1:
        bits = np.concatenate([g.adj[:j, j] for j in range(1, n)]).astype(np.uint8)
    else:
        bits = np.zeros(0, dtype=np.uint8)
    pad = (-len(bits)) % 6
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    groups = bits.reshape(-1, 6)
    weights = np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8)
    body = (groups * weights).sum(axis=1).astype(np.uint8) + 63
    return _g6_order_bytes(n) + body.tobytes()


def from_graph6(data) -> Graph:
    """Parse a graph6-encoded graph from bytes or str.

    Accepts the optional ``>>graph6<<`` header and a trailing newline; the body
    must be exactly ceil(n(n-1)/2 / 6) bytes, each in 0x3F..0x7E.
    """
    if isinstance(data, str):
        data = data.encode("ascii")
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    data = data.rstrip(b"\r\n")
    n, offset = _g6_parse_order(data)
    if n > GRAPH6_MAX_ORDER:
        raise ValueError(f"graph6 order {n} exceeds supported maximum {GRAPH6_MAX_ORDER}")
    if n == 0:
        raise ValueError("graph6 string encodes an empty vertex set")
    body = data[offset:]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) < nbytes:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {nbytes}")
    if len(body) > nbytes:
        raise ValueError(f"graph6 body has {len(body) - nbytes} trailing bytes")
    vals = np.frombuffer(body, dtype=np.uint8).astype(np.int16) - 63
    if (vals < 0).any() or (vals > 63).any():
        raise ValueError("graph6 body byte outside 0x3F..0x7E")
    bits = ((vals[:, None] >> np.arange(5, -1, -1)) & 1).ravel()[:nbits]
    adj = np.zeros((n, n), dtype=bool)
    pos = 0
    for j in range(1, n):
        adj[:j, j] = bits[pos:pos + j].astype(bool)
        pos += j
    adj |= adj.T
    return Graph(n, adj)


def graph6_str(g: Graph) -> str:
    return to_graph6(g).decode("ascii")


# ---------------------------------------------------------------------------
# Plain-text edge list: first line "n", then one "i j" pair per line, 0-indexed.


def read_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'i j' on edge line, got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{i} {j}" for i, j in g.edges())
    return "\n".join(lines) + "\n"
