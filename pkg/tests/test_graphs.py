import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import lapspread as ls
from lapspread.graphs import _g6_parse_order

from conftest import random_graphs


def test_from_edge_list_triangle():
    g = ls.from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert g.n == 3 and g.m == 3
    assert not g.adj.diagonal().any()
    assert all(g.has_edge(i, j) for i in range(3) for j in range(3) if i != j)


def test_from_edge_list_k2_and_duplicates():
    g = ls.from_edge_list(2, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_from_edge_list_x8_shape():
    g = ls.named_graph("X8")
    assert g.n == 8 and g.m == 12
    assert g.is_regular() and g.degrees()[0] == 3


def test_from_edge_list_rejects_loops_and_range():
    with pytest.raises(ValueError, match="loop"):
        ls.from_edge_list(3, [(1, 1)])
    with pytest.raises(ValueError, match="out of range"):
        ls.from_edge_list(3, [(0, 3)])
    with pytest.raises(ValueError, match="out of range"):
        ls.from_edge_list(3, [(-1, 2)])


def test_graph_validates_matrix():
    with pytest.raises(ValueError, match="symmetric"):
        ls.Graph(2, np.array([[False, True], [False, False]]))
    with pytest.raises(ValueError, match="loops"):
        ls.Graph(1, np.array([[True]]))
    with pytest.raises(ValueError, match="vertex"):
        ls.Graph(0, np.zeros((0, 0), dtype=bool))


def test_graph_is_immutable():
    g = ls.from_edge_list(2, [(0, 1)])
    with pytest.raises(ValueError):
        g.adj[0, 1] = False


# --- graph6 ---------------------------------------------------------------

def test_graph6_k2():
    # One edge on two vertices: header 'A', single body bit set -> '_'.
    assert ls.to_graph6(ls.from_edge_list(2, [(0, 1)])) == b"A_"
    assert ls.from_graph6(b"A_") == ls.from_edge_list(2, [(0, 1)])


def test_graph6_k4():
    # All six upper-triangle bits set -> 63 + 63 = '~'.
    k4 = ls.complete(4)
    assert ls.to_graph6(k4) == b"C~"
    assert ls.from_graph6("C~") == k4


def test_graph6_round_trip_small():
    s = b"D?{"
    assert ls.to_graph6(ls.from_graph6(s)) == s


def test_graph6_accepts_header_and_newline():
    g = ls.from_graph6(b">>graph6<<A_\n")
    assert g == ls.from_edge_list(2, [(0, 1)])


@pytest.mark.parametrize("bad", [b"", b"B", b"Cz!", b"C" + bytes([0x20])])
def test_graph6_malformed(bad):
    with pytest.raises(ValueError):
        ls.from_graph6(bad)


def test_graph6_trailing_bytes_rejected():
    with pytest.raises(ValueError, match="trailing"):
        ls.from_graph6(b"A_?")


def test_graph6_long_order_header():
    # Orders above 62 switch to the 3-byte length form.
    g = ls.cycle(70)
    enc = ls.to_graph6(g)
    assert enc[0] == 126
    n, offset = _g6_parse_order(enc)
    assert (n, offset) == (70, 4)
    assert ls.from_graph6(enc) == g


def test_graph6_round_trip_random():
    rng = ls.Xorshift64Star(2024)
    for _ in range(1000):
        n = rng.randint(1, 20)
        g = ls.random_graph(n, 0.4, rng)
        assert ls.from_graph6(ls.to_graph6(g)) == g


# --- complement / connectivity --------------------------------------------

def test_complement_triangle_is_empty():
    g = ls.complement(ls.complete(3))
    assert g.m == 0


def test_complement_x8(named):
    x8c = ls.complement(named["X8"])
    assert x8c == named["X8c"]
    p = ls.structural_params(x8c)
    assert (p.min_common_adjacent, p.min_common_nonadjacent) == (1, 2)


def test_complement_c5_self_complementary():
    # Explicit relabeling i -> 2i mod 5 maps the pentagon onto its complement.
    c5 = ls.cycle(5)
    relabel = [0, 2, 4, 1, 3]
    comp = ls.complement(c5)
    for i in range(5):
        for j in range(5):
            assert comp.adj[relabel[i], relabel[j]] == c5.adj[i, j]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 14))
def test_complement_is_involution(seed, n):
    g = ls.random_graph(n, 0.5, ls.Xorshift64Star(seed))
    assert ls.complement(ls.complement(g)) == g


def test_is_connected():
    assert ls.is_connected(ls.from_edge_list(2, [(0, 1)]))
    assert not ls.is_connected(ls.Graph(2, np.zeros((2, 2), dtype=bool)))
    assert ls.is_connected(ls.named_graph("Z8"))
    two_k2 = ls.from_edge_list(4, [(0, 1), (2, 3)])
    assert not ls.is_connected(two_k2)


def test_connectivity_agrees_with_algebraic_connectivity():
    for g in random_graphs(500, n_min=2, n_max=10, seed=5):
        conn = ls.algebraic_connectivity(g)
        assert ls.is_connected(g) == (conn > 1e-9), ls.graph6_str(g)


# --- common neighbors -------------------------------------------------------

def test_common_neighbors_petersen_adjacent_pairs():
    g = ls.petersen()
    for i, j in g.edges():
        assert ls.common_neighbors(g, i, j) == 0


def test_common_neighbors_path_endpoints():
    g = ls.path(3)
    assert ls.common_neighbors(g, 0, 2) == 1


def test_common_neighbors_y8_nonadjacent(named):
    g = named["Y8"]
    for i in range(8):
        for j in range(i + 1, 8):
            if not g.has_edge(i, j):
                assert ls.common_neighbors(g, i, j) == 4


def test_common_neighbors_rejects_same_vertex():
    with pytest.raises(ValueError):
        ls.common_neighbors(ls.complete(3), 1, 1)


def test_common_neighbors_match_matrix_square():
    for g in random_graphs(50, seed=11):
        walks = ls.common_neighbor_matrix(g)
        square = g.adj.astype(int) @ g.adj.astype(int)
        assert np.array_equal(walks, square)
        for i in range(g.n):
            for j in range(g.n):
                if i != j:
                    assert ls.common_neighbors(g, i, j) == walks[i, j]


# --- vertex connectivity ----------------------------------------------------

@pytest.mark.parametrize("a,b", [(1, 2), (2, 3), (2, 5), (3, 7)])
def test_vertex_connectivity_complete_bipartite(a, b):
    assert ls.vertex_connectivity(ls.complete_bipartite(a, b)) == a


def test_vertex_connectivity_fan_has_cut_vertex():
    assert ls.vertex_connectivity(ls.fan(3)) == 1


def test_vertex_connectivity_complete_convention():
    assert ls.vertex_connectivity(ls.complete(5)) == 4
    assert ls.vertex_connectivity(ls.complete(2)) == 1


def test_vertex_connectivity_cycle_and_path():
    assert ls.vertex_connectivity(ls.cycle(6)) == 2
    assert ls.vertex_connectivity(ls.path(5)) == 1


def test_vertex_connectivity_rejects_disconnected():
    with pytest.raises(ValueError, match="connected"):
        ls.vertex_connectivity(ls.from_edge_list(4, [(0, 1), (2, 3)]))


# --- edge-list text format --------------------------------------------------

def test_edge_list_round_trip():
    g = ls.named_graph("U8")
    assert ls.read_edge_list(ls.write_edge_list(g)) == g


def test_edge_list_parse():
    g = ls.read_edge_list("3\n0 1\n1 2\n")
    assert g == ls.path(3)
    with pytest.raises(ValueError):
        ls.read_edge_list("")
    with pytest.raises(ValueError):
        ls.read_edge_list("x\n0 1\n")
    with pytest.raises(ValueError):
        ls.read_edge_list("3\n0 1 2\n")
