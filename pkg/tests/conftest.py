import pytest

import lapspread as ls


@pytest.fixture(scope="session")
def named():
    return {name: ls.named_graph(name) for name in ls.NAMED_GRAPHS}


@pytest.fixture(scope="session")
def acceptance_sweep():
    """The seeded 500-graph suite shared by the acceptance criteria."""
    return ls.validity_sweep(ls.SweepConfig(n_min=4, n_max=12, samples=500, seed=7))


def random_graphs(count, n_min=2, n_max=12, seed=99, connected_only=False):
    """Deterministic sample of small graphs for property checks."""
    rng = ls.Xorshift64Star(seed)
    out = []
    while len(out) < count:
        n = rng.randint(n_min, n_max)
        p = (0.2, 0.35, 0.5, 0.7, 0.85)[rng.randint(0, 4)]
        g = ls.random_graph(n, p, rng)
        if connected_only and not ls.is_connected(g):
            continue
        out.append(g)
    return out
