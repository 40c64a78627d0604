import csv
import io
import json
import math

import numpy as np
import pytest

import lapspread as ls
from lapspread.certify import certificate_csv, table_csv, table_row, TABLE_COLUMNS

from conftest import random_graphs

SQ17 = math.sqrt(17)
SQ5 = math.sqrt(5)

# The master inequality plus the six derived bounds attained by every strongly
# regular graph at its own common-neighbor minima.
SRG_TIGHT = ("alpha1", "beta1", "spread_vertex", "alpha2", "beta2", "spread_degree")


def eigenpair_near(g, target):
    spec = ls.laplacian_spectrum(g)
    k = int(np.argmin(np.abs(spec.values - target)))
    return float(spec.values[k]), spec.vectors[:, k]


# --- equality conditions -------------------------------------------------------

def test_equality_holds_for_srg_eigenpairs():
    for g in (ls.cycle(5), ls.petersen(), ls.complete_bipartite(3, 3)):
        spec = ls.laplacian_spectrum(g)
        for value, vector in spec.nontrivial_pairs():
            evidence = ls.equality_conditions(g, value, vector)
            assert evidence.holds, (value, evidence.violating_pairs[:3])


def test_equality_holds_for_fan_top_eigenvector():
    t = 3
    g = ls.fan(t)
    x = np.array([1.0] * (2 * t) + [-2.0 * t])
    evidence = ls.equality_conditions(g, 2 * t + 1, x)
    assert evidence.holds


def test_equality_fails_for_z8_connectivity(named):
    g = named["Z8"]
    value, vector = eigenpair_near(g, (11 - SQ5) / 2)
    evidence = ls.equality_conditions(g, value, vector)
    assert not evidence.holds
    for i, j, adjacent, count in evidence.violating_pairs:
        expected = 2 if adjacent else 4
        assert count != expected


def test_equality_conditions_validate_eigenpair(named):
    g = named["X8"]
    with pytest.raises(ValueError, match="eigenpair"):
        ls.equality_conditions(g, 1.2345, np.ones(8))


def test_equality_biconditional_both_ways():
    checked = 0
    for g in random_graphs(80, n_min=4, n_max=10, seed=83, connected_only=True):
        params = ls.structural_params(g)
        if params.min_common_adjacent is None or params.min_common_nonadjacent is None:
            continue
        spec = ls.laplacian_spectrum(g)
        for value, vector in spec.nontrivial_pairs():
            lhs = ls.master_inequality(g, value, vector, params=params, check=False)
            budget = ls.master_tolerance(g, vector, params=params)
            holds = ls.equality_conditions(g, value, vector, params=params,
                                           check=False).holds
            assert (abs(lhs) <= budget) == holds, ls.graph6_str(g)
            checked += 1
    assert checked > 100


# --- certificates ----------------------------------------------------------------

def test_certify_x8_tight_everywhere(named):
    cert = ls.certify_graph(named["X8"])
    tight = set(cert.tight_bounds())
    assert set(SRG_TIGHT) <= tight
    assert "spread_regular" in tight
    attained = cert.master_equality_eigenvalues("any")
    assert any(abs(v - (7 + SQ17) / 2) < 1e-7 for v in attained)
    assert any(abs(v - (7 - SQ17) / 2) < 1e-7 for v in attained)


def test_certify_z8_partial(named):
    cert = ls.certify_graph(named["Z8"])
    tight = set(cert.tight_bounds())
    assert "alpha1" in tight and "alpha2" in tight
    assert "beta1" not in tight and "beta2" not in tight
    assert "spread_vertex" not in tight and "spread_degree" not in tight
    attained = cert.master_equality_eigenvalues("any")
    assert any(abs(v - 8) < 1e-7 for v in attained)
    assert not any(abs(v - (11 - SQ5) / 2) < 1e-7 for v in attained)


def test_certify_u8_beta_side(named):
    cert = ls.certify_graph(named["U8"])
    tight = set(cert.tight_bounds())
    assert "beta1" in tight and "beta2" in tight
    assert "alpha1" not in tight and "alpha2" not in tight


def test_certify_u8c_alpha_side(named):
    cert = ls.certify_graph(named["U8c"])
    tight = set(cert.tight_bounds())
    assert "alpha1" in tight and "alpha2" in tight
    assert "beta1" not in tight and "beta2" not in tight


def test_certify_gap_signs():
    for g in random_graphs(40, n_min=4, n_max=9, seed=89, connected_only=True):
        cert = ls.certify_graph(g)
        for rec in cert.bounds:
            if rec.gap is not None:
                assert rec.gap >= -1e-9, (ls.graph6_str(g), rec)
                assert rec.tight == (abs(rec.gap) <= 1e-7)


def test_certify_srg_cor_list():
    for g in (ls.cycle(5), ls.petersen(), ls.complete_bipartite(3, 3),
              ls.kn_minus_cycles(ls.CyclePartition((3, 3, 3)))):
        cert = ls.certify_graph(g)
        tight = set(cert.tight_bounds())
        assert set(SRG_TIGHT) <= tight, (ls.graph6_str(g), tight)
        reports = {round(rep.eigenvalue, 6): rep for rep in cert.equality}
        assert all(rep.holds_all for rep in cert.equality)
        hi, lo = ls.srg_eigenvalues(ls.detect_srg(g))
        assert round(hi, 6) in reports and round(lo, 6) in reports


def test_certify_complete_graph_partial_certificate():
    cert = ls.certify_graph(ls.complete(5))
    assert cert.mu is None
    rec = cert.record("alpha1")
    assert rec.value is None and rec.tight is None and rec.reason
    # classical bounds still present
    assert cert.record("anderson_morley").value == 8


def test_certificate_records_schema(named):
    cert = ls.certify_graph(named["Y8"])
    records = ls.certificate_records(cert, "Y8")
    assert {r["bound"] for r in records} >= set(SRG_TIGHT)
    for r in records:
        assert set(r) == {"graph", "bound", "value", "attained", "tight", "gap"}
        assert r["graph"] == "Y8"
    text = certificate_csv(records)
    parsed = list(csv.DictReader(io.StringIO(text)))
    assert len(parsed) == len(records)
    assert parsed[0]["graph"] == "Y8"


# --- the summary table --------------------------------------------------------------

def expected_rows(a, b, t):
    x = (2 * b + a + math.sqrt(a * (4 * b - 3 * a))) / 2
    alpha2_ab = (2 * b + a + math.sqrt(4 * b * b - 3 * a * a)) / 2
    y = 2 * t + math.sqrt(2 * t - 1)
    z = 2 * t + math.sqrt(4 * t * t - 2 * t - 1)
    w = 2 - math.sqrt(4 * t * t - 2 * t - 1)
    return {
        "X8": ((7 + SQ17) / 2, (7 + SQ17) / 2, (7 + SQ17) / 2,
               (7 - SQ17) / 2, (7 - SQ17) / 2, (7 - SQ17) / 2),
        "X8c": ((9 + SQ17) / 2, (9 + SQ17) / 2, (9 + SQ17) / 2,
                (9 - SQ17) / 2, (9 - SQ17) / 2, (9 - SQ17) / 2),
        "Y8": (8, 8, 8, 4, 4, 4),
        "Z8": (8, 8, 8, (11 - SQ5) / 2, 4, 4),
        "U8": (6, 8, 8, 2, 2, 2),
        "U8c": (6, 6, 6, 2, 0, 0),
        f"K_{a},{b}": (a + b, x, alpha2_ab, a, a, 2 * a - b),
        f"F_{t}": (2 * t + 1, y, z, 1, 1, w),
    }


@pytest.mark.parametrize("a,b,t", [(2, 5, 3), (1, 2, 2), (2, 3, 5), (3, 7, 2)])
def test_extremal_table_matches_closed_forms(a, b, t):
    rows = ls.extremal_table(a=a, b=b, t=t)
    wanted = expected_rows(a, b, t)
    assert [r.graph for r in rows] == list(wanted)
    for row in rows:
        assert row.as_tuple() == pytest.approx(wanted[row.graph], abs=1e-9), row.graph


def test_extremal_table_rejects_bad_parameters():
    with pytest.raises(ValueError):
        ls.extremal_table(a=3, b=3)
    with pytest.raises(ValueError):
        ls.extremal_table(a=5, b=2)
    with pytest.raises(ValueError):
        ls.extremal_table(t=1)


def test_table_csv_layout():
    text = table_csv(ls.extremal_table())
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == list(TABLE_COLUMNS)
    assert len(rows) == 9
    y8 = rows[3]
    assert y8[0] == "Y8"
    assert [float(v) for v in y8[1:]] == [8, 8, 8, 4, 4, 4]


def test_table_row_rejects_na_bounds():
    with pytest.raises(ValueError, match="not applicable"):
        table_row(ls.complete(4), "K4")
