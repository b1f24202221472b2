import numpy as np
import pytest

from vulnk import (
    ApproxParams,
    GroundTruth,
    InfeasibleShape,
    MismatchedK,
    TopKEntry,
    TopKResult,
    bench,
    chain_example,
    diamond_witness,
    exact_default_probabilities,
    exact_topk,
    ground_truth,
    parse_k,
    precision_at_k,
    synth_graph,
)
from conftest import random_small_graph

PARAMS = ApproxParams()


def test_ground_truth_chain():
    truth = ground_truth(chain_example(), 2, seed=3)
    assert truth.nodes[:2] == [1, 0]
    assert abs(truth.estimates[0] - 0.232) <= 0.01
    assert abs(truth.estimates[1] - 0.2) <= 0.01
    assert truth.p_k == truth.estimates[1]


def test_single_sample_estimates_are_binary():
    truth = ground_truth(chain_example(), 1, samples=1, seed=5)
    assert set(np.unique(truth.estimates)) <= {0.0, 1.0}


def test_truth_matches_oracle_when_gaps_large():
    hits = 0
    for seed in range(30):
        g = random_small_graph(8000 + seed)
        p = exact_default_probabilities(g)
        ranked = sorted(p, reverse=True)
        if min(abs(a - b) for a, b in zip(ranked, ranked[1:])) <= 0.02:
            continue
        truth = ground_truth(g, g.n, seed=44 + seed)
        oracle = exact_topk(g, g.n)
        assert truth.nodes == oracle.nodes()
        hits += 1
    assert hits >= 5


def _fake_result(nodes, k):
    entries = [TopKEntry(v, str(v), 0.5, False, "freq") for v in nodes]
    return TopKResult(method="N", entries=entries, k=k)


def _fake_truth(nodes, k):
    return GroundTruth(
        nodes=list(nodes), estimates=np.zeros(len(nodes)), k=k,
        p_k=0.0, samples=1, seed=0,
    )


def test_precision_cases():
    assert precision_at_k(_fake_result(range(10), 10), _fake_truth(range(10), 10)) == 1.0
    assert precision_at_k(_fake_result(range(10), 10), _fake_truth(range(10, 20), 10)) == 0.0
    pred = _fake_result(list(range(9)) + [99], 10)
    assert precision_at_k(pred, _fake_truth(range(10), 10)) == 0.9
    with pytest.raises(MismatchedK):
        precision_at_k(_fake_result(range(3), 3), _fake_truth(range(4), 4))


def test_parse_k():
    assert parse_k("5%", 2000) == 100
    assert parse_k("1%", 50) == 1
    assert parse_k("0.01%", 100) == 1  # rounded up to at least one
    assert parse_k("7", 100) == 7
    assert parse_k(7, 100) == 7


def test_synth_chain_matches_example_topology():
    g = synth_graph("chain", 2, 1, seed=1)
    ref = chain_example()
    assert (g.n, g.m) == (ref.n, ref.m)
    assert np.array_equal(g.edge_src, ref.edge_src)
    assert np.array_equal(g.edge_dst, ref.edge_dst)


def test_synth_diamond_matches_witness_topology():
    g = synth_graph("diamond", 4, 4, seed=1)
    ref = diamond_witness()
    assert np.array_equal(g.edge_src, ref.edge_src)
    assert np.array_equal(g.edge_dst, ref.edge_dst)


def test_synth_power_law_shape_and_determinism():
    g = synth_graph("power-law", 200, 600, seed=9)
    assert g.n == 200 and g.m == 600
    h = synth_graph("power-law", 200, 600, seed=9)
    assert g.edges_identical(h)
    indeg = np.bincount(g.edge_dst, minlength=g.n)
    assert indeg.max() >= 5 * max(1, np.median(indeg))  # degree-skewed


def test_synth_random_dag_is_acyclic_shape():
    g = synth_graph("random-dag", 30, 60, seed=2)
    assert g.n == 30 and g.m == 60


def test_synth_infeasible():
    with pytest.raises(InfeasibleShape):
        synth_graph("chain", 5, 99, seed=0)
    with pytest.raises(InfeasibleShape):
        synth_graph("power-law", 10, 999, seed=0)
    with pytest.raises(InfeasibleShape):
        synth_graph("nope", 10, 10, seed=0)


def test_bench_single_method():
    g = random_small_graph(64)
    report = bench(g, 2, ["SN"], PARAMS, seed=5, fixed_samples=500)
    assert len(report.rows) == 1
    row = report.rows[0]
    assert row.method == "SN" and row.wall_time > 0
    assert "method\tk" in report.to_tsv()
    assert report.to_csv().startswith("method,k")


def test_bench_multiple_methods():
    g = random_small_graph(65)
    report = bench(g, 2, ["N", "BSRBK"], PARAMS, seed=5, fixed_samples=2000)
    assert [r.method for r in report.rows] == ["N", "BSRBK"]
    for row in report.rows:
        assert 0.0 <= row.precision <= 1.0
