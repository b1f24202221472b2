import numpy as np
import pytest

from vulnk import (
    ApproxParams,
    InvalidArguments,
    InvalidK,
    UncertainGraph,
    WorldCoins,
    basic_sample_size,
    chain_example,
    estimate_topk_basic,
    exact_default_probabilities,
    forward_default_counts,
    sample_world_forward,
    sn_topk,
)
from conftest import random_small_graph

PARAMS = ApproxParams()


def test_params_validated():
    with pytest.raises(InvalidArguments):
        ApproxParams(eps=0.0)
    with pytest.raises(InvalidArguments):
        ApproxParams(delta=1.0)


def test_sample_size_values():
    assert basic_sample_size(100, 10, PARAMS) == 203
    assert basic_sample_size(2, 1, PARAMS) == 52


def test_sample_size_invalid_k():
    with pytest.raises(InvalidK):
        basic_sample_size(5, 5, PARAMS)
    with pytest.raises(InvalidK):
        basic_sample_size(5, 0, PARAMS)


def test_certain_default_returns_everything():
    g = UncertainGraph(list("ABC"), [1.0, 1.0, 1.0], [0], [1], [0.0])
    assert sample_world_forward(g, WorldCoins(1, 1)) == {0, 1, 2}


def test_no_seeds_returns_empty():
    g = UncertainGraph(list("ABC"), [0.0, 0.0, 0.0], [0, 1], [1, 2], [1.0, 1.0])
    for i in range(1, 20):
        assert sample_world_forward(g, WorldCoins(1, i)) == set()


def test_chain_frequency_matches_oracle():
    g = chain_example()
    t = 100_000
    counts = forward_default_counts(g, 99, t)
    # oracle 0.232 +- 4 sigma
    assert abs(counts[1] / t - 0.232) <= 0.006
    assert abs(counts[0] / t - 0.2) <= 0.006


def test_estimator_deterministic_and_associative():
    g = random_small_graph(8)
    a = forward_default_counts(g, 5, 400)
    b = forward_default_counts(g, 5, 400)
    assert np.array_equal(a, b)
    # splitting the sample range and summing counters is exact
    c = forward_default_counts(g, 5, 150) + forward_default_counts(g, 5, 250, t_start=151)
    assert np.array_equal(a, c)


def test_topk_tie_break_by_node_id():
    g = UncertainGraph(list("ABCD"), [0.0] * 4, [0], [1], [0.5])
    r = estimate_topk_basic(g, 2, 10, seed=3)
    assert r.nodes() == [0, 1]
    assert all(e.estimate == 0.0 for e in r.entries)


def test_chain_topk_is_b():
    r = estimate_topk_basic(chain_example(), 1, 50_000, seed=11)
    assert r.entries[0].label == "B"


def test_n_and_sn_share_code_path():
    g = random_small_graph(12)
    t = basic_sample_size(g.n, 2, PARAMS)
    rn = estimate_topk_basic(g, 2, t, seed=7, method="N")
    rsn = sn_topk(g, 2, PARAMS, seed=7)
    assert rn.nodes() == rsn.nodes()
    assert [e.estimate for e in rn.entries] == [e.estimate for e in rsn.entries]


def test_invalid_k_estimate():
    g = chain_example()
    with pytest.raises(InvalidK):
        estimate_topk_basic(g, 0, 10, 1)
    with pytest.raises(InvalidK):
        estimate_topk_basic(g, 3, 10, 1)


def test_pairwise_misordering_rate():
    # gap 0.5 >= eps, t=100: misorder probability <= exp(-t*eps^2/2) ~ 3.7e-6
    g = UncertainGraph(["hi", "lo"], [0.7, 0.2], [], [], [])
    misorders = 0
    for trial in range(300):
        counts = forward_default_counts(g, 10_000 + trial, 100)
        if counts[1] > counts[0]:
            misorders += 1
    assert misorders == 0


def test_unbiasedness_small_graphs():
    for seed in (21, 22, 23):
        g = random_small_graph(seed)
        est = forward_default_counts(g, seed * 7, 50_000) / 50_000
        assert np.abs(est - exact_default_probabilities(g)).max() <= 0.015
