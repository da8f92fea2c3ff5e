import numpy as np
import pytest

import helpers
import invariant_suite
from hgsim import entanglement, statesim
from hgsim.hypergraph import Hypergraph
from hgsim.statesim import StateVector

GROVER3 = Hypergraph.from_sets(3, [{1, 2, 3}])
PAIR = Hypergraph.from_sets(2, [{1, 2}])
TRIANGLE = Hypergraph.from_sets(3, [{1, 2}, {2, 3}, {1, 3}])


def test_reduced_density_product_state():
    rho = entanglement.reduced_density(StateVector.plus_state(2), {1})
    assert np.allclose(rho, [[0.5, 0.5], [0.5, 0.5]], atol=1e-12)


def test_reduced_density_pair_graph_is_maximally_mixed():
    rho = entanglement.reduced_density(statesim.build_state(PAIR), {1})
    assert np.allclose(rho, np.eye(2) / 2, atol=1e-12)


def test_reduced_density_single_minus_state():
    rho = entanglement.reduced_density(statesim.build_state(GROVER3), {1})
    assert np.allclose(rho, [[0.5, 0.25], [0.25, 0.5]], atol=1e-12)


def test_reduced_density_trace_is_exact_for_sign_states():
    rng = np.random.default_rng(31)
    for _ in range(10):
        n = int(rng.integers(2, 8))
        s = statesim.build_state(helpers.random_hypergraph(n, rng))
        subsystem = sorted(
            set(rng.choice(np.arange(1, n + 1), size=int(rng.integers(1, n)), replace=False))
        )
        rho = entanglement.reduced_density(s, subsystem)
        assert np.trace(rho) == 1.0  # dyadic sums are exact
        assert np.array_equal(rho, rho.T)


def test_reduced_density_matches_loop_oracle():
    rng = np.random.default_rng(37)
    for _ in range(10):
        n = int(rng.integers(2, 6))
        s = statesim.random_state(n, rng)
        subsystem = sorted(
            set(rng.choice(np.arange(1, n + 1), size=int(rng.integers(1, n)), replace=False))
        )
        rho = entanglement.reduced_density(s, subsystem)
        oracle = helpers.loop_partial_trace(s.amps, n, subsystem)
        assert np.allclose(rho, oracle, atol=1e-12)


def test_reduced_density_rejects_bad_subsystems():
    s = StateVector.plus_state(3)
    for bad in (set(), {1, 2, 3}, {0}, {4}):
        with pytest.raises(ValueError):
            entanglement.reduced_density(s, bad)


def test_lambda_max_values():
    assert entanglement.lambda_max(np.eye(2) / 2) == pytest.approx(0.5, abs=1e-12)
    m = np.array([[0.5, 0.25], [0.25, 0.5]])
    assert entanglement.lambda_max(m) == pytest.approx(0.75, abs=1e-10)
    v = np.array([1.0, 2.0, 2.0]) / 3.0
    assert entanglement.lambda_max(np.outer(v, v)) == pytest.approx(1.0, abs=1e-10)


def test_lambda_max_rejects_non_hermitian():
    with pytest.raises(ValueError):
        entanglement.lambda_max(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_geometric_measure_single_minus_state():
    report = entanglement.genuine_multipartite_geometric(statesim.build_state(GROVER3))
    assert len(report.cuts) == 3
    assert all(lam == pytest.approx(0.75, abs=1e-10) for _, lam in report.cuts)
    assert report.e2 == pytest.approx(0.25, abs=1e-9)


def test_geometric_measure_product_state_is_zero():
    report = entanglement.genuine_multipartite_geometric(StateVector.plus_state(3))
    assert report.e2 == pytest.approx(0.0, abs=1e-12)
    assert report.lambda_star == pytest.approx(1.0, abs=1e-12)


def test_geometric_measure_triangle_graph():
    report = entanglement.genuine_multipartite_geometric(statesim.build_state(TRIANGLE))
    assert all(lam == pytest.approx(0.5, abs=1e-10) for _, lam in report.cuts)
    assert report.e2 == pytest.approx(0.5, abs=1e-10)


def test_bipartition_enumeration_covers_each_cut_once():
    for n in range(2, 8):
        masks = entanglement.bipartition_masks(n)
        assert len(masks) == (1 << (n - 1)) - 1
        full = (1 << n) - 1
        seen = set()
        for m in masks:
            assert 1 <= m.bit_count() <= n // 2
            assert m not in seen and (m ^ full) not in seen
            seen.add(m)


def test_geometric_measure_cap():
    with pytest.raises(ValueError):
        entanglement.genuine_multipartite_geometric(StateVector.plus_state(13))
    with pytest.raises(ValueError):
        entanglement.genuine_multipartite_geometric(StateVector.plus_state(1))


def test_report_text_format():
    report = entanglement.genuine_multipartite_geometric(statesim.build_state(GROVER3))
    assert report.to_text() == (
        "cut 1 lambda 0.75\ncut 2 lambda 0.75\ncut 4 lambda 0.75\nE2 0.25\n"
    )


def test_product_overlap_product_state():
    assert entanglement.product_overlap(StateVector.plus_state(3)) == pytest.approx(
        1.0, abs=1e-9
    )


def test_product_overlap_pair_graph():
    best = entanglement.product_overlap(statesim.build_state(PAIR))
    assert best == pytest.approx(0.5, abs=1e-6)


def test_product_overlap_single_minus_state():
    best = entanglement.product_overlap(statesim.build_state(GROVER3))
    assert 0.5625 - 1e-9 <= best <= 0.75 + 1e-9


def test_product_overlap_requires_restarts():
    with pytest.raises(ValueError):
        entanglement.product_overlap(StateVector.plus_state(2), restarts=0)


def test_invariant_suite():
    invariant_suite.check_entanglement(42)
