from itertools import product

import numpy as np
import pytest

import helpers
import invariant_suite
from hgsim import orbits, statesim
from hgsim.hypergraph import Hypergraph
from hgsim.orbits import OrbitKey
from hgsim.statesim import StateVector


def dense_orbit(s: StateVector) -> set[OrbitKey]:
    """Oracle: apply every Pauli word as a full matrix, canonicalize densely."""
    psi = s.dense_array()
    out = set()
    for letters in product("IXYZ", repeat=s.n):
        moved = helpers.pauli_word_matrix("".join(letters)) @ psi
        out.add(OrbitKey.from_state(StateVector(s.n, amps=moved)))
    return out


def test_plus_state_orbit_is_all_singleton_decorations():
    # local Z toggles a single-vertex edge, so the orbit has 2**n keys
    for n in (1, 2, 3):
        orbit = orbits.local_pauli_orbit(StateVector.plus_state(n))
        assert len(orbit) == 1 << n
        assert orbit == dense_orbit(StateVector.plus_state(n))


def test_pair_graph_orbit_has_four_patterns():
    s = statesim.build_state(Hypergraph.from_sets(2, [{1, 2}]))
    orbit = orbits.local_pauli_orbit(s)
    assert len(orbit) == 4
    assert orbit == dense_orbit(s)


def test_orbit_matches_dense_oracle_on_random_states():
    rng = np.random.default_rng(13)
    for n in (1, 2, 3):
        for _ in range(4):
            s = statesim.rew_state(helpers.random_table(n, rng, normalized=True))
            assert orbits.local_pauli_orbit(s) == dense_orbit(s)


def test_single_minus_orbit_avoids_plain_graph_states():
    s = statesim.build_state(Hypergraph.from_sets(3, [{1, 2, 3}]))
    orbit = orbits.local_pauli_orbit(s)
    two_uniform = set(orbits._uniform_state_tables(3, 2))
    assert all(key.table not in two_uniform for key in orbit)


def test_orbit_key_quotient_matches_phase_equality():
    s = statesim.build_state(Hypergraph.from_sets(2, [{1, 2}]))
    minus = StateVector(2, amps=-s.dense_array())
    i_phase = StateVector(2, amps=1j * s.dense_array())
    assert OrbitKey.from_state(s) == OrbitKey.from_state(minus) == OrbitKey.from_state(i_phase)
    other = statesim.build_state(Hypergraph.from_sets(2, [{1}]))
    assert OrbitKey.from_state(s) != OrbitKey.from_state(other)


def test_orbit_key_rejects_non_rew_states():
    rng = np.random.default_rng(19)
    with pytest.raises(ValueError):
        OrbitKey.from_state(statesim.random_state(2, rng))
    basis = np.zeros(4, dtype=complex)
    basis[2] = 1.0
    with pytest.raises(ValueError):
        OrbitKey.from_state(StateVector(2, amps=basis))


def test_orbit_cap():
    with pytest.raises(ValueError):
        orbits.local_pauli_orbit(StateVector.plus_state(5))


def test_inequivalence_report_n3():
    report = orbits.class_inequivalence_report(3)
    assert report.state_counts == {1: 7, 2: 7, 3: 1}
    assert report.total_violations == 0
    assert all(count == 0 for count in report.pair_violations.values())
    text = report.to_text()
    assert "pair 1 2 violations 0" in text
    assert text.endswith("total violations 0\n")


def test_inequivalence_report_n4_counts():
    report = orbits.class_inequivalence_report(4)
    assert report.state_counts == {1: 15, 2: 63, 3: 15, 4: 1}
    assert report.total_violations == 0


def test_inequivalence_report_rejects_other_sizes():
    with pytest.raises(ValueError):
        orbits.class_inequivalence_report(5)


def test_invariant_suite():
    invariant_suite.check_orbits(42)
