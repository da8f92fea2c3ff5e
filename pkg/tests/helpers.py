"""Independent oracles and generators shared by the test modules.

Everything here recomputes expected values by a route different from the
package code: subset-sum ANF instead of the butterfly, explicit label loops
instead of reshape tricks, full Kronecker matrices instead of streaming
gate application.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from hgsim.boolfn import TruthTable
from hgsim.hypergraph import Hypergraph
from hgsim.statesim import StateVector

PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def brute_anf(tt: TruthTable) -> tuple[set[frozenset[int]], int]:
    """Subset-sum Mobius oracle: coefficient of S is XOR of f over x <= S."""
    monomials = set()
    constant = 0
    for s in range(tt.size):
        acc = 0
        for x in range(tt.size):
            if x & s == x:
                acc ^= tt[x]
        if acc:
            if s == 0:
                constant = 1
            else:
                monomials.add(frozenset(i + 1 for i in range(tt.n) if (s >> i) & 1))
    return monomials, constant


def pauli_word_matrix(letters: str) -> np.ndarray:
    """Full matrix of a Pauli word; letters[i] acts on qubit i+1 (LSB first)."""
    m = PAULI[letters[0]]
    for c in letters[1:]:
        m = np.kron(PAULI[c], m)
    return m


def dense_state(s: StateVector) -> np.ndarray:
    return s.dense_array().copy()


def loop_partial_trace(psi: np.ndarray, n: int, subsystem) -> np.ndarray:
    """Partial trace by explicit label arithmetic."""
    kept = sorted(subsystem)
    rest = [q for q in range(1, n + 1) if q not in kept]

    def label(row: int, env: int) -> int:
        x = 0
        for j, q in enumerate(kept):
            if (row >> j) & 1:
                x |= 1 << (q - 1)
        for j, q in enumerate(rest):
            if (env >> j) & 1:
                x |= 1 << (q - 1)
        return x

    dim = 1 << len(kept)
    rho = np.zeros((dim, dim), dtype=complex)
    for a in range(dim):
        for b in range(dim):
            rho[a, b] = sum(
                psi[label(a, e)] * np.conj(psi[label(b, e)])
                for e in range(1 << len(rest))
            )
    return rho


def permute_qubits(s: StateVector, perm: dict[int, int]) -> StateVector:
    """Relabel qubits: old qubit i becomes perm[i] in the new state."""
    psi = s.dense_array()
    out = np.empty_like(psi)
    for x in range(len(psi)):
        y = 0
        for i in range(1, s.n + 1):
            if (x >> (i - 1)) & 1:
                y |= 1 << (perm[i] - 1)
        out[y] = psi[x]
    return StateVector(s.n, amps=out)


def _random_bits(width: int, rng: np.random.Generator) -> int:
    return int.from_bytes(rng.bytes((width + 7) // 8), "little") & ((1 << width) - 1)


def random_hypergraph(n: int, rng: np.random.Generator) -> Hypergraph:
    """Uniform over all hypergraphs: every possible edge tossed independently."""
    indicator = _random_bits((1 << n) - 1, rng) << 1
    return Hypergraph(n, frozenset(m for m in range(1, 1 << n) if (indicator >> m) & 1))


def random_table(n: int, rng: np.random.Generator, normalized: bool = False) -> TruthTable:
    bits = _random_bits(1 << n, rng)
    if normalized:
        bits &= ~1
    return TruthTable(n, bits)


def random_balanced_table(n: int, rng: np.random.Generator) -> TruthTable:
    """Normalized table with exactly 2**(n-1) ones (none at x=0)."""
    ones = rng.choice(np.arange(1, 1 << n), size=1 << (n - 1), replace=False)
    bits = 0
    for x in ones:
        bits |= 1 << int(x)
    return TruthTable(n, bits)


def all_hypergraphs(n: int):
    """Every hypergraph on n vertices (2**(2**n - 1) of them)."""
    masks = list(range(1, 1 << n))
    for pick in range(1 << len(masks)):
        yield Hypergraph(
            n, frozenset(m for j, m in enumerate(masks) if (pick >> j) & 1)
        )


def connected_two_uniform(n: int):
    """Every 2-uniform hypergraph whose edges connect all n vertices."""
    pairs = [frozenset(c) for c in combinations(range(1, n + 1), 2)]
    for pick in range(1, 1 << len(pairs)):
        edges = [p for j, p in enumerate(pairs) if (pick >> j) & 1]
        parent = list(range(n + 1))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in edges:
            a, b = sorted(e)
            parent[find(a)] = find(b)
        if len({find(v) for v in range(1, n + 1)}) == 1:
            yield Hypergraph.from_sets(n, edges)
