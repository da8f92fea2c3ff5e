"""Boolean phase functions as packed truth tables, and their XOR-monomial form.

Conventions shared by the whole package:

* Basis labels are integers 0 <= x < 2**n.  Qubit i (1-based) occupies bit
  i-1 of a label, qubit 1 least significant.
* A truth table is one big integer; bit x holds f(x).
* Hex serialization is the plain hexadecimal of that integer, zero padded to
  ceil(2**n / 4) digits, so the lowest-order hex digit covers x = 0..3.

The XOR-monomial form (`MonomialSet`) is the unique expansion
f(x) = constant XOR (XOR over monomials m of the product of x_i for i in m).
Its monomials are exactly the hyperedges of the phase-flip circuit that
prepares the sign pattern (-1)^f.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from . import _bits
from .errors import FormatError

MAX_QUBITS = 20


@dataclass(frozen=True)
class TruthTable:
    """A Boolean function f: {0,1}^n -> {0,1} as a packed 2**n-bit table."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count must be in 1..{MAX_QUBITS}, got {self.n}")
        if not 0 <= self.bits < 1 << (1 << self.n):
            raise ValueError("bit storage does not fit 2**n bits")

    @property
    def size(self) -> int:
        return 1 << self.n

    def __getitem__(self, x: int) -> int:
        if not 0 <= x < self.size:
            raise IndexError(f"basis label {x} out of range for n={self.n}")
        return (self.bits >> x) & 1

    def weight(self) -> int:
        """Number of inputs mapped to 1 (minus signs of the matching state)."""
        return self.bits.bit_count()


@dataclass(frozen=True)
class MonomialSet:
    """XOR-of-monomials form: a set of nonempty vertex subsets plus a constant bit.

    The constant is the coefficient of the empty monomial.  It is kept apart
    from the monomials because it corresponds to a global sign of the matching
    state, never to a hyperedge.
    """

    n: int
    monomials: frozenset[frozenset[int]]
    constant: int

    def __post_init__(self) -> None:
        if self.constant not in (0, 1):
            raise ValueError("constant must be a bit")
        for m in self.monomials:
            if not m:
                raise ValueError("monomials must be nonempty (constant is separate)")
            if not all(1 <= v <= self.n for v in m):
                raise ValueError(f"monomial {sorted(m)} out of range for n={self.n}")


def hex_digits(n: int) -> int:
    """Number of hex digits a table for n qubits serializes to."""
    return ((1 << n) + 3) // 4


def truth_table_from_hex(digits: str, n: int) -> TruthTable:
    """Parse a table from its hex serialization (exact digit count required)."""
    if not 1 <= n <= MAX_QUBITS:
        raise FormatError(f"qubit count must be in 1..{MAX_QUBITS}, got {n}")
    expected = hex_digits(n)
    if len(digits) != expected:
        raise FormatError(f"expected {expected} hex digits for n={n}, got {len(digits)}")
    if not all(c in string.hexdigits for c in digits):
        raise FormatError(f"invalid hex string {digits!r}")
    return TruthTable(n, int(digits, 16))


def to_hex(tt: TruthTable) -> str:
    return format(tt.bits, f"0{hex_digits(tt.n)}X")


def from_text(text: str) -> TruthTable:
    """Parse the two-line truth-table format: `n <int>` then the hex string."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise FormatError("truth-table text must be exactly two lines: header and hex")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise FormatError(f"bad header line {lines[0]!r}, expected 'n <int>'")
    try:
        n = int(head[1])
    except ValueError:
        raise FormatError(f"bad qubit count {head[1]!r}") from None
    return truth_table_from_hex(lines[1], n)


def to_text(tt: TruthTable) -> str:
    return f"n {tt.n}\n{to_hex(tt)}\n"


def mobius_transform(tt: TruthTable) -> MonomialSet:
    """The unique XOR-monomial form of a table, via the in-place XOR butterfly.

    The transform is its own inverse; the constant comes out as the entry at
    label 0, i.e. f(0).
    """
    t = _bits.butterfly(tt.bits, tt.n)
    monomials = frozenset(
        _bits.vertices_from_mask(label) for label in _bits.set_bits(t >> 1 << 1)
    )
    return MonomialSet(tt.n, monomials, t & 1)


def to_truth_table(ms: MonomialSet) -> TruthTable:
    """Evaluate a monomial set on every input at once (inverse of mobius_transform)."""
    indicator = ms.constant
    for m in ms.monomials:
        indicator |= 1 << _bits.mask_from_vertices(m)
    return TruthTable(ms.n, _bits.butterfly(indicator, ms.n))


def evaluate_anf(ms: MonomialSet, x: int) -> int:
    """Evaluate the monomial form at one input label."""
    if not 0 <= x < 1 << ms.n:
        raise ValueError(f"basis label {x} out of range for n={ms.n}")
    acc = ms.constant
    for m in ms.monomials:
        mask = _bits.mask_from_vertices(m)
        acc ^= (x & mask) == mask
    return acc & 1
