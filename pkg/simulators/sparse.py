"""
Sparse amplitude simulator for Clifford+T circuits.

The state is a dict from basis index to complex amplitude. Bit q of the
index is qubit q, so bitstrings print qubit 0 first.
"""
from __future__ import annotations

import cmath
import logging
import math

import numpy as np

from circuits.ir import GateKind
from simulators.boolean import initial_bits, FRESH
from utils import config
from utils.errors import DimensionMismatch, MacroInPrimitiveEngine, StateTooLarge

logger = logging.getLogger(__name__)

OMEGA = cmath.exp(1j * math.pi / 4)
_SQRT_HALF = 1 / math.sqrt(2)

SINGLE_QUBIT = {
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=np.complex128) * _SQRT_HALF,
    GateKind.S: np.diag([1, 1j]).astype(np.complex128),
    GateKind.SDG: np.diag([1, -1j]).astype(np.complex128),
    GateKind.T: np.diag([1, OMEGA]).astype(np.complex128),
    GateKind.TDG: np.diag([1, OMEGA.conjugate()]).astype(np.complex128),
}


class SparseState:
    __slots__ = ("qubit_count", "amplitudes", "prune_tol", "support_cap", "peak_support")

    def __init__(self, qubit_count, amplitudes=None, prune_tol=None, support_cap=None):
        self.qubit_count = qubit_count
        self.amplitudes: dict[int, complex] = dict(amplitudes) if amplitudes else {0: 1.0 + 0j}
        self.prune_tol = config.prune_tol() if prune_tol is None else prune_tol
        self.support_cap = config.support_cap() if support_cap is None else support_cap
        self.peak_support = len(self.amplitudes)
        self._check_support()

    # ------------------- CONSTRUCTION -------------------
    @classmethod
    def product(cls, qubit_count, bits, magic=(), **kwargs):
        """
        |bits> with every qubit in ``magic`` replaced by |A>.

        ``bits`` is a per-qubit list of 0/1 values.
        """
        base = sum(bit << q for q, bit in enumerate(bits) if bit == 1)
        state = cls(qubit_count, {base: 1.0 + 0j}, **kwargs)
        for q in magic:
            mask = 1 << q
            expanded = {}
            for key, amp in state.amplitudes.items():
                expanded[key & ~mask] = amp * _SQRT_HALF
                expanded[key | mask] = amp * OMEGA * _SQRT_HALF
            state.amplitudes = expanded
            state._check_support()
        return state

    def copy(self):
        return SparseState(self.qubit_count, self.amplitudes, self.prune_tol, self.support_cap)

    # ------------------- GATES -------------------
    def apply_x(self, q):
        mask = 1 << q
        self.amplitudes = {key ^ mask: amp for key, amp in self.amplitudes.items()}

    def apply_controlled_x(self, controls, q):
        cmask = 0
        for c in controls:
            cmask |= 1 << c
        mask = 1 << q
        self.amplitudes = {
            (key ^ mask if key & cmask == cmask else key): amp
            for key, amp in self.amplitudes.items()
        }

    def apply_single_qubit_gate(self, gate: np.ndarray, q):
        if gate.shape != (2, 2):
            raise ValueError("Single-qubit gate must be 2x2")
        mask = 1 << q
        new_amplitudes: dict[int, complex] = {}
        for key in self.amplitudes:
            low = key & ~mask
            if low in new_amplitudes:
                continue
            amp0 = self.amplitudes.get(low, 0j)
            amp1 = self.amplitudes.get(low | mask, 0j)
            new0 = complex(gate[0, 0] * amp0 + gate[0, 1] * amp1)
            new1 = complex(gate[1, 0] * amp0 + gate[1, 1] * amp1)
            new_amplitudes[low] = new0
            new_amplitudes[low | mask] = new1
        self.amplitudes = {k: v for k, v in new_amplitudes.items() if abs(v) >= self.prune_tol}
        self._check_support()

    def apply(self, gate, index=None):
        kind, ops = gate.kind, gate.operands
        if kind is GateKind.X:
            self.apply_x(ops[0])
        elif kind in (GateKind.CNOT, GateKind.TOFFOLI):
            self.apply_controlled_x(ops[:-1], ops[-1])
        elif kind in SINGLE_QUBIT:
            self.apply_single_qubit_gate(SINGLE_QUBIT[kind], ops[0])
        else:
            raise MacroInPrimitiveEngine(index, kind.name)

    def _check_support(self):
        size = len(self.amplitudes)
        self.peak_support = max(self.peak_support, size)
        if size > self.support_cap:
            raise StateTooLarge(f"state too large: {size} amplitudes exceeds cap {self.support_cap}")

    # ------------------- QUERIES -------------------
    def norm(self):
        return math.sqrt(sum(abs(amp) ** 2 for amp in self.amplitudes.values()))

    def inner(self, other: "SparseState"):
        """<self|other>."""
        if other.qubit_count != self.qubit_count:
            raise DimensionMismatch(
                f"dimension mismatch: {self.qubit_count} vs {other.qubit_count} qubits"
            )
        small, large = (self, other) if len(self.amplitudes) <= len(other.amplitudes) else (other, self)
        total = sum(amp.conjugate() * large.amplitudes.get(key, 0j) for key, amp in small.amplitudes.items())
        return total if small is self else total.conjugate()

    def bitstring(self, key):
        return "".join(str((key >> q) & 1) for q in range(self.qubit_count))

    def as_bitstrings(self):
        return {self.bitstring(key): amp for key, amp in sorted(self.amplitudes.items())}

    def amplitude(self, bits: str):
        key = sum(1 << q for q, ch in enumerate(bits) if ch == "1")
        return self.amplitudes.get(key, 0j)

    @property
    def support_size(self):
        return len(self.amplitudes)

    def __repr__(self):
        return f"<SparseState qubits={self.qubit_count} support={self.support_size}>"


def equiv_global_phase(s1: SparseState, s2: SparseState, tol=1e-10):
    return abs(s1.inner(s2)) >= 1 - tol


def initial_state(circuit, inputs, **kwargs):
    bits = initial_bits(circuit, inputs)
    magic = [q for q, bit in enumerate(bits) if bit == FRESH]
    return SparseState.product(circuit.qubit_count, [b if b != FRESH else 0 for b in bits], magic, **kwargs)


def run_sparse(circuit, inputs, state=None, **kwargs) -> SparseState:
    """
    Apply a primitive-level circuit to its tagged input product state.

    MagicA qubits start in |A>; Toffoli is accepted as a permutation, the
    AND/uncompute macros must be lowered first.
    """
    for index, gate in enumerate(circuit.gates):
        if gate.kind.is_macro:
            raise MacroInPrimitiveEngine(index, gate.kind.name)
    state = state.copy() if state is not None else initial_state(circuit, inputs, **kwargs)
    for index, gate in enumerate(circuit.gates):
        state.apply(gate, index)
    drift = abs(state.norm() - 1)
    if drift > 1e-10:
        logger.warning(f"⚠️ Norm drifted by {drift:.2e} in {circuit.name}")
    return state


def expected_state(circuit, bits, magic_qubits, **kwargs):
    """Product state with classical ``bits`` and |A> on ``magic_qubits``."""
    return SparseState.product(circuit.qubit_count, bits, magic_qubits, **kwargs)

