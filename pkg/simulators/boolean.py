"""
Macro-level boolean engine.

Each qubit is 0, 1 or FRESH (an untouched |A> ancilla). The AND/uncompute
macros map computational x |A> inputs to computational x |A> outputs, so
for the circuits built here this tracks the exact quantum evolution.
"""
from dataclasses import dataclass

from circuits.ir import GateKind, InitState
from utils.errors import (
    DirtyAndTarget,
    FreshOperandError,
    NonBooleanGate,
    NonClassicalReadout,
    SimulationError,
    UncomputeMismatch,
)

FRESH = 2


@dataclass
class BooleanState:
    bits: list

    def read(self, qubits):
        value = 0
        for position, q in enumerate(qubits):
            bit = self.bits[q]
            if bit == FRESH:
                raise NonClassicalReadout(f"non-classical readout: q[{q}] holds |A>")
            value |= bit << position
        return value


def initial_bits(circuit, inputs):
    """Bit vector for the declared tags, with Input registers set from ``inputs``."""
    bits = []
    for tag in circuit.init:
        if tag is InitState.ONE:
            bits.append(1)
        elif tag is InitState.MAGIC_A:
            bits.append(FRESH)
        else:
            bits.append(0)
    for name, value in inputs.items():
        qubits = circuit.registers.get(name)
        if qubits is None:
            raise SimulationError(f"unknown input register {name!r}")
        if not 0 <= value < 2 ** len(qubits):
            raise SimulationError(f"input {name}={value} does not fit in {len(qubits)} bits")
        for position, q in enumerate(qubits):
            bits[q] = (value >> position) & 1
    missing = [name for name in circuit.input_registers() if name not in inputs]
    if missing:
        raise SimulationError(f"missing inputs for registers {missing}")
    return bits


def _classical(bits, index, qubits):
    for q in qubits:
        if bits[q] == FRESH:
            raise FreshOperandError(index, q)


def run_boolean(circuit, inputs) -> BooleanState:
    bits = initial_bits(circuit, inputs)
    for index, gate in enumerate(circuit.gates):
        kind, ops = gate.kind, gate.operands
        if not kind.is_boolean:
            raise NonBooleanGate(index, kind.name)
        if kind is GateKind.X:
            _classical(bits, index, ops)
            bits[ops[0]] ^= 1
        elif kind is GateKind.CNOT:
            _classical(bits, index, ops)
            bits[ops[1]] ^= bits[ops[0]]
        elif kind is GateKind.TOFFOLI:
            _classical(bits, index, ops)
            bits[ops[2]] ^= bits[ops[0]] & bits[ops[1]]
        elif kind is GateKind.LOGICAL_AND:
            _classical(bits, index, ops[:2])
            if bits[ops[2]] != FRESH:
                raise DirtyAndTarget(index)
            bits[ops[2]] = bits[ops[0]] & bits[ops[1]]
        else:
            _classical(bits, index, ops[:2])
            if bits[ops[2]] != bits[ops[0]] & bits[ops[1]]:
                raise UncomputeMismatch(index)
            bits[ops[2]] = FRESH
    return BooleanState(bits)
