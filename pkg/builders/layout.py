"""
Register bookkeeping shared by every builder.

CircuitBuilder hands out qubits register by register, records gates and
produces a frozen Circuit at the end. Ancillae that are always returned to
their initial state come from a shared pool so consecutive blocks reuse
the same wires.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum

from circuits import ir
from circuits.ir import InitState

logger = logging.getLogger(__name__)


class AdderMode(Enum):
    PROPOSED = "proposed"
    DRAPER = "draper"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown adder mode {value!r} (expected proposed or draper)")

    @property
    def ancilla_init(self):
        # AND targets start as |A>; Toffoli targets start as |0>
        return InitState.MAGIC_A if self is AdderMode.PROPOSED else InitState.ZERO


@dataclass(frozen=True)
class AdderLayout:
    kind: str  # "out_of_place" | "in_place"
    n: int
    mode: AdderMode
    registers: dict = field(default_factory=dict)


class CircuitBuilder:
    def __init__(self, name, mode=AdderMode.PROPOSED):
        self.name = name
        self.mode = AdderMode.parse(mode)
        self._init = []
        self._registers = {}
        self._outputs = {}
        self._gates = []
        self._pools = {}

    # ------------------- QUBITS -------------------
    def register(self, name, width, init=InitState.INPUT):
        if name in self._registers:
            raise ValueError(f"register {name!r} already allocated")
        tags = [init] * width if isinstance(init, InitState) else list(init)
        start = len(self._init)
        self._init.extend(tags)
        self._registers[name] = [start + i for i in range(width)]
        return self._registers[name]

    def pool(self, count, init=None, name="ANC"):
        """
        First ``count`` qubits of the shared ancilla pool ``name``.

        Pool qubits must be back in their initial state when the caller's
        block ends.
        """
        init = init or self.mode.ancilla_init
        qubits = self._pools.setdefault(name, [])
        while len(qubits) < count:
            qubits.append(len(self._init))
            self._init.append(init)
        if qubits:
            self._registers[name] = list(qubits)
        return qubits[:count]

    def zeros(self, name, width):
        return self.register(name, width, InitState.ZERO)

    def output(self, name, qubits, label):
        self._outputs[name] = (list(qubits), label)

    # ------------------- GATES -------------------
    def x(self, q):
        self._gates.append(ir.x(q))

    def cnot(self, c, q):
        self._gates.append(ir.cnot(c, q))

    def toffoli(self, c1, c2, q):
        self._gates.append(ir.toffoli(c1, c2, q))

    def compute_and(self, c1, c2, q):
        """AND into a fresh ancilla; a Toffoli onto |0> in draper mode."""
        if self.mode is AdderMode.PROPOSED:
            self._gates.append(ir.land(c1, c2, q))
        else:
            self._gates.append(ir.toffoli(c1, c2, q))

    def uncompute_and(self, c1, c2, q):
        if self.mode is AdderMode.PROPOSED:
            self._gates.append(ir.lunand(c1, c2, q))
        else:
            self._gates.append(ir.toffoli(c1, c2, q))

    def gate_count(self):
        return len(self._gates)

    # ------------------- FINISH -------------------
    def finish(self, **meta):
        circuit = ir.new_circuit(len(self._init), name=self.name)
        circuit.meta.update(meta)
        for name, qubits in self._registers.items():
            circuit.alloc_register(name, qubits, [self._init[q] for q in qubits])
        for name, (qubits, label) in self._outputs.items():
            circuit.add_output(name, qubits, label)
        circuit.extend(self._gates)
        logger.debug(f"✅ Built {self.name}: {circuit.qubit_count} qubits, {len(circuit)} gates")
        return circuit.freeze()
