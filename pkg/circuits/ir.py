"""
Circuit intermediate representation.

Contains:
    - InitState: per-qubit initial tag (Zero, One, MagicA, Input)
    - GateKind: primitive gates plus the AND / uncompute macros
    - Gate: frozen (kind, operands) record
    - Circuit: flat, zero-indexed qubit array with named register views,
      named output views and an explicit freeze
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from utils.errors import CircuitError

QubitId = int


class InitState(Enum):
    ZERO = "zero"
    ONE = "one"
    MAGIC_A = "magic"  # (|0> + e^{i pi/4}|1>) / sqrt(2)
    INPUT = "input"


class GateKind(Enum):
    X = "x"
    CNOT = "cx"
    TOFFOLI = "ccx"
    H = "h"
    S = "s"
    SDG = "sdg"
    T = "t"
    TDG = "tdg"
    LOGICAL_AND = "land"
    UNCOMPUTE_AND = "lunand"

    @property
    def arity(self) -> int:
        if self is GateKind.CNOT:
            return 2
        if self in (GateKind.TOFFOLI, GateKind.LOGICAL_AND, GateKind.UNCOMPUTE_AND):
            return 3
        return 1

    @property
    def is_macro(self) -> bool:
        return self in (GateKind.LOGICAL_AND, GateKind.UNCOMPUTE_AND)

    @property
    def is_t_type(self) -> bool:
        return self in (GateKind.T, GateKind.TDG)

    @property
    def is_boolean(self) -> bool:
        return self in BOOLEAN_KINDS


BOOLEAN_KINDS = frozenset({
    GateKind.X, GateKind.CNOT, GateKind.TOFFOLI,
    GateKind.LOGICAL_AND, GateKind.UNCOMPUTE_AND,
})
PRIMITIVE_KINDS = frozenset({
    GateKind.X, GateKind.CNOT, GateKind.H, GateKind.S,
    GateKind.SDG, GateKind.T, GateKind.TDG,
})


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    operands: tuple[QubitId, ...]

    def __post_init__(self):
        object.__setattr__(self, "operands", tuple(int(q) for q in self.operands))
        if len(self.operands) != self.kind.arity:
            raise CircuitError(
                f"{self.kind.name} takes {self.kind.arity} operands, got {len(self.operands)}"
            )

    @property
    def target(self) -> QubitId:
        return self.operands[-1]

    @property
    def controls(self) -> tuple[QubitId, ...]:
        return self.operands[:-1]

    def __repr__(self):
        return f"{self.kind.name}{self.operands}"


# Constructors used by builders and decompositions
def x(q): return Gate(GateKind.X, (q,))
def h(q): return Gate(GateKind.H, (q,))
def s(q): return Gate(GateKind.S, (q,))
def sdg(q): return Gate(GateKind.SDG, (q,))
def t(q): return Gate(GateKind.T, (q,))
def tdg(q): return Gate(GateKind.TDG, (q,))
def cnot(c, q): return Gate(GateKind.CNOT, (c, q))
def toffoli(c1, c2, q): return Gate(GateKind.TOFFOLI, (c1, c2, q))
def land(c1, c2, q): return Gate(GateKind.LOGICAL_AND, (c1, c2, q))
def lunand(c1, c2, q): return Gate(GateKind.UNCOMPUTE_AND, (c1, c2, q))


@dataclass(frozen=True)
class Diagnostic:
    gate_index: int | None
    rule: str
    message: str
    severity: str = "error"

    def __str__(self):
        where = "circuit" if self.gate_index is None else f"gate {self.gate_index}"
        return f"[{self.severity}] {where}: {self.rule}: {self.message}"


@dataclass
class Circuit:
    qubit_count: int
    init: list[InitState]
    gates: list[Gate] = field(default_factory=list)
    registers: dict[str, tuple[QubitId, ...]] = field(default_factory=dict)
    outputs: dict[str, tuple[QubitId, ...]] = field(default_factory=dict)
    output_roles: dict[str, str] = field(default_factory=dict)
    name: str = "circuit"
    # LogicalANDs whose target prep T is charged without an explicit gate
    prep_attributions: int = 0
    meta: dict = field(default_factory=dict)
    frozen: bool = False

    # ------------------- CONSTRUCTION -------------------
    def _check_mutable(self):
        if self.frozen:
            raise CircuitError("circuit is frozen")

    def _check_range(self, qubits: Iterable[QubitId]):
        for q in qubits:
            if not 0 <= q < self.qubit_count:
                raise CircuitError(f"bad qubit {q} (circuit has {self.qubit_count})")

    def alloc_register(self, name: str, qubits: Sequence[QubitId],
                       init: InitState | Sequence[InitState] = InitState.INPUT):
        self._check_mutable()
        qubits = tuple(int(q) for q in qubits)
        self._check_range(qubits)
        if name in self.registers:
            raise CircuitError(f"register overlap: name {name!r} already allocated")
        if len(set(qubits)) != len(qubits):
            raise CircuitError(f"register overlap: {name!r} lists a qubit twice")
        claimed = self.qubit_owner()
        for q in qubits:
            if q in claimed:
                raise CircuitError(f"register overlap: q[{q}] already in {claimed[q]!r}")
        tags = [init] * len(qubits) if isinstance(init, InitState) else list(init)
        if len(tags) != len(qubits):
            raise CircuitError(f"register {name!r}: {len(qubits)} qubits but {len(tags)} init tags")
        for q, tag in zip(qubits, tags):
            self.init[q] = tag
        self.registers[name] = qubits

    def add_output(self, name: str, qubits: Sequence[QubitId], label: str):
        """Declare a named readout view; views may overlap registers."""
        self._check_mutable()
        qubits = tuple(int(q) for q in qubits)
        self._check_range(qubits)
        self.outputs[name] = qubits
        self.output_roles[name] = label

    def append(self, gate: Gate):
        self._check_mutable()
        self._check_range(gate.operands)
        if len(set(gate.operands)) != len(gate.operands):
            raise CircuitError(f"operand clash in {gate!r}")
        self.gates.append(gate)

    def extend(self, gates: Iterable[Gate]):
        for gate in gates:
            self.append(gate)

    def freeze(self) -> "Circuit":
        self.frozen = True
        return self

    # ------------------- QUERIES -------------------
    def qubit_owner(self) -> dict[QubitId, str]:
        return {q: name for name, qubits in self.registers.items() for q in qubits}

    def register_of(self, name: str) -> tuple[QubitId, ...]:
        if name in self.registers:
            return self.registers[name]
        if name in self.outputs:
            return self.outputs[name]
        raise CircuitError(f"unknown register {name!r}")

    def input_registers(self) -> list[str]:
        return [name for name, qubits in self.registers.items()
                if qubits and all(self.init[q] is InitState.INPUT for q in qubits)]

    def count_kinds(self) -> dict[GateKind, int]:
        counts = {kind: 0 for kind in GateKind}
        for gate in self.gates:
            counts[gate.kind] += 1
        return counts

    def copy_shell(self, gates: Iterable[Gate] = ()) -> "Circuit":
        """Unfrozen copy with the same qubits, registers and outputs but new gates."""
        shell = Circuit(
            qubit_count=self.qubit_count,
            init=list(self.init),
            registers=dict(self.registers),
            outputs=dict(self.outputs),
            output_roles=dict(self.output_roles),
            name=self.name,
            prep_attributions=self.prep_attributions,
            meta=dict(self.meta),
        )
        shell.extend(gates)
        return shell

    def __len__(self):
        return len(self.gates)

    def __repr__(self):
        return f"<Circuit {self.name} qubits={self.qubit_count} gates={len(self.gates)}>"


# ------------------- FUNCTIONAL API -------------------
def new_circuit(qubit_count: int, name: str = "circuit") -> Circuit:
    if qubit_count < 1:
        raise CircuitError("empty circuit")
    return Circuit(qubit_count=qubit_count, init=[InitState.ZERO] * qubit_count, name=name)


def alloc_register(circuit: Circuit, name: str, qubits: Sequence[QubitId],
                   init: InitState | Sequence[InitState] = InitState.INPUT):
    circuit.alloc_register(name, qubits, init)


def append(circuit: Circuit, gate: Gate):
    circuit.append(gate)


def freeze(circuit: Circuit) -> Circuit:
    return circuit.freeze()


def validate(circuit: Circuit) -> list[Diagnostic]:
    """Check every structural invariant; returns an empty list for a sound circuit."""
    diagnostics = []
    n = circuit.qubit_count

    if len(circuit.init) != n:
        diagnostics.append(Diagnostic(None, "init length",
                                      f"{len(circuit.init)} init tags for {n} qubits"))

    seen = {}
    for name, qubits in circuit.registers.items():
        for q in qubits:
            if not 0 <= q < n:
                diagnostics.append(Diagnostic(None, "bad qubit", f"register {name!r} lists q[{q}]"))
            elif q in seen:
                diagnostics.append(Diagnostic(None, "register overlap",
                                              f"q[{q}] in both {seen[q]!r} and {name!r}"))
            else:
                seen[q] = name
    for q in range(n):
        if q not in seen:
            diagnostics.append(Diagnostic(None, "register cover", f"q[{q}] is in no register"))

    for name, qubits in circuit.outputs.items():
        bad = [q for q in qubits if not 0 <= q < n]
        if bad:
            diagnostics.append(Diagnostic(None, "bad qubit", f"output {name!r} lists {bad}"))

    and_targets_checked = set()
    for index, gate in enumerate(circuit.gates):
        ops = gate.operands
        if len(ops) != gate.kind.arity:
            diagnostics.append(Diagnostic(index, "arity", f"{gate!r}"))
        out_of_range = [q for q in ops if not 0 <= q < n]
        if out_of_range:
            diagnostics.append(Diagnostic(index, "bad qubit",
                                          f"{gate!r} uses {out_of_range} of {n}"))
            continue
        if len(set(ops)) != len(ops):
            diagnostics.append(Diagnostic(index, "operand clash", f"{gate!r}"))
        if gate.kind is GateKind.LOGICAL_AND and gate.target not in and_targets_checked:
            and_targets_checked.add(gate.target)
            if circuit.init[gate.target] is not InitState.MAGIC_A:
                diagnostics.append(Diagnostic(
                    index, "and target",
                    f"AND target should be MagicA (q[{gate.target}] is {circuit.init[gate.target].name})",
                    severity="warning",
                ))
    return diagnostics
