"""
Gate accounting for constructed circuits.

T-count attribution: Toffoli 7, LogicalAND 4 (its 3 in-sequence T gates plus
the prep T of its |A> target), UncomputeAND 3. After lowering the same total
is T/T-dagger primitives plus ``prep_attributions``.
"""
from dataclasses import dataclass, field

from circuits.ir import GateKind
from circuits.lowering import lower
from resources.formulas import DesignId, formula

T_COST = {
    GateKind.TOFFOLI: 7,
    GateKind.LOGICAL_AND: 4,
    GateKind.UNCOMPUTE_AND: 3,
    GateKind.T: 1,
    GateKind.TDG: 1,
}


@dataclass(frozen=True)
class ResourceReport:
    t_count: int
    t_depth: int
    qubit_count: int
    counts: dict = field(default_factory=dict)
    lowered_counts: dict = field(default_factory=dict)
    formula_expected: object = None
    match: bool | None = None

    def to_dict(self, design=None, n=None):
        lowered = self.lowered_counts
        return {
            "design": design,
            "n": n,
            "t_count": self.t_count,
            "t_depth": self.t_depth,
            "cnot": lowered.get("cx", 0),
            "h": lowered.get("h", 0),
            "s": lowered.get("s", 0) + lowered.get("sdg", 0),
            "t_gates": lowered.get("t", 0) + lowered.get("tdg", 0),
            "toffoli": self.counts.get("ccx", 0),
            "land": self.counts.get("land", 0),
            "lunand": self.counts.get("lunand", 0),
            "qubits": self.qubit_count,
            "formula_expected": None if self.formula_expected is None else str(self.formula_expected),
            "match": self.match,
        }


def t_count(circuit):
    return sum(T_COST.get(gate.kind, 0) for gate in circuit.gates) + circuit.prep_attributions


def t_depth(circuit):
    """
    Number of as-soon-as-possible layers holding a T-type gate.

    A gate lands one layer after the latest layer among its operands.
    """
    layer = [0] * circuit.qubit_count
    t_layers = set()
    for gate in circuit.gates:
        depth = max(layer[q] for q in gate.operands) + 1
        for q in gate.operands:
            layer[q] = depth
        if gate.kind.is_t_type:
            t_layers.add(depth)
    return len(t_layers)


def _named_counts(circuit):
    return {kind.value: total for kind, total in circuit.count_kinds().items() if total}


def count(circuit, design=None, n=None):
    """
    ResourceReport for a circuit at macro or primitive level.

    When a table row and width are given the report also carries the row's
    value and whether the circuit meets it.
    """
    lowered = lower(circuit, expand_toffoli=True)
    total = t_count(circuit)
    expected, match = None, None
    if design is not None and n is not None:
        expected = formula(DesignId.parse(design), n)
        match = bool(expected == total)
    return ResourceReport(
        t_count=total,
        t_depth=t_depth(lowered),
        qubit_count=circuit.qubit_count,
        counts=_named_counts(circuit),
        lowered_counts=_named_counts(lowered),
        formula_expected=expected,
        match=match,
    )
