"""
Circuit IR: construction errors, validation and lowering
"""
import pytest

from builders.qcla import build_in_place, build_out_of_place
from circuits import ir
from circuits.ir import Gate, GateKind, InitState, new_circuit, validate
from circuits.lowering import lower
from resources.counting import t_count
from utils.errors import CircuitError


def _small():
    circuit = new_circuit(3, name="small")
    circuit.alloc_register("X", [0])
    circuit.alloc_register("Y", [1])
    circuit.alloc_register("T", [2], InitState.MAGIC_A)
    return circuit


def test_empty_circuit():
    with pytest.raises(CircuitError, match="empty circuit"):
        new_circuit(0)


def test_register_overlap():
    circuit = _small()
    with pytest.raises(CircuitError, match="register overlap"):
        circuit.alloc_register("Z", [2])


def test_bad_qubit():
    circuit = _small()
    with pytest.raises(CircuitError, match="bad qubit"):
        circuit.append(ir.x(3))


def test_operand_clash():
    circuit = _small()
    with pytest.raises(CircuitError, match="operand clash"):
        circuit.append(ir.cnot(1, 1))


def test_gate_arity_checked():
    with pytest.raises(CircuitError):
        Gate(GateKind.CNOT, (0,))
    assert ir.toffoli(0, 1, 2).controls == (0, 1)
    assert ir.toffoli(0, 1, 2).target == 2


def test_frozen_circuit_rejects_gates():
    circuit = _small().freeze()
    with pytest.raises(CircuitError, match="frozen"):
        circuit.append(ir.x(0))


def test_functional_api_matches_methods():
    circuit = new_circuit(2)
    ir.alloc_register(circuit, "A", [0, 1])
    ir.append(circuit, ir.cnot(0, 1))
    assert ir.freeze(circuit).frozen
    assert circuit.input_registers() == ["A"]
    assert circuit.count_kinds()[GateKind.CNOT] == 1


def test_validate_sound_circuit():
    circuit = _small()
    circuit.append(ir.land(0, 1, 2))
    circuit.append(ir.lunand(0, 1, 2))
    assert validate(circuit) == []


def test_validate_reports_uncovered_qubit_and_and_target():
    circuit = new_circuit(3)
    circuit.alloc_register("X", [0, 1])
    circuit.append(ir.land(0, 1, 2))
    rules = {d.rule: d for d in validate(circuit)}
    assert "register cover" in rules
    assert rules["and target"].severity == "warning"
    assert rules["and target"].gate_index == 0


@pytest.mark.parametrize("build", [build_out_of_place, build_in_place])
@pytest.mark.parametrize("mode", ["proposed", "draper"])
def test_built_adders_validate(build, mode):
    assert validate(build(4, mode)) == []


def test_lowering_keeps_t_count():
    circuit = build_out_of_place(4)
    lowered = lower(circuit)
    assert all(not gate.kind.is_macro and gate.kind is not GateKind.TOFFOLI for gate in lowered.gates)
    assert lowered.prep_attributions == 5
    assert t_count(lowered) == t_count(circuit) == 51
    assert lowered.frozen


def test_lowering_can_keep_toffoli():
    lowered = lower(build_out_of_place(4), expand_toffoli=False)
    assert lowered.count_kinds()[GateKind.TOFFOLI] == 4
    assert lowered.count_kinds()[GateKind.LOGICAL_AND] == 0


def test_materialized_prep_replaces_attribution():
    circuit = build_out_of_place(4)
    lowered = lower(circuit, materialize_prep=True)
    assert lowered.prep_attributions == 0
    assert t_count(lowered) == 51
    # one [H, T] per distinct AND target, all at the front
    assert [g.kind for g in lowered.gates[:10]] == [GateKind.H, GateKind.T] * 5
    for gate in lowered.gates[:10]:
        assert lowered.init[gate.target] is InitState.ZERO
