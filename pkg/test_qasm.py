"""
QASM emit / parse
"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from builders import registry
from builders.qcla import build_in_place, build_out_of_place
from circuits.ir import Gate, GateKind, InitState, new_circuit
from resources.counting import count
from utils.errors import QasmSyntaxError
from utils.qasm import EmitLevel, emit, parse

PRIMITIVE_NAMES = {"x", "cx", "ccx", "h", "s", "sdg", "t", "tdg"}


def _assert_same(parsed, circuit):
    assert parsed.gates == circuit.gates
    assert parsed.qubit_count == circuit.qubit_count
    assert parsed.init == circuit.init
    assert parsed.registers == circuit.registers
    assert parsed.outputs == circuit.outputs
    assert parsed.output_roles == circuit.output_roles
    assert parsed.prep_attributions == circuit.prep_attributions
    assert parsed.name == circuit.name


def test_header():
    lines = emit(build_out_of_place(4)).splitlines()
    assert lines[:3] == ['OPENQASM 2.0;', 'include "qelib1.inc";', 'qreg q[14];']


@pytest.mark.parametrize("design,n,extra", [
    ("oop-proposed", 4, {}),
    ("ip-proposed", 3, {}),
    ("ip-draper", 3, {}),
    ("ctrl-add", 2, {}),
    ("multiplier", 2, {}),
    ("bilinear-down", 1, {"m": 2, "color_width": 2}),
])
def test_macro_round_trip(design, n, extra):
    circuit = registry.build(design, n, **extra)
    _assert_same(parse(emit(circuit, EmitLevel.MACRO)), circuit)


def test_macro_level_keeps_macro_groups():
    text = emit(build_out_of_place(2))
    assert "// begin land(0,2,5)" in text
    assert "// end land" in text
    assert "ccx q[" in text


def test_cliffordt_level_is_primitive():
    circuit = build_in_place(4)
    text = emit(circuit, "cliffordt")
    gate_names = [line.split(" ")[0] for line in text.splitlines()[3:] if not line.startswith("//")]
    assert set(gate_names) <= PRIMITIVE_NAMES - {"ccx"}
    t_lines = sum(1 for name in gate_names if name in ("t", "tdg"))
    attributed = int(text.split("// attributed land ")[1].split("\n")[0])
    assert t_lines + attributed == count(circuit).t_count == 74


def test_cliffordt_round_trip_keeps_t_count():
    circuit = build_out_of_place(3)
    parsed = parse(emit(circuit, EmitLevel.CLIFFORDT))
    assert count(parsed).t_count == count(circuit).t_count


def test_unknown_gate():
    with pytest.raises(QasmSyntaxError) as e:
        parse('OPENQASM 2.0;\nqreg q[2];\nfoo q[0];\n')
    assert e.value.line_no == 3
    assert "line 3" in str(e.value)


def test_gate_before_qreg():
    with pytest.raises(QasmSyntaxError):
        parse('OPENQASM 2.0;\nx q[0];\nqreg q[1];\n')


def test_missing_header():
    with pytest.raises(QasmSyntaxError):
        parse('qreg q[1];\nx q[0];\n')


def test_wrong_arity():
    with pytest.raises(QasmSyntaxError):
        parse('OPENQASM 2.0;\nqreg q[2];\ncx q[0];\n')


def test_tampered_macro_body():
    text = emit(build_out_of_place(1))
    lines = text.splitlines()
    begin = next(i for i, line in enumerate(lines) if line.startswith("// begin land"))
    lines[begin + 1] = "h q[0];"
    with pytest.raises(QasmSyntaxError, match="body does not match"):
        parse("\n".join(lines))


def test_unterminated_macro():
    text = emit(build_out_of_place(1))
    cut = text.split("// end land")[0]
    with pytest.raises(QasmSyntaxError):
        parse(cut)


@pytest.mark.parametrize("directive", [
    "// register Z x,y",
    "// register Z 0,1 extra",
    "// init sideways 0",
    "// output sum 0,1",
    "// attributed land many",
    "// circuit",
])
def test_malformed_directive_is_an_error(directive):
    text = 'OPENQASM 2.0;\ninclude "qelib1.inc";\nqreg q[2];\n' + directive + "\ncx q[0],q[1];\n"
    with pytest.raises(QasmSyntaxError) as e:
        parse(text)
    assert e.value.line_no == 4


def test_plain_comments_are_ignored():
    text = 'OPENQASM 2.0;\ninclude "qelib1.inc";\nqreg q[2];\n// registers below\ncx q[0],q[1];\n'
    circuit = parse(text)
    assert circuit.gates == [Gate(GateKind.CNOT, (0, 1))]


@st.composite
def small_circuits(draw):
    size = 4
    tags = draw(st.lists(st.sampled_from(list(InitState)), min_size=size, max_size=size))
    circuit = new_circuit(size, name="generated")
    circuit.alloc_register("Q", range(size), tags)
    kinds = draw(st.lists(st.sampled_from(list(GateKind)), max_size=25))
    for kind in kinds:
        qubits = draw(st.permutations(range(size)))[:kind.arity]
        circuit.append(Gate(kind, tuple(qubits)))
    circuit.prep_attributions = draw(st.integers(min_value=0, max_value=5))
    return circuit.freeze()


@settings(max_examples=50, deadline=None)
@given(small_circuits())
def test_round_trip_generated(circuit):
    _assert_same(parse(emit(circuit)), circuit)
