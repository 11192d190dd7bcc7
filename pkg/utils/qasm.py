"""
OPENQASM 2.0 emitter and parser for circuits.

Only a subset is read and written: one ``qreg q[N]`` and the gates
x, cx, ccx, h, s, sdg, t, tdg. Circuit structure rides in ``//`` directives
that other tools ignore:

    // circuit NAME
    // register NAME 0,1,2
    // init TAG 3,4
    // output NAME "label" 0,1,2
    // attributed land K
    // begin land(0,1,5)  ...lowered body...  // end land
"""
import logging
from enum import Enum

import pyparsing as pp

from circuits.ir import Gate, GateKind, InitState, new_circuit
from circuits.lowering import lower
from circuits.stdgates import DECOMPOSITIONS
from utils.errors import CircuitError, QasmSyntaxError

logger = logging.getLogger(__name__)

HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'


class EmitLevel(Enum):
    MACRO = "macro"
    CLIFFORDT = "cliffordt"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown emit level {value!r} (expected macro or cliffordt)")


# ------------------- GRAMMAR -------------------
class Tokens:
    integer = pp.common.integer
    name = pp.Word(pp.alphas + "_", pp.alphanums + "_-")
    label = pp.dbl_quoted_string().set_parse_action(pp.remove_quotes)
    qubit = pp.Suppress(pp.Literal("q") + "[") + integer + pp.Suppress("]")
    index_list = pp.Group(pp.Optional(pp.DelimitedList(integer)))
    macro = pp.one_of("land lunand", as_keyword=True)
    comment = pp.Suppress("//")


_PRIMITIVE_NAMES = " ".join(kind.value for kind in GateKind if not kind.is_macro)
_T = Tokens

_DIRECTIVES = ("circuit", "register", "init", "output", "attributed", "begin", "end")
_END = pp.StringEnd()


def _directive(keyword, arguments):
    # once the keyword matches, malformed arguments are a hard error
    return _T.comment + pp.Keyword(keyword)("kind") - arguments - _END


LINE = pp.MatchFirst([
    pp.Keyword("OPENQASM")("kind") + pp.Literal("2.0") + pp.Suppress(";"),
    pp.Keyword("include")("kind") + _T.label("file") + pp.Suppress(";"),
    pp.Keyword("qreg")("kind") + pp.Suppress(pp.Literal("q") + "[") + _T.integer("size")
    + pp.Suppress("]") + pp.Suppress(";"),
    pp.one_of(_PRIMITIVE_NAMES, as_keyword=True)("kind")
    + pp.Group(pp.DelimitedList(_T.qubit))("qubits") + pp.Suppress(";"),
    _directive("circuit", _T.name("name")),
    _directive("register", _T.name("name") + _T.index_list("qubits")),
    _directive("init", pp.one_of([tag.value for tag in InitState], as_keyword=True)("tag")
               + _T.index_list("qubits")),
    _directive("output", _T.name("name") + _T.label("label") + _T.index_list("qubits")),
    _directive("attributed", pp.Keyword("land") + _T.integer("count")),
    _directive("begin", _T.macro("macro") + pp.Suppress("(")
               + pp.Group(pp.DelimitedList(_T.integer))("qubits") + pp.Suppress(")")),
    _directive("end", _T.macro("macro")),
    _T.comment + ~pp.one_of(_DIRECTIVES, as_keyword=True) + pp.rest_of_line.suppress()
    + pp.Empty().set_parse_action(pp.replace_with("comment"))("kind"),
])


# ------------------- EMIT -------------------
def _indices(qubits):
    return ",".join(str(q) for q in qubits)


def _gate_line(gate):
    return f"{gate.kind.value} {','.join(f'q[{q}]' for q in gate.operands)};"


def emit(circuit, level=EmitLevel.MACRO):
    """
    QASM text for ``circuit``.

    At macro level LogicalAND / UncomputeAND become commented groups around
    their Clifford+T body and Toffoli stays ``ccx``; at cliffordt level the
    circuit is lowered first, so only primitive gates appear.
    """
    level = EmitLevel.parse(level)
    if level is EmitLevel.CLIFFORDT:
        circuit = lower(circuit)

    lines = [HEADER + f"qreg q[{circuit.qubit_count}];", f"// circuit {circuit.name}"]
    for name, qubits in circuit.registers.items():
        lines.append(f"// register {name} {_indices(qubits)}")
    for tag in InitState:
        qubits = [q for q, init in enumerate(circuit.init) if init is tag]
        if qubits and tag is not InitState.ZERO:
            lines.append(f"// init {tag.value} {_indices(qubits)}")
    for name, qubits in circuit.outputs.items():
        label = circuit.output_roles.get(name, "").replace('"', "'")
        lines.append(f'// output {name} "{label}" {_indices(qubits)}')
    if circuit.prep_attributions:
        lines.append(f"// attributed land {circuit.prep_attributions}")

    for gate in circuit.gates:
        if gate.kind.is_macro:
            lines.append(f"// begin {gate.kind.value}({_indices(gate.operands)})")
            lines.extend(_gate_line(g) for g in DECOMPOSITIONS[gate.kind](*gate.operands))
            lines.append(f"// end {gate.kind.value}")
        else:
            lines.append(_gate_line(gate))
    return "\n".join(lines) + "\n"


# ------------------- PARSE -------------------
def _parse_line(line_no, line):
    try:
        return LINE.parse_string(line, parse_all=True)
    except pp.ParseBaseException:
        raise QasmSyntaxError(line_no, line)


def parse(text):
    """Circuit described by QASM ``text`` (the inverse of ``emit``)."""
    size = None
    name = "circuit"
    registers, outputs, inits = [], [], {}
    attributed = 0
    gates = []  # (line_no, gate)
    block = None  # (line_no, macro gate, body)
    seen_header = False

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = _parse_line(line_no, line)
        kind = tokens["kind"]

        if kind == "OPENQASM":
            seen_header = True
            continue
        if not seen_header:
            raise QasmSyntaxError(line_no, line)

        if kind == "include" or kind == "comment":
            continue
        elif kind == "qreg":
            if size is not None:
                raise QasmSyntaxError(line_no, line)
            size = tokens["size"]
        elif kind == "circuit":
            name = tokens["name"]
        elif kind == "register":
            registers.append((tokens["name"], list(tokens["qubits"])))
        elif kind == "init":
            for q in tokens["qubits"]:
                inits[q] = InitState(tokens["tag"])
        elif kind == "output":
            outputs.append((tokens["name"], tokens["label"], list(tokens["qubits"])))
        elif kind == "attributed":
            attributed = tokens["count"]
        elif kind == "begin":
            if block is not None:
                raise QasmSyntaxError(line_no, line)
            macro = GateKind(tokens["macro"])
            block = (line_no, _make_gate(line_no, line, macro, tokens["qubits"]), [])
        elif kind == "end":
            if block is None or block[1].kind.value != tokens["macro"]:
                raise QasmSyntaxError(line_no, line)
            _, macro_gate, body = block
            if tuple(body) != DECOMPOSITIONS[macro_gate.kind](*macro_gate.operands):
                raise QasmSyntaxError(line_no, f"{line} (body does not match {macro_gate!r})")
            gates.append((block[0], macro_gate))
            block = None
        else:
            if size is None:
                raise QasmSyntaxError(line_no, line)
            gate = _make_gate(line_no, line, GateKind(kind), tokens["qubits"])
            if block is not None:
                block[2].append(gate)
            else:
                gates.append((line_no, gate))

    if block is not None:
        raise QasmSyntaxError(block[0], "unterminated macro block")
    if size is None:
        raise QasmSyntaxError(0, "missing qreg declaration")
    return _assemble(size, name, registers, inits, outputs, attributed, gates)


def _make_gate(line_no, line, kind, qubits):
    try:
        return Gate(kind, tuple(qubits))
    except CircuitError:
        raise QasmSyntaxError(line_no, line)


def _assemble(size, name, registers, inits, outputs, attributed, gates):
    circuit = new_circuit(size, name=name)
    for q, tag in inits.items():
        if not 0 <= q < size:
            raise CircuitError(f"bad qubit {q} (circuit has {size})")
        circuit.init[q] = tag
    for register_name, qubits in registers:
        circuit.alloc_register(register_name, qubits, [circuit.init[q] for q in qubits])
    for output_name, label, qubits in outputs:
        circuit.add_output(output_name, qubits, label)
    circuit.prep_attributions = attributed
    for line_no, gate in gates:
        try:
            circuit.append(gate)
        except CircuitError as e:
            raise QasmSyntaxError(line_no, f"{gate!r} ({e})")
    logger.debug(f"🔍 Parsed {name}: {size} qubits, {len(circuit)} gates")
    return circuit.freeze()
