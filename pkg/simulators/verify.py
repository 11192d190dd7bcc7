"""
Functional verification of built circuits against classical oracles.

A case passes when every output view reads the oracle's value and every
other qubit (outside garbage registers) is back in its initial state:
inputs unchanged, |0>/|1> constants unchanged, |A> ancillae fresh again.
"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from circuits.lowering import lower
from simulators.boolean import FRESH, BooleanState, initial_bits, run_boolean
from simulators.sparse import equiv_global_phase, expected_state, run_sparse
from utils import config
from utils.errors import LayoutError, NonClassicalReadout, QArithError

logger = logging.getLogger(__name__)

ENGINES = ("boolean", "sparse")
FIDELITY_TOL = 1e-10


def read_register(state, qubits):
    """Integer held by ``qubits`` (LSB first) in a boolean or sparse state."""
    qubits = list(qubits)
    if isinstance(state, BooleanState):
        return state.read(qubits)
    values = set()
    for key in state.amplitudes:
        values.add(sum(((key >> q) & 1) << position for position, q in enumerate(qubits)))
        if len(values) > 1:
            raise NonClassicalReadout(f"non-classical readout on qubits {qubits}")
    if not values:
        raise NonClassicalReadout("non-classical readout: empty state")
    return values.pop()


def readout(circuit, state, name):
    return read_register(state, circuit.register_of(name))


@dataclass(frozen=True)
class CaseFailure:
    inputs: dict
    reason: str

    def to_dict(self):
        return {"inputs": self.inputs, "reason": self.reason}


@dataclass
class VerificationReport:
    design: str
    n: int | None
    engine: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def to_dict(self, limit=20):
        return {
            "design": self.design,
            "n": self.n,
            "engine": self.engine,
            "cases": self.cases,
            "failures": len(self.failures),
            "failed_cases": [failure.to_dict() for failure in self.failures[:limit]],
        }


# ------------------- CASES -------------------
def _random_value(rng, bits):
    value = 0
    for offset in range(0, bits, 32):
        chunk = min(32, bits - offset)
        value |= int(rng.integers(0, 2 ** chunk)) << offset
    return value


def input_cases(circuit, exhaustive=True, samples=None, seed=None, fixed=None):
    """
    Input dicts for every Input register of the circuit.

    Exhaustive enumeration walks registers in declaration order and is
    refused above ``config.exhaustive_bits()`` total input bits; sampling
    draws ``samples`` cases from numpy's default_rng(seed). Cases are
    produced lazily.
    """
    fixed = fixed or {}
    names = [name for name in circuit.input_registers() if name not in fixed]
    widths = [len(circuit.registers[name]) for name in names]
    if exhaustive:
        total, limit = sum(widths), config.exhaustive_bits()
        if total > limit:
            raise LayoutError(f"layout error: exhaustive verification over {total} input bits "
                              f"exceeds the {limit}-bit limit, use --samples and --seed")
        values = itertools.product(*(range(2 ** width) for width in widths))
        return ({**fixed, **dict(zip(names, case))} for case in values)
    if samples is None or seed is None:
        raise ValueError("sampled verification needs both a sample count and a seed")
    rng = np.random.default_rng(seed)
    return ({**fixed, **{name: _random_value(rng, width) for name, width in zip(names, widths)}}
            for _ in range(samples))


# ------------------- EXPECTATIONS -------------------
def _garbage_qubits(circuit):
    checked = {q for qubits in circuit.outputs.values() for q in qubits}
    garbage = set()
    for name in circuit.meta.get("garbage", ()):
        garbage.update(q for q in circuit.registers.get(name, ()) if q not in checked)
    return garbage


def expected_bits(circuit, inputs, outputs):
    """Per-qubit expected final value (0, 1 or FRESH); None for garbage."""
    expected = list(initial_bits(circuit, inputs))
    for name, value in outputs.items():
        for position, q in enumerate(circuit.outputs[name]):
            expected[q] = (value >> position) & 1
    for q in _garbage_qubits(circuit):
        expected[q] = None
    return expected


def _check_boolean(circuit, inputs, outputs):
    state = run_boolean(circuit, inputs)
    for name, value in outputs.items():
        got = readout(circuit, state, name)
        if got != value:
            return f"{name}: expected {value}, got {got}"
    for q, want in enumerate(expected_bits(circuit, inputs, outputs)):
        if want is not None and state.bits[q] != want:
            owner = circuit.qubit_owner().get(q, "?")
            shown = "|A>" if want == FRESH else want
            return f"q[{q}] ({owner}) not restored to {shown}"
    return None


def _check_sparse(circuit, lowered, inputs, outputs):
    state = run_sparse(lowered, inputs)
    for name, value in outputs.items():
        got = readout(circuit, state, name)
        if got != value:
            return f"{name}: expected {value}, got {got}"
    wanted = expected_bits(circuit, inputs, outputs)
    for q, want in enumerate(wanted):
        if want is None:
            wanted[q] = read_register(state, [q])
    magic = [q for q, want in enumerate(wanted) if want == FRESH]
    bits = [0 if want == FRESH else want for want in wanted]
    target = expected_state(circuit, bits, magic, support_cap=state.support_cap)
    if not equiv_global_phase(state, target, FIDELITY_TOL):
        overlap = abs(state.inner(target))
        return f"final state differs from expected product state (overlap {overlap:.12f})"
    return None


def verify_circuit(circuit, oracle, cases, engine="boolean", design=None, n=None, workers=None):
    """
    Run every case through ``engine`` and compare against ``oracle``.

    Args:
        oracle: inputs dict -> {output name: expected integer}
        cases: iterable of inputs dicts
    """
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r} (expected one of {ENGINES})")
    lowered = lower(circuit) if engine == "sparse" else None
    workers = workers or config.verify_workers()

    def check(inputs):
        try:
            outputs = oracle(inputs)
            if engine == "boolean":
                reason = _check_boolean(circuit, inputs, outputs)
            else:
                reason = _check_sparse(circuit, lowered, inputs, outputs)
        except QArithError as e:
            reason = str(e)
        return None if reason is None else CaseFailure(dict(inputs), reason)

    total, failures = 0, []
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(check, cases))
    else:
        results = map(check, cases)
    for failure in results:
        total += 1
        if failure is not None:
            failures.append(failure)

    report = VerificationReport(
        design=design or circuit.meta.get("design", circuit.name),
        n=n if n is not None else circuit.meta.get("n"),
        engine=engine,
        cases=total,
        failures=failures,
    )
    if report.passed:
        logger.info(f"✅ {report.design} n={report.n} [{engine}]: {report.cases}/{report.cases} cases pass")
    else:
        logger.warning(f"❌ {report.design} n={report.n} [{engine}]: "
                       f"{len(report.failures)}/{report.cases} cases failed")
    return report


def adder_oracle(kind, n):
    if kind == "out_of_place":
        return lambda inputs: {"sum": inputs["A"] + inputs["B"]}
    total = lambda inputs: inputs["A"] + inputs["B"]
    return lambda inputs: {"b": total(inputs) % 2 ** n, "carry_out": total(inputs) >> n}


def verify_adder(circuit, n, mode="exhaustive", engine="boolean", samples=None, seed=None):
    """
    Check an adder from the qcla builders.

    ``mode`` is "exhaustive" or "samples" (with ``samples`` and ``seed``).
    """
    layout = circuit.meta["layout"]
    cases = input_cases(circuit, exhaustive=(mode == "exhaustive"), samples=samples, seed=seed)
    return verify_circuit(circuit, adder_oracle(layout.kind, n), cases, engine=engine, n=n)
