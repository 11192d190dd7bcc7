"""
Bilinear interpolation: golden model and both circuits
"""
import numpy as np
import pytest

from builders import registry
from builders.bilinear import (
    COLOR_NAMES,
    GARBAGE,
    SCALE_DOWN,
    SCALE_UP,
    BilinearParams,
    build_bilinear_scale_down,
    build_bilinear_scale_up,
    golden_bilinear,
    weights,
)
from simulators.boolean import initial_bits, run_boolean
from simulators.verify import input_cases, readout, verify_circuit
from utils import config
from utils.errors import BadFractionError, LayoutError

WORKED_COLORS = (10, 20, 30, 40)


def test_worked_example():
    params = BilinearParams(SCALE_DOWN, 1, 2, 6, WORKED_COLORS, 1, 0)
    assert golden_bilinear(params) == 15


def test_weights_sum_to_full_scale():
    for k in range(1, 5):
        for frac_y in range(2 ** k):
            for frac_x in range(2 ** k):
                assert sum(weights(frac_y, frac_x, k)) == 2 ** (2 * k)


def test_constant_image_is_fixed():
    rng = np.random.default_rng(1000)
    for _ in range(1000):
        mode = SCALE_DOWN if rng.integers(0, 2) else SCALE_UP
        n = int(rng.integers(1, 5))
        m = int(rng.integers(n + 1, n + 5)) if mode == SCALE_DOWN else int(rng.integers(1, 6))
        c = int(rng.integers(1, 9))
        k = n if mode == SCALE_DOWN else m
        color = int(rng.integers(0, 2 ** c))
        params = BilinearParams(mode, n, m, c, (color,) * 4,
                                int(rng.integers(0, 2 ** k)), int(rng.integers(0, 2 ** k)))
        assert golden_bilinear(params) == color


def test_bad_fraction():
    with pytest.raises(BadFractionError, match="bad fraction"):
        BilinearParams(SCALE_DOWN, 1, 2, 6, WORKED_COLORS, 2, 0).validate()


def test_bad_widths():
    with pytest.raises(LayoutError):
        build_bilinear_scale_down(2, 2, 4)
    with pytest.raises(LayoutError):
        build_bilinear_scale_up(1, 1, 0)
    with pytest.raises(LayoutError):
        registry.build("bilinear-down", 1)


def test_scale_down_worked_example():
    circuit = build_bilinear_scale_down(1, 2, 6)
    inputs = {"Y": 1, "X": 0, **dict(zip(COLOR_NAMES, WORKED_COLORS))}
    state = run_boolean(circuit, inputs)
    assert readout(circuit, state, "color") == 15
    assert readout(circuit, state, "y_bar") == 0


def test_scale_down_matches_golden():
    circuit = build_bilinear_scale_down(1, 2, 6)
    rng = np.random.default_rng(8)
    cases = []
    for _ in range(10):
        colors = dict(zip(COLOR_NAMES, (int(c) for c in rng.integers(0, 64, size=4))))
        cases += [{"Y": y, "X": x, **colors} for y in range(4) for x in range(4)]
    oracle = registry.DESIGNS["bilinear-down"].oracle(circuit)
    report = verify_circuit(circuit, oracle, cases)
    assert report.cases == 160
    assert report.passed, report.failures[:3]


@pytest.mark.parametrize("reading", ["slice", "complement"])
def test_scale_up_matches_golden(reading):
    circuit = build_bilinear_scale_up(1, 1, 3, reading=reading)
    assert circuit.meta["reading"] == reading
    oracle = registry.DESIGNS["bilinear-up"].oracle(circuit)
    report = verify_circuit(circuit, oracle, input_cases(circuit, exhaustive=False, samples=40, seed=5))
    assert report.passed, report.failures[:3]


def test_scale_up_coordinates():
    circuit = build_bilinear_scale_up(2, 2, 3)
    inputs = {"Y": 3, "X": 1, **dict(zip(COLOR_NAMES, (1, 2, 3, 4)))}
    state = run_boolean(circuit, inputs)
    assert readout(circuit, state, "y_bar") == 12
    assert readout(circuit, state, "x_bar") == 4


def test_reading_from_environment(monkeypatch):
    monkeypatch.setenv("QARITH_BILINEAR_READING", "complement")
    assert config.bilinear_reading() == "complement"
    assert build_bilinear_scale_up(1, 1, 2).meta["reading"] == "complement"
    monkeypatch.setenv("QARITH_BILINEAR_READING", "diagonal")
    with pytest.raises(ValueError):
        config.bilinear_reading()


# dataflow order: each stage only reads the one before it
STAGES = (("DY", "DX"), ("W00", "W10", "W01", "W11"), ("P00", "P10", "P01", "P11"), ("S1", "S2"), ("S3",))


def _touches(circuit, names):
    qubits = {q for name in names for q in circuit.registers[name]}
    return [index for index, gate in enumerate(circuit.gates) if qubits & set(gate.operands)]


@pytest.mark.parametrize("build", [
    lambda: build_bilinear_scale_down(1, 2, 3),
    lambda: build_bilinear_scale_up(1, 1, 2),
])
def test_garbage_is_labelled(build):
    circuit = build()
    assert tuple(circuit.meta["garbage"]) == GARBAGE
    garbage = {q for name in GARBAGE for q in circuit.registers[name]}
    rng = np.random.default_rng(17)
    for _ in range(8):
        inputs = {name: int(rng.integers(0, 2 ** len(circuit.registers[name])))
                  for name in circuit.input_registers()}
        start = initial_bits(circuit, inputs)
        end = run_boolean(circuit, inputs).bits
        changed = {q for q in range(circuit.qubit_count) if start[q] != end[q]}
        assert changed <= garbage


def test_garbage_is_not_touched_after_use():
    circuit = build_bilinear_scale_down(1, 2, 3)
    for stage, consumer_next in zip(STAGES, STAGES[2:]):
        for name in stage:
            assert max(_touches(circuit, [name])) < min(_touches(circuit, consumer_next)), name
    assert max(_touches(circuit, STAGES[-2])) <= max(_touches(circuit, STAGES[-1]))
