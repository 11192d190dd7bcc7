"""
Subtractor, constant subtraction and shift-and-add multiplier
"""
import pytest

from builders import registry
from builders.arith import (
    append_constant_subtractions,
    append_multiplier,
    build_multiplier,
    build_subtractor,
    sum_register,
)
from builders.layout import AdderMode, CircuitBuilder
from resources.counting import count
from simulators.boolean import run_boolean
from simulators.verify import input_cases, read_register, verify_circuit
from utils.errors import EmptyWidthError, LayoutError


@pytest.mark.parametrize("n", [2, 3])
def test_multiplier_exhaustive(n):
    report = registry.verify_design("multiplier", n)
    assert report.cases == 2 ** (2 * n)
    assert report.failures == []


def test_multiplier_unequal_widths():
    circuit = build_multiplier(3, 2)
    assert len(circuit.outputs["product"]) == 5
    report = verify_circuit(circuit, lambda inputs: {"product": inputs["A"] * inputs["B"]},
                            input_cases(circuit))
    assert report.cases == 32
    assert report.passed, report.failures[:3]


def test_multiplier_report_at_six():
    report = count(build_multiplier(6)).to_dict(design="multiplier", n=6)
    assert report["t_count"] > 0
    assert report["toffoli"] >= 6
    assert report["land"] == report["lunand"]
    assert report["match"] is None


def test_multiplier_product_width():
    builder = CircuitBuilder("bad")
    a = builder.register("A", 2)
    b = builder.register("B", 2)
    product = builder.zeros("P", 3)
    with pytest.raises(LayoutError):
        append_multiplier(builder, a, b, product)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_subtractor_exhaustive(n):
    report = registry.verify_design("subtractor", n)
    assert report.cases == 2 ** (2 * n)
    assert report.passed, report.failures[:3]


def test_subtractor_values():
    state = run_boolean(build_subtractor(3), {"A": 5, "B": 2})
    assert state.read(build_subtractor(3).outputs["difference"]) == (2 - 5) % 16


def test_empty_subtractor():
    with pytest.raises(EmptyWidthError):
        build_subtractor(0)


@pytest.mark.parametrize("mode", [AdderMode.PROPOSED, AdderMode.DRAPER])
def test_constant_subtractions(mode):
    builder = CircuitBuilder("two-to-the-k-minus", mode)
    v = builder.register("V", 2)
    u = builder.register("U", 2)
    r1 = sum_register(builder, "R1", 3)
    r2 = sum_register(builder, "R2", 3)
    append_constant_subtractions(builder, 2, [v, u], [r1, r2])
    circuit = builder.finish()

    for v_val in range(4):
        for u_val in range(4):
            state = run_boolean(circuit, {"V": v_val, "U": u_val})
            assert read_register(state, r1) == 4 - v_val
            assert read_register(state, r2) == 4 - u_val
            assert read_register(state, circuit.registers["K"]) == 0
            assert read_register(state, circuit.registers["PAD"]) == 0
            assert state.read(v) == v_val
