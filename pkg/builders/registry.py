"""
Design catalogue shared by the CLI and the HTTP routes.

Each entry knows how to build its circuit from (n, m, color_width), which
table row it is measured against, and the classical oracle used to verify it.
"""
from dataclasses import dataclass
from typing import Callable, Optional

from builders.arith import build_multiplier, build_subtractor
from builders.bilinear import (
    COLOR_NAMES,
    SCALE_DOWN,
    BilinearParams,
    build_bilinear_scale_down,
    build_bilinear_scale_up,
    golden_bilinear,
)
from builders.qcla import build_ctrl_add, build_in_place, build_out_of_place
from circuits.lowering import lower
from resources.counting import count
from resources.formulas import DesignId
from simulators.boolean import run_boolean
from simulators.sparse import run_sparse
from simulators.verify import adder_oracle, input_cases, readout, verify_circuit
from utils.errors import LayoutError, NonClassicalReadout


@dataclass(frozen=True)
class Design:
    name: str
    build: Callable
    oracle: Callable
    formula_id: Optional[DesignId] = None
    needs_m: bool = False


def _ctrl_add_oracle(circuit):
    n = circuit.meta["n"]
    return lambda inputs: {"acc": (inputs["ACC"] + inputs["CTL"] * inputs["A"]) % 2 ** (n + 1)}


def _bilinear_oracle(circuit):
    meta = circuit.meta
    mode, n, m, c = meta["mode"], meta["n"], meta["m"], meta["color_width"]

    def oracle(inputs):
        colors = [inputs[name] for name in COLOR_NAMES]
        params = BilinearParams.from_coordinates(mode, n, m, c, inputs["Y"], inputs["X"], colors,
                                                 reading=meta.get("reading"))
        if mode == SCALE_DOWN:
            bars = {"y_bar": inputs["Y"] >> n, "x_bar": inputs["X"] >> n}
        else:
            bars = {"y_bar": inputs["Y"] << n, "x_bar": inputs["X"] << n}
        return {"color": golden_bilinear(params), **bars}

    return oracle


DESIGNS = {
    "oop-proposed": Design(
        "oop-proposed",
        lambda n, **_: build_out_of_place(n, "proposed"),
        lambda circuit: adder_oracle("out_of_place", circuit.meta["n"]),
        DesignId.OOP_PROPOSED,
    ),
    "oop-draper": Design(
        "oop-draper",
        lambda n, **_: build_out_of_place(n, "draper"),
        lambda circuit: adder_oracle("out_of_place", circuit.meta["n"]),
        DesignId.OOP_DRAPER,
    ),
    "ip-proposed": Design(
        "ip-proposed",
        lambda n, **_: build_in_place(n, "proposed"),
        lambda circuit: adder_oracle("in_place", circuit.meta["n"]),
        DesignId.IP_PROPOSED,
    ),
    "ip-draper": Design(
        "ip-draper",
        lambda n, **_: build_in_place(n, "draper"),
        lambda circuit: adder_oracle("in_place", circuit.meta["n"]),
        DesignId.IP_DRAPER,
    ),
    "ctrl-add": Design("ctrl-add", lambda n, **_: build_ctrl_add(n), _ctrl_add_oracle),
    "subtractor": Design(
        "subtractor",
        lambda n, **_: build_subtractor(n),
        lambda circuit: (lambda inputs: {
            "difference": (inputs["B"] - inputs["A"]) % 2 ** (circuit.meta["n"] + 1)
        }),
    ),
    "multiplier": Design(
        "multiplier",
        lambda n, **_: build_multiplier(n),
        lambda circuit: (lambda inputs: {"product": inputs["A"] * inputs["B"]}),
    ),
    "bilinear-down": Design(
        "bilinear-down",
        lambda n, m=None, color_width=None, **_: build_bilinear_scale_down(n, m, color_width),
        _bilinear_oracle,
        needs_m=True,
    ),
    "bilinear-up": Design(
        "bilinear-up",
        lambda n, m=None, color_width=None, **_: build_bilinear_scale_up(n, m, color_width),
        _bilinear_oracle,
        needs_m=True,
    ),
}

DESIGN_NAMES = tuple(DESIGNS)

# Builder behind each table row, where one exists
FORMULA_BUILDERS = {design.formula_id: design for design in DESIGNS.values() if design.formula_id}


def get_design(name):
    try:
        return DESIGNS[name]
    except KeyError:
        raise ValueError(f"unknown design {name!r} (choose from {', '.join(DESIGN_NAMES)})")


def build(name, n, m=None, color_width=None):
    design = get_design(name)
    if design.needs_m and (m is None or color_width is None):
        raise LayoutError(f"layout error: {name} needs --m and --color-width")
    return design.build(n, m=m, color_width=color_width)


# ------------------- RUNS -------------------
def verify_design(name, n, m=None, color_width=None, exhaustive=True, samples=None, seed=None,
                  engine="boolean"):
    """Build ``name`` and check it against its oracle; returns a VerificationReport."""
    design = get_design(name)
    circuit = build(name, n, m, color_width)
    if not exhaustive and (samples is None or seed is None):
        raise LayoutError("layout error: sampled verification needs --samples and --seed")
    cases = input_cases(circuit, exhaustive=exhaustive, samples=samples, seed=seed)
    return verify_circuit(circuit, design.oracle(circuit), cases, engine=engine, design=name, n=n)


def simulate_design(name, n, inputs, m=None, color_width=None, engine="boolean"):
    """
    Run one input through ``name`` and read every output view.

    Views that do not hold a single classical value are reported by their
    error message instead of an integer.
    """
    circuit = build(name, n, m, color_width)
    if engine == "boolean":
        state = run_boolean(circuit, inputs)
    elif engine == "sparse":
        state = run_sparse(lower(circuit), inputs)
    else:
        raise ValueError(f"unknown engine {engine!r} (expected boolean or sparse)")
    readouts = {}
    for output in circuit.outputs:
        try:
            readouts[output] = readout(circuit, state, output)
        except NonClassicalReadout as e:
            readouts[output] = str(e)
    result = {"design": name, "n": n, "engine": engine, "readouts": readouts}
    if engine == "sparse":
        result["support_size"] = state.support_size
        result["peak_support"] = state.peak_support
    return result


def resource_report(name, circuit, n):
    """JSON resource report; adders carry their table row value and match flag."""
    design = get_design(name)
    if design.formula_id is not None:
        return count(circuit, design.formula_id, n).to_dict(design=name, n=n)
    return count(circuit).to_dict(design=name, n=n)
