"""
Cost formulas, savings, resource reports and comparison tables
"""
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from builders.qcla import build_in_place, build_out_of_place
from resources.counting import count, t_depth
from resources.formulas import (
    DesignId,
    floor_log2,
    formula,
    savings,
    weight,
    weight_series,
)
from resources.tables import rows_to_csv, table_rows
from utils.errors import DesignClassError, FormulaDomainError

REPORT_KEYS = {"design", "n", "t_count", "t_depth", "cnot", "h", "s", "t_gates", "toffoli",
               "land", "lunand", "qubits", "formula_expected", "match"}


# ------------------- FORMULAS -------------------
@pytest.mark.parametrize("design,n,value", [
    (DesignId.OOP_PROPOSED, 4, 51),
    (DesignId.OOP_PROPOSED, 8, 137),
    (DesignId.OOP_PROPOSED, 16, 323),
    (DesignId.OOP_PROPOSED, 64, 1495),
    (DesignId.OOP_DRAPER, 4, 70),
    (DesignId.OOP_DRAPER, 8, 189),
    (DesignId.OOP_THAPLIYAL, 4, 126),
    (DesignId.OOP_BABU, 4, 216),
    (DesignId.IP_PROPOSED, 4, 64),
    (DesignId.IP_PROPOSED, 8, 206),
    (DesignId.IP_PROPOSED, 16, 532),
    (DesignId.IP_DRAPER, 4, 105),
    (DesignId.IP_THAPLIYAL, 4, 175),
    (DesignId.IP_CHENG, 4, sympy.Rational(1036, 6)),
])
def test_formula_values(design, n, value):
    assert formula(design, n) == value


def test_formula_domain():
    with pytest.raises(FormulaDomainError, match="formula domain"):
        formula(DesignId.IP_PROPOSED, 1)
    with pytest.raises(FormulaDomainError):
        formula(DesignId.OOP_PROPOSED, 0)


def test_design_id_parse():
    assert DesignId.parse("oop_proposed") is DesignId.OOP_PROPOSED
    assert DesignId.parse("IP_Cheng").table == 2
    with pytest.raises(ValueError):
        DesignId.parse("ripple")


@given(st.integers(min_value=0, max_value=10 ** 6))
def test_weight_series_matches_popcount(k):
    assert weight_series(k) == weight(k)


def test_floor_log2_conventions():
    assert floor_log2(1) == 0
    assert floor_log2(0) == 0
    assert floor_log2(64) == 6
    assert floor_log2(63) == 5


# ------------------- SAVINGS -------------------
@pytest.mark.parametrize("a,b,percent", [
    (DesignId.OOP_PROPOSED, DesignId.OOP_DRAPER, 28.57),
    (DesignId.OOP_PROPOSED, DesignId.OOP_THAPLIYAL, 28.57),
    (DesignId.OOP_PROPOSED, DesignId.OOP_BABU, 53.70),
    (DesignId.IP_PROPOSED, DesignId.IP_DRAPER, 34.29),
    (DesignId.IP_PROPOSED, DesignId.IP_THAPLIYAL, 9.36),
])
def test_asymptotic_savings(a, b, percent):
    assert round(float(savings(a, b)), 2) == percent


def test_savings_against_cubic_design():
    assert savings(DesignId.IP_PROPOSED, DesignId.IP_CHENG) == 100


def test_exact_savings():
    assert savings(DesignId.OOP_PROPOSED, DesignId.OOP_DRAPER, 4) == sympy.Rational(190, 7)


def test_savings_class_mismatch():
    with pytest.raises(DesignClassError):
        savings(DesignId.OOP_PROPOSED, DesignId.IP_DRAPER)


# ------------------- REPORTS -------------------
def test_out_of_place_report():
    report = count(build_out_of_place(4), DesignId.OOP_PROPOSED, 4)
    data = report.to_dict(design="oop-proposed", n=4)
    assert set(data) == REPORT_KEYS
    assert data["t_count"] == 51
    assert data["formula_expected"] == "51"
    assert data["match"] is True
    assert data["qubits"] == 14
    assert (data["land"], data["lunand"], data["toffoli"]) == (5, 1, 4)
    # 5 AND preps are attributed, not emitted
    assert data["t_gates"] == 46
    assert 0 < data["t_depth"] <= data["t_gates"]


def test_in_place_report_does_not_match_printed_row():
    data = count(build_in_place(4), DesignId.IP_PROPOSED, 4).to_dict()
    assert data["t_count"] == 74
    assert data["formula_expected"] == "64"
    assert data["match"] is False


def test_t_depth_of_serial_chain():
    from circuits import ir
    from circuits.ir import InitState, new_circuit

    circuit = new_circuit(2)
    circuit.alloc_register("Q", [0, 1], InitState.ZERO)
    circuit.extend([ir.t(0), ir.t(1), ir.cnot(0, 1), ir.t(1)])
    assert t_depth(circuit.freeze()) == 2


# ------------------- TABLES -------------------
def test_table_one_at_four():
    rows = table_rows(1, [4])
    assert [row["design"] for row in rows] == ["Draper", "Thapliyal", "Babu", "Proposed"]
    assert [row["formula"] for row in rows] == ["70", "126", "216", "51"]
    assert [row["constructed"] for row in rows] == [70, None, None, 51]
    assert [row["match"] for row in rows] == [True, None, None, True]


def test_table_two_at_four():
    rows = table_rows(2, [4])
    assert [row["formula"] for row in rows] == ["105", "175", "518/3", "64"]
    assert rows[0]["match"] is True
    assert rows[3]["constructed"] == 74
    assert rows[3]["match"] is False


def test_table_one_at_sixty_four():
    rows = table_rows(1, [64], constructed=False)
    assert rows[-1]["formula"] == "1495"
    assert rows[-1]["constructed"] is None


def test_tables_are_byte_stable():
    for which in (1, 2):
        first = rows_to_csv(table_rows(which, [4, 8, 16]))
        second = rows_to_csv(table_rows(which, [4, 8, 16]))
        assert first == second
        assert first.count("\n") == 1 + 3 * 4


def test_table_arguments():
    with pytest.raises(ValueError):
        table_rows(3, [4])
    with pytest.raises(ValueError):
        table_rows(1, [])
