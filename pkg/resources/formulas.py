"""
Closed-form T-count rows for out-of-place and in-place carry-lookahead adders.

Each row is a sympy expression over
    n          adder width
    w, L       w(n) and floor(log2 n)
    w1, L1     w(n-1) and floor(log2 (n-1))
so that evaluation is exact (rationals are never rounded) and the leading
coefficient in n is available for asymptotic comparisons.
"""
from enum import Enum

import sympy

from utils.errors import DesignClassError, FormulaDomainError

n, w, L, w1, L1 = sympy.symbols("n w L w1 L1", integer=True, nonnegative=True)
R = sympy.Rational


class DesignId(Enum):
    OOP_PROPOSED = "OOP_Proposed"
    OOP_DRAPER = "OOP_Draper"
    OOP_THAPLIYAL = "OOP_Thapliyal"
    OOP_BABU = "OOP_Babu"
    IP_PROPOSED = "IP_Proposed"
    IP_DRAPER = "IP_Draper"
    IP_THAPLIYAL = "IP_Thapliyal"
    IP_CHENG = "IP_Cheng"

    @property
    def adder_class(self):
        return "out_of_place" if self.name.startswith("OOP") else "in_place"

    @property
    def table(self):
        return 1 if self.adder_class == "out_of_place" else 2

    @property
    def label(self):
        return self.value.split("_", 1)[1]

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        for design in cls:
            if str(value).lower() in (design.value.lower(), design.name.lower()):
                return design
        raise ValueError(f"unknown design id {value!r}")


FORMULAS = {
    DesignId.OOP_DRAPER: 35 * n - 21 * w - 21 * L - 7,
    DesignId.OOP_THAPLIYAL: 35 * n - 14,
    DesignId.OOP_BABU: 54 * n,
    DesignId.OOP_PROPOSED: 25 * n - 14 * w - 14 * L - 7,
    DesignId.IP_DRAPER: 70 * n - 21 * w - 21 * L - 21 * w1 - 21 * L1 - 49,
    DesignId.IP_THAPLIYAL: R(203, 4) * n - 28,
    DesignId.IP_CHENG: R(14, 6) * n ** 3 + R(21, 6) * n ** 2 - R(49, 6) * n,
    DesignId.IP_PROPOSED: 46 * n - 14 * w - 14 * L - 14 * w1 - 14 * L1 - 36,
}

# Printed forms, as they appear in the comparison tables
FORMULA_TEXT = {
    DesignId.OOP_DRAPER: "35n-21w(n)-21floor(log n)-7",
    DesignId.OOP_THAPLIYAL: "35n-14",
    DesignId.OOP_BABU: "54n",
    DesignId.OOP_PROPOSED: "25n-14w(n)-14floor(log n)-7",
    DesignId.IP_DRAPER: "70n-21w(n)-21floor(log n)-21w(n-1)-21floor(log(n-1))-49",
    DesignId.IP_THAPLIYAL: "(203/4)n-28",
    DesignId.IP_CHENG: "(14/6)n^3+(21/6)n^2-(49/6)n",
    DesignId.IP_PROPOSED: "46n-14w(n)-14floor(log n)-14w(n-1)-14floor(log(n-1))-36",
}


def weight(k):
    """Number of ones in the binary expansion of k; w(0) = 0."""
    if k < 0:
        raise FormulaDomainError(f"formula domain: w({k})")
    return bin(k).count("1")


def weight_series(k):
    """w(k) = k - sum_{y>=1} floor(k / 2^y)."""
    total, power = 0, 2
    while power <= k:
        total += k // power
        power *= 2
    return k - total


def floor_log2(k):
    """floor(log2 k) with the convention floor(log2 1) = 0 and, for n-1 terms, 0 at k = 0."""
    if k < 0:
        raise FormulaDomainError(f"formula domain: log({k})")
    return max(k.bit_length() - 1, 0)


def min_width(design):
    return 2 if DesignId.parse(design).adder_class == "in_place" else 1


def formula(design, width):
    """Exact value of a table row at the given width (a sympy Rational)."""
    design = DesignId.parse(design)
    width = int(width)
    if width < min_width(design):
        raise FormulaDomainError(f"formula domain: {design.value} needs n >= {min_width(design)}, got {width}")
    values = {
        n: width,
        w: weight(width),
        L: floor_log2(width),
        w1: weight(width - 1),
        L1: floor_log2(width - 1),
    }
    return sympy.Rational(FORMULAS[design].subs(values))


def leading_coefficient(design):
    poly = sympy.Poly(FORMULAS[DesignId.parse(design)].subs({w: 0, L: 0, w1: 0, L1: 0}), n)
    return poly.degree(), poly.LC()


def savings(design_a, design_b, width=None):
    """
    Percentage of T gates design_a saves against design_b.

    With ``width=None`` the asymptotic figure is returned: w and floor(log)
    grow slower than n, so only the leading terms in n are compared.
    """
    design_a, design_b = DesignId.parse(design_a), DesignId.parse(design_b)
    if design_a.adder_class != design_b.adder_class:
        raise DesignClassError(
            f"cannot compare {design_a.value} ({design_a.adder_class}) with "
            f"{design_b.value} ({design_b.adder_class})"
        )
    if width is not None:
        return 100 * (1 - formula(design_a, width) / formula(design_b, width))

    degree_a, lc_a = leading_coefficient(design_a)
    degree_b, lc_b = leading_coefficient(design_b)
    if degree_a < degree_b:
        return sympy.Integer(100)
    if degree_a > degree_b:
        return -sympy.oo
    return 100 * (1 - lc_a / lc_b)
