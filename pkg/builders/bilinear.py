"""
Bilinear interpolation circuits and their classical golden model.

Dataflow (k fractional bits, c colour bits):
    dY = 2^k - Y~, dX = 2^k - X~              constant subtractions
    w00 = dY.dX, w10 = Y~.dX, w01 = dY.X~, w11 = Y~.X~
    p_ij = w_ij . C_ij                         weight x colour products
    S = (p00 + p10) + (p01 + p11)              three out-of-place adders
    colour = S >> 2k                           register truncation

Intermediate registers are left holding garbage; they are labelled as such
and never touched after their last use.
"""
import logging
from dataclasses import dataclass

from builders.arith import append_constant_subtractions, append_multiplier, sum_register
from builders.layout import AdderMode, CircuitBuilder
from builders.qcla import append_out_of_place, p_tree_size
from circuits.ir import InitState
from utils import config
from utils.errors import BadFractionError, LayoutError

logger = logging.getLogger(__name__)

SCALE_DOWN = "scale_down"
SCALE_UP = "scale_up"
COLOR_NAMES = ("C00", "C10", "C01", "C11")


@dataclass(frozen=True)
class BilinearParams:
    """
    Args:
        mode: scale_down or scale_up
        n: scale exponent (fractional bits when scaling down)
        m: bits per coordinate
        color_width: bits per pixel value
        colors: (C[Y,X], C[Y+1,X], C[Y,X+1], C[Y+1,X+1])
        frac_y, frac_x: fractional coordinates Y~, X~
    """
    mode: str
    n: int
    m: int
    color_width: int
    colors: tuple
    frac_y: int
    frac_x: int

    @property
    def k(self):
        return self.n if self.mode == SCALE_DOWN else self.m

    def validate(self):
        if self.mode not in (SCALE_DOWN, SCALE_UP):
            raise LayoutError(f"layout error: unknown mode {self.mode!r}")
        _check_widths(self.mode, self.n, self.m, self.color_width)
        for name, value in (("Y~", self.frac_y), ("X~", self.frac_x)):
            if not 0 <= value < 2 ** self.k:
                raise BadFractionError(f"bad fraction: {name}={value} not in [0, 2^{self.k})")
        if len(self.colors) != 4 or any(not 0 <= c < 2 ** self.color_width for c in self.colors):
            raise LayoutError(f"layout error: colors {self.colors} must be four {self.color_width}-bit values")
        return self

    @classmethod
    def from_coordinates(cls, mode, n, m, color_width, y, x, colors, reading=None):
        """Fractional parts as the circuits read them from m-bit coordinates Y and X."""
        if mode == SCALE_DOWN:
            mask = 2 ** n - 1
            frac_y, frac_x = y & mask, x & mask
        elif (reading or config.bilinear_reading()) == "complement":
            mask = 2 ** m - 1
            frac_y, frac_x = mask ^ y, mask ^ x
        else:
            frac_y, frac_x = y, x
        return cls(mode, n, m, color_width, tuple(colors), frac_y, frac_x).validate()


def weights(frac_y, frac_x, k):
    full = 2 ** k
    return (
        (full - frac_y) * (full - frac_x),
        frac_y * (full - frac_x),
        (full - frac_y) * frac_x,
        frac_y * frac_x,
    )


def golden_bilinear(params: BilinearParams):
    params.validate()
    k = params.k
    total = sum(w * c for w, c in zip(weights(params.frac_y, params.frac_x, k), params.colors))
    return total >> (2 * k)


def _check_widths(mode, n, m, color_width):
    if color_width < 1:
        raise LayoutError(f"layout error: color_width must be >= 1, got {color_width}")
    if mode == SCALE_DOWN and not m > n >= 1:
        raise LayoutError(f"layout error: scaling down needs m > n >= 1, got n={n} m={m}")
    if mode == SCALE_UP and not (m >= 1 and n >= 1):
        raise LayoutError(f"layout error: scaling up needs m >= 1 and n >= 1, got n={n} m={m}")


# ------------------- DATAFLOW -------------------
def _add_padded(builder, name, left, right):
    """Fresh (max+1)-bit register holding left + right; shorter operand zero padded."""
    width = max(len(left), len(right))
    pads = builder.pool(2 * width - len(left) - len(right), InitState.ZERO, name="PADS")
    left_pad, right_pad = pads[:width - len(left)], pads[width - len(left):]
    total = sum_register(builder, name, width)
    append_out_of_place(builder, list(left) + left_pad, list(right) + right_pad, total,
                        builder.pool(p_tree_size(width)))
    return total


def append_bilinear(builder: CircuitBuilder, frac_y, frac_x, colors, k):
    """Appends the interpolation dataflow and returns the colour output qubits."""
    c = len(colors[0])
    d_y = sum_register(builder, "DY", k + 1)
    d_x = sum_register(builder, "DX", k + 1)
    append_constant_subtractions(builder, k, [frac_y, frac_x], [d_y, d_x])
    # 2^k - v <= 2^k, so the top bit of each difference is always 0
    d_y, d_x = d_y[:k + 1], d_x[:k + 1]

    factors = {
        "W00": (d_y, d_x),
        "W10": (frac_y, d_x),
        "W01": (d_y, frac_x),
        "W11": (frac_y, frac_x),
    }
    weight_regs = []
    for name, (left, right) in factors.items():
        register = builder.zeros(name, len(left) + len(right))
        append_multiplier(builder, left, right, register)
        weight_regs.append(register)

    products = []
    for index, (weight, color) in enumerate(zip(weight_regs, colors)):
        register = builder.zeros(f"P{COLOR_NAMES[index][1:]}", len(weight) + c)
        append_multiplier(builder, weight, color, register)
        products.append(register)

    first = _add_padded(builder, "S1", products[0], products[1])
    second = _add_padded(builder, "S2", products[2], products[3])
    total = _add_padded(builder, "S3", first, second)
    return total[2 * k:2 * k + c]


GARBAGE = ("DY", "DX", "W00", "W10", "W01", "W11", "P00", "P10", "P01", "P11", "S1", "S2", "S3")


def _color_registers(builder, color_width):
    return [builder.register(name, color_width) for name in COLOR_NAMES]


def build_bilinear_scale_down(n, m, color_width, mode=AdderMode.PROPOSED):
    """
    Shrink by 2^n: Y~ = Y[0:n], X~ = X[0:n]; the scaled coordinates are the
    high slices Y[n:m], X[n:m] and need no gates.
    """
    _check_widths(SCALE_DOWN, n, m, color_width)
    builder = CircuitBuilder(f"bilinear-down-{n}-{m}-{color_width}", mode)
    y = builder.register("Y", m)
    x = builder.register("X", m)
    colors = _color_registers(builder, color_width)
    builder.output("y_bar", y[n:], "scaled row Y >> n")
    builder.output("x_bar", x[n:], "scaled column X >> n")

    color = append_bilinear(builder, y[:n], x[:n], colors, n)
    builder.output("color", color, "interpolated color")
    logger.debug(f"🔍 bilinear-down n={n} m={m}: {builder.gate_count()} gates")
    return builder.finish(design="bilinear-down", n=n, m=m, color_width=color_width,
                          mode=SCALE_DOWN, garbage=GARBAGE)


def build_bilinear_scale_up(n, m, color_width, mode=AdderMode.PROPOSED, reading=None):
    """
    Enlarge by 2^n: Y~ and X~ are the full m-bit coordinates (bitwise
    complement under the "complement" reading); the scaled coordinates
    Y * 2^n, X * 2^n are n zero wires placed below Y and X.
    """
    _check_widths(SCALE_UP, n, m, color_width)
    reading = reading or config.bilinear_reading()
    builder = CircuitBuilder(f"bilinear-up-{n}-{m}-{color_width}", mode)
    y = builder.register("Y", m)
    x = builder.register("X", m)
    colors = _color_registers(builder, color_width)
    y_low = builder.zeros("YL", n)
    x_low = builder.zeros("XL", n)
    builder.output("y_bar", y_low + y, "scaled row Y << n")
    builder.output("x_bar", x_low + x, "scaled column X << n")

    if reading == "complement":
        for q in y + x:
            builder.x(q)
    color = append_bilinear(builder, y, x, colors, m)
    if reading == "complement":
        for q in y + x:
            builder.x(q)
    builder.output("color", color, "interpolated color")
    return builder.finish(design="bilinear-up", n=n, m=m, color_width=color_width,
                          mode=SCALE_UP, reading=reading, garbage=GARBAGE)
