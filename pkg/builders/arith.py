"""
Subtractor and shift-and-add multiplier built from the lookahead adders.
"""
from builders.layout import AdderMode, CircuitBuilder
from builders.qcla import append_ctrl_add, append_out_of_place, p_tree_size
from circuits.ir import InitState
from utils.errors import EmptyWidthError, LayoutError


def _require(n):
    if n < 1:
        raise EmptyWidthError("empty")


def sum_register(builder, name, width):
    """Out-of-place sum register: bit 0 starts |0>, the rest as fresh ancillae."""
    return builder.register(name, width + 1, [InitState.ZERO] + [builder.mode.ancilla_init] * width)


# ------------------- SUBTRACTION -------------------
def append_subtractor(builder: CircuitBuilder, a, b, x):
    """x <- (b - a) mod 2^{n+1}, computed as not(not(b) + a); a and b restored."""
    n = len(a)
    for q in b:
        builder.x(q)
    append_out_of_place(builder, a, b, x, builder.pool(p_tree_size(n)))
    for q in b:
        builder.x(q)
    for q in x[:n]:
        builder.x(q)


def append_constant_subtractions(builder: CircuitBuilder, k, operands, results):
    """
    results[i] <- 2^k - operands[i] for k-bit operands, (k+2)-bit results.

    The constant is folded into X gates on one shared zero register: it
    holds not(2^k) while the adders run and is cleared afterwards.
    """
    constant = builder.zeros("K", k + 1)
    pads = builder.register("PAD", len(operands), InitState.ZERO)
    for q in constant[:k]:
        builder.x(q)
    for operand, pad, result in zip(operands, pads, results):
        if len(operand) != k or len(result) != k + 2:
            raise LayoutError(f"layout error: constant subtraction widths {len(operand)}/{len(result)} for k={k}")
        append_out_of_place(builder, list(operand) + [pad], constant, result,
                            builder.pool(p_tree_size(k + 1)))
        for q in result[:k + 1]:
            builder.x(q)
    for q in constant[:k]:
        builder.x(q)


def build_subtractor(n, mode=AdderMode.PROPOSED):
    _require(n)
    builder = CircuitBuilder(f"subtractor-{n}", mode)
    a = builder.register("A", n)
    b = builder.register("B", n)
    x = sum_register(builder, "X", n)
    builder.output("difference", x, "(b - a) mod 2^(n+1)")
    append_subtractor(builder, a, b, x)
    return builder.finish(design="subtractor", n=n)


# ------------------- MULTIPLICATION -------------------
def append_multiplier(builder: CircuitBuilder, a, b, product):
    """
    product <- a * b by shift and add; ``product`` (len a + len b) starts at 0.

    Row 0 is a Toffoli array; row i >= 1 is a controlled add of a into the
    window product[i : i + len(a) + 1], so no shifting gates are needed.
    """
    na, nb = len(a), len(b)
    if len(product) != na + nb:
        raise LayoutError(f"layout error: product width {len(product)} for {na}x{nb}")
    for j in range(na):
        builder.toffoli(a[j], b[0], product[j])
    for i in range(1, nb):
        append_ctrl_add(builder, b[i], a, product[i:i + na + 1])


def build_multiplier(n, nb=None, mode=AdderMode.PROPOSED):
    """|a>|b>|0> -> |a>|b>|a*b> for an n-bit a and an nb-bit b (default n)."""
    nb = n if nb is None else nb
    _require(n)
    _require(nb)
    builder = CircuitBuilder(f"multiplier-{n}x{nb}", mode)
    a = builder.register("A", n)
    b = builder.register("B", nb)
    product = builder.zeros("P", n + nb)
    builder.output("product", product, "a * b")
    append_multiplier(builder, a, b, product)
    return builder.finish(design="multiplier", n=n)
