"""
Carry-lookahead adders.

The lookahead network works on abstract wires:
    a[i]   operand bit
    b[i]   P_0[i]; holds p_i = a_i xor b_i while the tree runs
    p[t,m] P_t[m], propagate of bits [2^t m, 2^t (m+1)), an ancilla
    g[j]   G[j], generate/carry into bit j (1-based)

A schedule is turned into gates by resolving those wires onto the qubits of
a concrete layout. Proposed mode writes fresh products with LogicalAND and
erases them with UncomputeAND; draper mode uses Toffoli for both.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from builders.layout import AdderLayout, AdderMode, CircuitBuilder
from circuits.ir import InitState
from resources.formulas import floor_log2, weight
from utils.errors import EmptyWidthError, LayoutError

logger = logging.getLogger(__name__)

CARRY_POLICIES = ("ancilla", "external", "none")


class Wire(NamedTuple):
    kind: str
    level: int
    index: int


@dataclass(frozen=True)
class Site:
    controls: tuple
    target: Wire


@dataclass(frozen=True)
class LookaheadSchedule:
    """
    Sites of an n-bit lookahead network.

    ``p_pairs`` are computed in order and uncomputed in reverse order;
    ``g_sites`` and ``c_sites`` XOR products onto carry wires.
    """
    n: int
    initial_g: tuple
    p_pairs: tuple
    g_sites: tuple
    c_sites: tuple

    @property
    def site_total(self):
        return len(self.initial_g) + 2 * len(self.p_pairs) + len(self.g_sites) + len(self.c_sites)

    def p_slots(self):
        return {site.target: slot for slot, site in enumerate(self.p_pairs)}

    def forward_ops(self):
        ops = [("compute", site) for site in self.p_pairs]
        ops += [("toffoli", site) for site in self.g_sites]
        ops += [("toffoli", site) for site in self.c_sites]
        ops += [("uncompute", site) for site in reversed(self.p_pairs)]
        return ops

    def inverse_ops(self):
        swap = {"compute": "uncompute", "uncompute": "compute", "toffoli": "toffoli"}
        return [(swap[op], site) for op, site in reversed(self.forward_ops())]


def _prop(t, m):
    return Wire("b", 0, m) if t == 0 else Wire("p", t, m)


def _gen(j):
    return Wire("g", 0, j)


@lru_cache(maxsize=None)
def _schedule(n):
    log_n = floor_log2(n) if n else 0

    initial_g = tuple(Site((Wire("a", 0, i), Wire("b", 0, i)), _gen(i + 1)) for i in range(n))

    p_sites = tuple(
        Site((_prop(t - 1, 2 * m), _prop(t - 1, 2 * m + 1)), _prop(t, m))
        for t in range(1, log_n)
        for m in range(1, n // 2 ** t)
    )

    g_sites = tuple(
        Site((_gen(2 ** t * m + 2 ** (t - 1)), _prop(t - 1, 2 * m + 1)), _gen(2 ** t * m + 2 ** t))
        for t in range(1, log_n + 1)
        for m in range(n // 2 ** t)
    )

    t_max = 0
    while 3 * 2 ** (t_max + 1) <= 2 * n:
        t_max += 1
    c_sites = tuple(
        Site((_gen(2 ** t * m), _prop(t - 1, 2 * m)), _gen(2 ** t * m + 2 ** (t - 1)))
        for t in range(t_max, 0, -1)
        for m in range(1, (n - 2 ** (t - 1)) // 2 ** t + 1)
    )
    return LookaheadSchedule(n, initial_g, p_sites, g_sites, c_sites)


def lookahead_schedule(n):
    if n < 1:
        raise EmptyWidthError("empty adder")
    return _schedule(n)


def p_tree_size(n):
    """Ancillae needed by the P rounds: n - w(n) - floor(log n)."""
    if n < 1:
        return 0
    return n - weight(n) - floor_log2(n)


# ------------------- WIRE RESOLUTION -------------------
def _resolver(a, b, carries, p_anc, schedule):
    slots = schedule.p_slots()

    def qubit(wire):
        if wire.kind == "a":
            return a[wire.index]
        if wire.kind == "b":
            return b[wire.index]
        if wire.kind == "g":
            return carries[wire.index - 1]
        return p_anc[slots[wire]]

    return qubit


def _apply(builder, ops, qubit):
    for op, site in ops:
        c1, c2 = (qubit(w) for w in site.controls)
        target = qubit(site.target)
        if op == "compute":
            builder.compute_and(c1, c2, target)
        elif op == "uncompute":
            builder.uncompute_and(c1, c2, target)
        else:
            builder.toffoli(c1, c2, target)


def _require_width(n):
    if n < 1:
        raise EmptyWidthError("empty adder")


# ------------------- APPENDERS -------------------
def append_out_of_place(builder: CircuitBuilder, a, b, x, z):
    """
    x <- a + b (n+1 bits); a, b and the P-tree ancillae z are restored.

    x[0] must start |0>, x[1..n] as fresh ancillae of the builder's mode.
    """
    n = len(a)
    _require_width(n)
    if len(b) != n or len(x) != n + 1 or len(z) < p_tree_size(n):
        raise LayoutError(f"layout error: out-of-place widths a={n} b={len(b)} x={len(x)} z={len(z)}")
    schedule = lookahead_schedule(n)
    qubit = _resolver(a, b, x[1:], z, schedule)

    _apply(builder, [("compute", site) for site in schedule.initial_g], qubit)
    for i in range(1, n):
        builder.cnot(a[i], b[i])
    _apply(builder, schedule.forward_ops(), qubit)
    for i in range(1, n):
        builder.cnot(b[i], x[i])
    builder.cnot(b[0], x[0])
    builder.cnot(a[0], x[0])
    for i in range(1, n):
        builder.cnot(a[i], b[i])


def append_in_place(builder: CircuitBuilder, a, b, carries, x, carry="ancilla"):
    """
    b <- a + b with a restored.

    Args:
        carries: G[1..F] as a qubit list; F = n when the carry-out is kept,
            n - 1 for ``carry="none"`` (sum modulo 2^n)
        x: P-tree ancillae, at least p_tree_size(F) of them
        carry: "ancilla" writes s_n into the fresh qubit carries[n-1];
            "external" XORs s_n into a computational qubit (Toffoli);
            "none" drops the carry-out
    """
    n = len(a)
    _require_width(n)
    if carry not in CARRY_POLICIES:
        raise ValueError(f"unknown carry policy {carry!r}")
    forward = n - 1 if carry == "none" else n
    reverse = n - 1
    if len(b) != n or len(carries) != forward or len(x) < p_tree_size(forward):
        raise LayoutError(
            f"layout error: in-place widths a={n} b={len(b)} carries={len(carries)} x={len(x)}"
        )

    # Generates into the carry wires
    for i in range(forward):
        if i == n - 1 and carry == "external":
            builder.toffoli(a[i], b[i], carries[i])
        else:
            builder.compute_and(a[i], b[i], carries[i])
    for i in range(n):
        builder.cnot(a[i], b[i])

    if forward:
        schedule = lookahead_schedule(forward)
        _apply(builder, schedule.forward_ops(), _resolver(a, b, carries, x, schedule))

    # Sum bits: s_i = p_i xor c_i
    for i in range(1, n):
        builder.cnot(carries[i - 1], b[i])

    if reverse < 1:
        return

    # Erase c_1..c_{n-1} by running the (n-1)-bit lookahead backwards on (a, not s)
    for i in range(reverse):
        builder.x(b[i])
    for i in range(1, reverse):
        builder.cnot(a[i], b[i])
    schedule = lookahead_schedule(reverse)
    _apply(builder, schedule.inverse_ops(), _resolver(a, b, carries, x, schedule))
    for i in range(1, reverse):
        builder.cnot(a[i], b[i])
    for i in range(reverse):
        builder.uncompute_and(a[i], b[i], carries[i])
    for i in range(reverse):
        builder.x(b[i])


def append_ctrl_add(builder: CircuitBuilder, ctl, a, acc, modular=False):
    """acc <- acc + ctl * a; acc is n+1 bits (or n when modular)."""
    n = len(a)
    _require_width(n)
    if len(acc) != (n if modular else n + 1):
        raise LayoutError(f"layout error: ctrl-add accumulator width {len(acc)} for n={n}")
    forward = n - 1 if modular else n
    x_width = max(p_tree_size(forward), p_tree_size(n - 1))
    scratch = builder.pool(n + (n - 1) + x_width)
    gated, internal, x = scratch[:n], scratch[n:2 * n - 1], scratch[2 * n - 1:]

    for i in range(n):
        builder.compute_and(ctl, a[i], gated[i])
    if modular:
        append_in_place(builder, gated, acc, internal, x, carry="none")
    else:
        append_in_place(builder, gated, acc[:n], internal + [acc[n]], x, carry="external")
    for i in range(n):
        builder.uncompute_and(ctl, a[i], gated[i])


# ------------------- BUILDERS -------------------
def build_out_of_place(n, mode=AdderMode.PROPOSED):
    _require_width(n)
    mode = AdderMode.parse(mode)
    builder = CircuitBuilder(f"oop-{mode.value}-{n}", mode)
    a = builder.register("A", n, InitState.INPUT)
    b = builder.register("B", n, InitState.INPUT)
    x = builder.register("X", n + 1, [InitState.ZERO] + [mode.ancilla_init] * n)
    z = builder.register("Z", p_tree_size(n), mode.ancilla_init)
    builder.output("sum", x, "sum bits s_0..s_n")

    append_out_of_place(builder, a, b, x, z)

    layout = AdderLayout("out_of_place", n, mode, {"A": a, "B": b, "X": x, "Z": z})
    return builder.finish(design=f"oop-{mode.value}", n=n, layout=layout)


def build_in_place(n, mode=AdderMode.PROPOSED):
    _require_width(n)
    mode = AdderMode.parse(mode)
    builder = CircuitBuilder(f"ip-{mode.value}-{n}", mode)
    a = builder.register("A", n, InitState.INPUT)
    b = builder.register("B", n, InitState.INPUT)
    z = builder.register("Z", n, mode.ancilla_init)
    x = builder.register("X", p_tree_size(n), mode.ancilla_init)
    builder.output("b", b, "sum bits s_0..s_{n-1}")
    builder.output("carry_out", [z[-1]], "sum bit s_n")

    append_in_place(builder, a, b, z, x, carry="ancilla")

    layout = AdderLayout("in_place", n, mode, {"A": a, "B": b, "Z": z, "X": x})
    return builder.finish(design=f"ip-{mode.value}", n=n, layout=layout)


def build_ctrl_add(n, modular=False, mode=AdderMode.PROPOSED):
    _require_width(n)
    builder = CircuitBuilder(f"ctrl-add-{n}", mode)
    ctl = builder.register("CTL", 1, InitState.INPUT)
    a = builder.register("A", n, InitState.INPUT)
    acc = builder.register("ACC", n if modular else n + 1, InitState.INPUT)
    builder.output("acc", acc, "acc + ctl*a" + (" mod 2^n" if modular else ""))

    append_ctrl_add(builder, ctl[0], a, acc, modular=modular)
    return builder.finish(design="ctrl-add", n=n, modular=modular)
