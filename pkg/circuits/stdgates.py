"""
Clifford+T sequences for the macro gates.

Every function returns a GateSeq: a tuple of primitive gates drawn from
{X, CNOT, H, S, Sdg, T, Tdg}. Semantics are checked by simulation in
test_stdgates.py; the orderings below are one conforming choice.
"""
from circuits.ir import GateKind, PRIMITIVE_KINDS, cnot, h, s, sdg, t, tdg

GateSeq = tuple


def prepare_magic_a(q):
    """|0> -> (|0> + e^{i pi/4}|1>) / sqrt(2)."""
    return (h(q), t(q))


def logical_and(x, y, target):
    """
    Temporary logical-AND: |x, y>|A> -> |x, y>|x.y>.

    The target must already hold |A>; the prep T is charged to this gate
    by the resource counter, so the sequence itself has 3 T-type gates.
    """
    return (
        cnot(x, target),
        cnot(y, target),
        cnot(target, x),
        cnot(target, y),
        tdg(x),
        tdg(y),
        t(target),
        cnot(target, x),
        cnot(target, y),
        h(target),
        s(target),
    )


def uncompute_and(x, y, target):
    """Measurement-free inverse of logical_and: |x, y>|x.y> -> |x, y>|A>."""
    return (
        sdg(target),
        h(target),
        cnot(target, x),
        cnot(target, y),
        t(x),
        t(y),
        tdg(target),
        cnot(target, x),
        cnot(target, y),
        cnot(y, target),
        cnot(x, target),
    )


def toffoli_7t(c1, c2, target):
    """Exact CCX with 7 T-type, 6 CNOT and 2 H gates."""
    return (
        h(target),
        cnot(c1, target),
        t(c1),
        tdg(target),
        cnot(c2, target),
        cnot(c2, c1),
        tdg(c1),
        t(target),
        cnot(c2, c1),
        cnot(c1, target),
        tdg(target),
        cnot(c2, target),
        t(target),
        t(c2),
        h(target),
    )


DECOMPOSITIONS = {
    GateKind.LOGICAL_AND: logical_and,
    GateKind.UNCOMPUTE_AND: uncompute_and,
    GateKind.TOFFOLI: toffoli_7t,
}


def t_type_count(seq):
    return sum(1 for gate in seq if gate.kind.is_t_type)


def is_primitive(seq):
    return all(gate.kind in PRIMITIVE_KINDS for gate in seq)
