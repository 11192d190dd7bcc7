import logging

from circuits.ir import Circuit, GateKind, InitState
from circuits.stdgates import DECOMPOSITIONS, prepare_magic_a

logger = logging.getLogger(__name__)


def lower(circuit: Circuit, expand_toffoli=True, materialize_prep=False) -> Circuit:
    """
    Expand macro gates into their Clifford+T sequences.

    Args:
        circuit: macro-level (or already lowered) circuit
        expand_toffoli: also replace Toffoli by the 7-T network
        materialize_prep: emit [H, T] at circuit start for every MagicA qubit
            that is an AND target and retag it Zero; those preps are then
            counted as gates instead of being attributed

    Returns:
        Circuit: frozen lowered copy; ``prep_attributions`` keeps
        T-count(lowered) == T-count(macro)
    """
    and_targets = []
    for gate in circuit.gates:
        if gate.kind is GateKind.LOGICAL_AND and gate.target not in and_targets:
            and_targets.append(gate.target)

    lowered = circuit.copy_shell()
    attributions = circuit.prep_attributions

    if materialize_prep:
        for q in and_targets:
            if lowered.init[q] is InitState.MAGIC_A:
                lowered.init[q] = InitState.ZERO
                lowered.extend(prepare_magic_a(q))
                attributions -= 1

    for gate in circuit.gates:
        if gate.kind.is_macro or (expand_toffoli and gate.kind is GateKind.TOFFOLI):
            lowered.extend(DECOMPOSITIONS[gate.kind](*gate.operands))
            if gate.kind is GateKind.LOGICAL_AND:
                attributions += 1
        else:
            lowered.append(gate)

    lowered.prep_attributions = attributions
    logger.debug(f"🔄 Lowered {circuit.name}: {len(circuit)} -> {len(lowered)} gates")
    return lowered.freeze()
