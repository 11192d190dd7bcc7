"""Error types raised across the toolkit.

Everything derives from ValueError so the HTTP routes can keep a single
``except ValueError`` branch for client-side mistakes.
"""


class QArithError(ValueError):
    """Base class for every domain error."""


# ------------------- CIRCUIT IR -------------------
class CircuitError(QArithError):
    pass


class EmptyWidthError(QArithError):
    pass


class LayoutError(QArithError):
    pass


# ------------------- FORMULAS -------------------
class FormulaDomainError(QArithError):
    pass


class DesignClassError(QArithError):
    pass


class BadFractionError(QArithError):
    pass


# ------------------- SIMULATION -------------------
class SimulationError(QArithError):
    pass


class UncomputeMismatch(SimulationError):
    def __init__(self, gate_index):
        self.gate_index = gate_index
        super().__init__(f"uncompute mismatch at gate index {gate_index}")


class DirtyAndTarget(SimulationError):
    def __init__(self, gate_index):
        self.gate_index = gate_index
        super().__init__(f"dirty AND target at gate index {gate_index}")


class NonBooleanGate(SimulationError):
    def __init__(self, gate_index, kind):
        self.gate_index = gate_index
        super().__init__(f"non-boolean gate {kind} at gate index {gate_index}")


class FreshOperandError(SimulationError):
    def __init__(self, gate_index, qubit):
        self.gate_index = gate_index
        super().__init__(f"fresh operand q[{qubit}] at gate index {gate_index}")


class MacroInPrimitiveEngine(SimulationError):
    def __init__(self, gate_index, kind):
        self.gate_index = gate_index
        super().__init__(f"macro in primitive engine: {kind} at gate index {gate_index}")


class StateTooLarge(SimulationError):
    pass


class NonClassicalReadout(SimulationError):
    pass


class DimensionMismatch(SimulationError):
    pass


# ------------------- QASM -------------------
class QasmSyntaxError(QArithError):
    def __init__(self, line_no, line):
        self.line_no = line_no
        super().__init__(f"qasm syntax error on line {line_no}: {line.strip()}")
