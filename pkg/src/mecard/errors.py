class BudgetExceeded(RuntimeError):
    """An enumeration would exceed the configured size cap."""


class GroupAxiomError(ValueError):
    """A multiplication table violates a group axiom; ``witness`` names the failing elements."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
