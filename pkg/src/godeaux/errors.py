"""Exception hierarchy shared by every engine module."""


class EngineError(Exception):
    """Base class for all engine-raised errors."""


class ContextError(EngineError):
    """Operands belong to different ring contexts."""


class GradingError(EngineError):
    """A homogeneity precondition is violated."""


class DivisibilityError(EngineError):
    """An exact-division precondition is violated."""


class TransformError(EngineError):
    """A chart transform precondition is violated."""


class ParseError(EngineError):
    """Malformed polynomial / derivation text."""


class BudgetExceeded(EngineError):
    """A Groebner computation hit its processed-pair budget.

    Carries enough state to diagnose how far the computation got.
    """

    def __init__(self, pairs_processed, basis_size):
        super().__init__(
            f"pair budget exceeded after {pairs_processed} S-pairs "
            f"(basis size {basis_size})"
        )
        self.pairs_processed = pairs_processed
        self.basis_size = basis_size
