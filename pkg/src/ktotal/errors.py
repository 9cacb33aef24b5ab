"""
ktotal Errors
=============

Exception hierarchy shared by the library, the CLI and the MCP tools.
"""

from typing import Optional


class KTotalError(Exception):
    """Base class for all ktotal errors."""


class SequenceError(KTotalError):
    """Invalid operation on a finite sequence."""


class LassoError(KTotalError):
    """Invalid lasso or lasso operation."""


class GameError(KTotalError):
    """Invalid game, strategy or walk."""


class NonIntegralRewardsError(GameError):
    """Raised when a solver that needs integer rewards receives rational ones."""

    def __init__(self, denominator: int):
        self.denominator = denominator
        self.message = (
            "Integer arc rewards are required to certify the discount threshold "
            f"(common denominator is {denominator}); rescale the rewards or pass --scale"
        )
        super().__init__(self.message)


class BudgetExceededError(KTotalError):
    """Raised when enumeration would visit more strategy pairs than allowed."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        self.message = (
            f"Enumeration needs {required} strategy combinations, "
            f"budget is {budget}; refusing to sample"
        )
        super().__init__(self.message)


class SolverError(KTotalError):
    """Internal solver invariant failed."""


class GameFileError(KTotalError):
    """Parse error in a game or strategy file."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        self.message = f"line {line}: {message}" if line is not None else message
        super().__init__(self.message)
