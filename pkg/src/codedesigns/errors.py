class VerificationError(RuntimeError):
    """A computed object contradicts a claim being verified.

    ``witness`` carries the minimal counterexample (message vector, zero set,
    offending points, ...) so the failure can be reproduced.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} codewords, budget is {budget}")
        self.required = required
        self.budget = budget
