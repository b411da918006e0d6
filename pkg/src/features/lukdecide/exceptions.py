class LukDecideError(RuntimeError):
    pass


class DeltaNotSupportedError(LukDecideError):
    def __init__(self, reason: str = "decide Δ-sequents with the bounded MVn search") -> None:
        super().__init__(f"Δ is not piecewise linear; {reason}")


class ModalFormulaError(LukDecideError):
    pass


class ResourceBudgetExceededError(LukDecideError):
    def __init__(self, budget: str) -> None:
        self.budget = budget
        super().__init__(f"Branch-and-bound {budget} exhausted")


class InfeasibleError(LukDecideError):
    pass


class UnboundedError(LukDecideError):
    pass


class SmtFormatError(LukDecideError):
    pass


class CountervaluationError(LukDecideError):
    pass
