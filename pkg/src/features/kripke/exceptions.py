class KripkeError(RuntimeError):
    pass


class UnknownWorldError(KripkeError):
    pass


class InvalidModelError(KripkeError):
    pass


class BudgetExceededError(KripkeError):
    def __init__(self, budget: int) -> None:
        super().__init__(f"Node budget of {budget} exhausted")
        self.budget = budget


class UnsupportedAlgebraError(KripkeError):
    pass


class CertificateError(KripkeError):
    pass
