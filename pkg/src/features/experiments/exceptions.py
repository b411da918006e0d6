class ExperimentError(RuntimeError):
    pass


class DomainError(ExperimentError):
    pass
