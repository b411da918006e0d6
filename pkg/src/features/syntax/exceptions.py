class SyntaxModuleError(ValueError):
    pass


class FormulaParseError(SyntaxModuleError):
    def __init__(self, message: str, offset: int, expected: tuple[str, ...]) -> None:
        super().__init__(message)
        self.offset = offset
        self.expected = expected
