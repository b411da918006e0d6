class AlgebraError(ValueError):
    pass


class CarrierMismatchError(AlgebraError):
    pass


class NoSuchElementError(AlgebraError):
    pass


class AlgebraDescriptorError(AlgebraError):
    pass


class ElementParseError(AlgebraError):
    pass


class UnsupportedAlgebraError(AlgebraError):
    pass
