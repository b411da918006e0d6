class PcpError(RuntimeError):
    pass


class InvalidInstanceError(PcpError):
    pass


class InvalidSequenceError(PcpError):
    pass


class NotASolutionError(PcpError):
    pass


class PrefixSolutionError(PcpError):
    pass


class AlgebraTooContractiveError(PcpError):
    pass


class CountermodelVerificationError(PcpError):
    pass
