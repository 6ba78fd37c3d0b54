class InputError(ValueError):
    """Raised when an argument violates an operation's precondition."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CapabilityError(RuntimeError):
    """Raised when an input exceeds a documented size limit."""

    def __init__(self, message, limit=None):
        super().__init__(message)
        self.limit = limit


class ClaimViolation(RuntimeError):
    """A structural property the colouring scheme relies on does not hold."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
