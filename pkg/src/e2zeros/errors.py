class VerificationError(ArithmeticError):
    """A numerical check that the theory guarantees has failed."""


class ConvergenceError(ArithmeticError):
    """An iteration ran out of steps before meeting its tolerance."""
