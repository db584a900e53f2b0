"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid input data or configuration (bad file, bad parameters, violated precondition)."""


class NumericalError(RuntimeError):
    """A numerical computation failed (overflow, non-finite intermediate, impossible fit)."""
