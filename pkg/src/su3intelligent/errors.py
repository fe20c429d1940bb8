"""Exception types raised by the library."""


class SingularParameterError(ValueError):
    """Raised when alpha falls inside the guard band around |alpha| = 1."""


class OutOfDomainError(ValueError):
    """Raised when a closed form is requested outside its range of validity."""


class UnnormalizedStateError(ValueError):
    """Raised when a state vector is not unit norm."""


class DegenerateConstructionError(RuntimeError):
    """Raised when the coupling sum produces the zero vector."""


class ConstructionBug(RuntimeError):
    """Raised when the coupled states do not fill an eigenspace of the direct solver."""


class DegenerateSpectrumWarning(UserWarning):
    """Emitted when two eigenvalue clusters sit closer than the clustering can resolve."""
