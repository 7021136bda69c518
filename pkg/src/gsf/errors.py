"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed user input: descriptors, labels, shapes, CLI arguments."""


class ConstructionError(RuntimeError):
    """A matrix family cannot be built, e.g. a vanishing Plucker denominator."""


class ReductionError(RuntimeError):
    """Boundary elimination is singular for the requested parameter."""


class SamplingError(RuntimeError):
    """Rejection sampling exhausted its trial budget."""


class StructuralError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""
