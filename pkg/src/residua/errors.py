"""Exceptions raised by residua."""


class ResidueError(ValueError):
    """Base class for every error raised by this package."""


class ModulusMismatchError(ResidueError):
    """Two residue classes with different moduli were combined."""


class HypothesisError(ResidueError):
    """A theorem's hypothesis does not hold for the given arguments."""


class NotPrimeError(HypothesisError):
    def __init__(self, n: int, factor: int | None = None):
        self.n = n
        self.factor = factor
        msg = f"{n} is not prime"
        if factor is not None:
            msg += f" (divisible by {factor})"
        super().__init__(msg)


class ScheduleError(ResidueError):
    """A reduction schedule for fold_product is malformed."""


class ProofError(ResidueError):
    """A divisibility claim in a proof trace failed exact verification."""
