"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the open domain of the requested function."""


class InvalidIndex(DomainError):
    """Index pair (l, m) violates the admissibility rules."""


class PoleInDenominator(DomainError):
    """The hypergeometric series hits a pole of (c)_j before terminating."""


class NonConvergent(ArithmeticError):
    """Non-terminating series requested outside its convergence region."""


class TermCapExceeded(ArithmeticError):
    """Series failed to reach the target relative tolerance within the term cap."""


class NonPositiveArgument(DomainError):
    """Bessel evaluation requires a strictly positive argument."""


class IntegerOrderUnsupported(DomainError):
    """Only true half-integer Bessel orders are supported."""


class NonPositiveProduct(DomainError):
    """The product of the two radial mass parameters must be real and positive."""


class OffShellError(ValueError):
    """Four-momentum does not satisfy the mass-shell relation."""


class SizeCapExceeded(ValueError):
    """Requested grid exceeds the evaluation size cap."""
