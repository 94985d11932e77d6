"""Named error conditions raised across the package."""


class PadicError(Exception):
    """Base class for all package errors."""


class NonUnit(PadicError):
    """An operation required a p-adic unit."""


class OutOfDomain(PadicError):
    """Argument lies outside the domain of convergence."""


class IntegralityViolation(PadicError):
    """A result that must be integral had a p in its denominator."""


class NotInImage(PadicError):
    """Series is not in the image of Frobenius up to truncation."""


class NonUnitConstantTerm(PadicError):
    """Series inversion needs a unit constant term."""


class NotPsiZero(PadicError):
    """The inverse of D is only defined on the kernel of psi."""


class TruncationTooShort(PadicError):
    """The series is too short for the requested level."""


class NegativePowerOnZp(PadicError):
    """Negative moments only make sense on the units."""


class LevelMismatch(PadicError):
    """Measures at different levels or primes were combined."""


class LevelTooSmall(PadicError):
    """The requested level cannot support the operation."""


class MassNotZero(PadicError):
    """Division by a delta difference needs total mass zero."""


class BadRegularizer(PadicError):
    """The regularizer does not generate the units mod p^2."""


class DegenerateExponent(PadicError):
    """The interpolation denominator vanishes."""


class PoleAtOne(PadicError):
    """The p-adic L-function has a pole at this point."""


class RegularizerPole(PadicError):
    """The regularizing factor vanishes at this argument."""


class ParseError(PadicError):
    """Malformed JSON input."""

    def __init__(self, message: str, position: str | None = None):
        super().__init__(f"{message} at {position}" if position else message)
        self.position = position
