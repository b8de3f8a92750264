"""Exception types raised by the library.

Everything derives from :class:`Error` so callers can catch one base class;
the CLI maps any :class:`Error` to exit code 2.
"""


class Error(Exception):
    """Base class for all entsum errors."""


class NotPrime(Error):
    """Cyclic modulus is not an odd prime >= 3."""


class IndexOutOfRange(Error):
    """Index outside the centered range of a cyclic domain."""


class DuplicateIndex(Error):
    """The same index appeared twice in an entry list."""


class NegativeMass(Error):
    """A mass value was negative."""


class NotNormalized(Error):
    """PMF entries do not sum to exactly 1."""


class DomainMismatch(Error):
    """Operands live on different domains."""


class ZeroCoefficient(Error):
    """A linear-form coefficient is zero (or divisible by p on Z/pZ)."""


class StarOnIrregular(Error):
    """Symmetric rearrangement requested for a function whose two
    rearrangements differ."""


class IrregularInput(Error):
    """Operation requires a triangle- or square-regular function."""


class EmptySequence(Error):
    """A nonempty sequence of operands was required."""


class IrregularFactor(Error):
    """Sign assignment saw a factor that is neither triangle- nor
    square-regular."""


class TooManyFactors(Error):
    """Reference extremal enumeration is capped (2^n summands)."""


class InternalShapeViolation(Error):
    """A convolution summand failed its required monotone shape; indicates a
    bug, never bad input."""


class MajorizationFailure(Error):
    """The convolution was not majorized by the extremal distribution;
    indicates a bug, never bad input."""


class HypothesisViolated(Error):
    """A factor does not satisfy the regular-and-in-position hypothesis of the
    weighted-sum entropy bound."""


class NegativeArgument(Error):
    """Argument must be nonnegative."""


class InvalidProbability(Error):
    """Probability parameter outside [0, 1]."""


class EmptySet(Error):
    """A nonempty set was required."""


class TooSmall(Error):
    """Parameter below the smallest supported value."""


class DomainTooLarge(Error):
    """Exhaustive search is only feasible on small cyclic domains."""


class TooManyOutcomes(Error):
    """Brute-force outcome enumeration would exceed its cap."""


class ParseError(Error):
    """Malformed serialized input."""
