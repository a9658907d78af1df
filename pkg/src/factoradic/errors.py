"""Exception types raised by the package.

Everything derives from :class:`FactoradicError`, which is itself a
``ValueError``, so callers may catch either.
"""


class FactoradicError(ValueError):
    """Base class for all domain errors raised by this package."""


class ParseError(FactoradicError):
    """Text could not be parsed as a permutation or integer."""


class PrefixTooShort(FactoradicError):
    """A prefix is too short for the requested operation."""


class InvalidDigit(FactoradicError):
    """A factorial-base digit is out of range (digit at index i must lie in 0..i)."""


class DuplicateEntry(FactoradicError):
    """A permutation prefix contains a repeated entry."""


class NotAPermutation(FactoradicError):
    """A sequence is not a permutation of {0, ..., s-1}."""


class ModulusZero(FactoradicError):
    """The modulus must be a positive integer."""


class ModulusTooSmall(FactoradicError):
    """Divisibility rules require a modulus of at least 2."""


class RangeTooLarge(FactoradicError):
    """A requested size exceeds a guard limit."""
