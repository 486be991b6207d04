"""Exception types raised by the galois_words package."""


class GaloisWordsError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionViolatedError(GaloisWordsError, ValueError):
    """An operation was called on input that violates its precondition."""


class EmptyInputError(PreconditionViolatedError):
    """The operation requires a non-empty word."""


class NotPrimitiveError(PreconditionViolatedError):
    """The operation requires a primitive word (not a proper power)."""


class NotPreGaloisError(PreconditionViolatedError):
    """The operation requires a pre-Galois word."""


class UseAfterFinishError(GaloisWordsError, RuntimeError):
    """A streaming factorizer was used after finish() completed it."""


class InputTooLongError(GaloisWordsError, ValueError):
    """The input exceeds the size guard of a brute-force oracle."""


class NoFactorizationError(GaloisWordsError, RuntimeError):
    """The exhaustive search found no valid factorization.

    Every word has exactly one Galois factorization, so this signals a bug
    in the oracle itself, never a property of the input.
    """


class MultipleFactorizationsError(GaloisWordsError, RuntimeError):
    """The exhaustive search found more than one valid factorization.

    Like NoFactorizationError, this can only be caused by a bug.
    """
