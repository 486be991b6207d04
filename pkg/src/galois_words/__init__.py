"""Galois words: detection, online factorization, and rotation.

Galois words are the alternating-order analogue of Lyndon words: primitive
words that are strictly smallest among their cyclic rotations when words
are compared through infinite repetition with ascending order at odd
positions and descending order at even ones.  The package provides
linear-time, constant-working-space implementations together with
brute-force oracles, a Duval/Lyndon baseline, and a command-line front end.
"""

from .alt_order import AltOrdering, StrictAltOrdering, Word, alt_compare, alt_compare_strict, as_word
from .errors import (
    EmptyInputError,
    GaloisWordsError,
    InputTooLongError,
    MultipleFactorizationsError,
    NoFactorizationError,
    NotPreGaloisError,
    NotPrimitiveError,
    PreconditionViolatedError,
    UseAfterFinishError,
)
from .galois_core import (
    Factorization,
    GaloisFactorizer,
    GaloisRoots,
    PreGaloisState,
    factorize,
    factorizer_finish,
    factorizer_new,
    factorizer_push,
    galois_roots,
    galois_rotation,
    is_galois,
    is_pre_galois,
    spref,
)
from .lyndon_baseline import LyndonFactorization, duval_factorize, lyndon_rotation

__version__ = "0.1.0"

__all__ = [
    "AltOrdering",
    "EmptyInputError",
    "Factorization",
    "GaloisFactorizer",
    "GaloisRoots",
    "GaloisWordsError",
    "InputTooLongError",
    "LyndonFactorization",
    "MultipleFactorizationsError",
    "NoFactorizationError",
    "NotPreGaloisError",
    "NotPrimitiveError",
    "PreGaloisState",
    "PreconditionViolatedError",
    "StrictAltOrdering",
    "UseAfterFinishError",
    "Word",
    "alt_compare",
    "alt_compare_strict",
    "as_word",
    "duval_factorize",
    "factorize",
    "factorizer_finish",
    "factorizer_new",
    "factorizer_push",
    "galois_roots",
    "galois_rotation",
    "is_galois",
    "is_pre_galois",
    "lyndon_rotation",
    "spref",
]
