"""Exact derangement, rencontres, Stirling and Bell numbers, with
identity checks and a brute-force symmetric-group oracle."""

from .characters import (
    PERMUTATION,
    STANDARD,
    TRIVIAL,
    FixedPointCharacter,
    bell_moment,
    check_character_norm,
    inner_product,
    irreducibility_of_standard,
)
from .core import (
    DEFAULT_ENGINE,
    Engine,
    IntPoly,
    RencontresRow,
    bell,
    binomial,
    derangement,
    factorial,
    falling_factorial,
    poly_eval,
    rencontres_closed,
    rencontres_recursive,
    stirling2,
)
from .identities import (
    DEFAULT_POLY_POOL,
    check_binomial_transform,
    check_easy,
    check_lemma2,
    check_recursion,
    check_stirling_expansion,
    check_theorem1,
    check_theorem2,
    explore_theorem2,
    factorial_moment,
    sweep,
)
from .reports import PreconditionError, SweepSummary, VerificationReport

__version__ = "0.1.0"
