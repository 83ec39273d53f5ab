"""Exact braid invariants of double branched covers.

Words live in the Artin presentation of the braid group; letters are signed
generator indices. All arithmetic is exact (arbitrary-precision integers and
Laurent polynomials over them), so every value returned here is a theorem
about the input word, not a numerical estimate.
"""

from ._core import (
    BraidDomainError,
    BraidParseError,
    StepLimitExceeded,
    Word,
    alexander,
    alexander_pairs,
    beta,
    bh_fdtc,
    burau,
    burau_at_minus1,
    compare,
    components,
    cycle_type,
    cyclic_rotate,
    dehornoy_floor,
    delta,
    delta_rev,
    destabilize,
    determinant_table,
    exponent_sum,
    fdtc,
    free_reduce,
    full_twist,
    h1_order,
    handle_reduce,
    identity,
    is_positive,
    knot_determinant,
    open_book_pair_report,
    open_book_report,
    page,
    parse,
    stabilize,
)

__all__ = [
    "BraidDomainError",
    "BraidParseError",
    "StepLimitExceeded",
    "Word",
    "alexander",
    "alexander_pairs",
    "beta",
    "bh_fdtc",
    "burau",
    "burau_at_minus1",
    "compare",
    "components",
    "cycle_type",
    "cyclic_rotate",
    "dehornoy_floor",
    "delta",
    "delta_rev",
    "destabilize",
    "determinant_table",
    "exponent_sum",
    "fdtc",
    "free_reduce",
    "full_twist",
    "h1_order",
    "handle_reduce",
    "identity",
    "is_positive",
    "knot_determinant",
    "open_book_pair_report",
    "open_book_report",
    "page",
    "parse",
    "stabilize",
]

__version__ = "0.1.0"
