"""Exact solving and counting of bounded integer programs via lattice enumeration.

The heavy lifting lives in the C++ extension; this package re-exports the
operations and adds small conveniences on top of the string-based exact
rationals.
"""

from fractions import Fraction

from ._core import (
    count_bip,
    count_bkp,
    dio_check_lemma,
    gen_bkp,
    optimize_bip,
    oracle_count,
    oracle_solve,
    run_acceptance_criterion,
    solve_bip,
    solve_bkp,
    shortest_length_profile as _shortest_length_profile_raw,
)

__all__ = [
    "count_bip",
    "count_bkp",
    "dio_check_lemma",
    "gen_bkp",
    "optimize_bip",
    "oracle_count",
    "oracle_solve",
    "run_acceptance_criterion",
    "solve_bip",
    "solve_bkp",
    "shortest_length_profile",
]


def shortest_length_profile(a, b, u, safety=1):
    """Shortest-vector norms (linf, l1) as Fractions, or None when infeasible."""
    linf, l1 = _shortest_length_profile_raw(a, b, u, safety)
    conv = lambda s: None if s is None else Fraction(s)
    return conv(linf), conv(l1)
