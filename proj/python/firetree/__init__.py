"""Firefighter and fractional-firefighter games on finite and infinite trees.

Thin wrapper over the C++ core. Exact rationals cross the boundary as
"num/den" strings; `frac` converts them to `fractions.Fraction`.
"""

from fractions import Fraction

from ._firetree import (  # noqa: F401
    ConstructionFailure,
    GuardExceeded,
    InvalidInstance,
    LevelTree,
    ParseError,
    RootedTree,
    beta_fractional,
    beta_integral,
    bob_two,
    compare_sequences,
    family,
    fire_recurrence,
    first_move_report,
    level_family,
    losing_instance,
    path,
    perfect_binary,
    pincer,
    random_tree,
    separate,
    sequence_count,
    simulate,
    simulate_prefix,
    spider,
    star,
    targeting,
    worst_ratio,
)

__all__ = [name for name in dir() if not name.startswith("_")]


def frac(value):
    """Parse a "num/den" string (as returned by the core) into a Fraction."""
    num, _, den = str(value).partition("/")
    return Fraction(int(num), int(den) if den else 1)
