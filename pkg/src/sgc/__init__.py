"""Skew generalized cyclic codes over finite fields.

Finite-field arithmetic, Ore polynomial rings F_q[x; sigma, delta], code
construction from generator polynomials, BCH-type bound certifiers and
exhaustive MDS searches.
"""

from .field import FieldCtx, FieldElement, ff_make, ff_make_q
from .ore import OrePoly, OreRing, lclm, ore_left_divmod, ore_mul, ore_right_divmod, ore_ring, rgcd, skew_eval
from .codes import SgcCode, divisor_targets, sgc_from_generator
from .linear import GenMatrix, is_mds, min_distance

__all__ = [
    "FieldCtx", "FieldElement", "ff_make", "ff_make_q",
    "OrePoly", "OreRing", "ore_ring", "ore_mul", "ore_right_divmod", "ore_left_divmod",
    "rgcd", "lclm", "skew_eval",
    "SgcCode", "sgc_from_generator", "divisor_targets",
    "GenMatrix", "is_mds", "min_distance",
]

__version__ = "0.1.0"
