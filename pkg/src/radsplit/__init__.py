"""Prime decomposition, Newton polygons and common index divisors in Q(a^(1/n))."""

from .cid import CidReport, enumerate_cids, is_cid_closed_deep, is_cid_closed_wild, is_cid_hensel
from .fppoly import FpPoly, factor_fp, irred_count
from .newton import ore_factorize
from .splitting import (Decomposition, PrimeGroup, RadicalInput, SplitCase,
                        check_irreducible, classify, split)

__all__ = [
    "CidReport", "Decomposition", "FpPoly", "PrimeGroup", "RadicalInput", "SplitCase",
    "check_irreducible", "classify", "enumerate_cids", "factor_fp", "irred_count",
    "is_cid_closed_deep", "is_cid_closed_wild", "is_cid_hensel", "ore_factorize", "split",
]
__version__ = "0.1.0"
