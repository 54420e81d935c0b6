"""Exact computations for the contraction q = b x| (u^-)^a of a classical simple Lie algebra."""
from .errors import (BasisMismatch, Inconclusive, IWContractError, MissingCoordinate, NotHomogeneous,
                     NotRegular, RangeViolation, UniverseMismatch, UnknownVariable, UnsupportedFamily,
                     UnsupportedRank, ZeroParameter)
from .liecore import AlgebraSpec, GVector, RootDatum, StructuredBasis, build_algebra, bracket_g, trace_form
from .polyring import Bigrading, SparsePoly
from .contraction import (QDualVector, QVector, coadjoint_apply, family_bracket, index_estimate,
                          kirillov_rank, q_bracket)
from .invariants import InvariantSet, basic_invariants, hat_invariants
from .verify import CheckReport, run_suites

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpec", "GVector", "RootDatum", "StructuredBasis", "build_algebra", "bracket_g", "trace_form",
    "SparsePoly", "Bigrading", "QVector", "QDualVector", "q_bracket", "family_bracket", "coadjoint_apply",
    "kirillov_rank", "index_estimate", "InvariantSet", "basic_invariants", "hat_invariants",
    "CheckReport", "run_suites",
    "IWContractError", "UnsupportedFamily", "UnsupportedRank", "BasisMismatch", "UnknownVariable",
    "MissingCoordinate", "UniverseMismatch", "NotHomogeneous", "ZeroParameter", "NotRegular",
    "RangeViolation", "Inconclusive",
]
