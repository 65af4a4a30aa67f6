"""Exact verification of Hopf monads, their right adjoints and Frobenius structures
over finite-dimensional rational vector spaces, graded spaces and finite sets."""

from .algebras import (DualPairData, FrobeniusData, HopfAlgebraData, check_hopf, frobenius_structure_search,
                       graded_nilpotent_algebra, group_algebra, sweedler_algebra)
from .categories import FINSET, FINVECT, GRVECT, ContractViolation, GradedSpace, probe_objects
from .exact import RationalMatrix
from .monads import induced_module_monad
from .reports import HOLDS, REFUTED, UNDECIDED, LawReport, Verdict

__version__ = "0.1.0"

__all__ = [
    "DualPairData", "FINSET", "FINVECT", "FrobeniusData", "GRVECT", "ContractViolation", "GradedSpace", "HOLDS",
    "HopfAlgebraData", "LawReport", "REFUTED", "RationalMatrix", "UNDECIDED", "Verdict", "check_hopf",
    "frobenius_structure_search", "graded_nilpotent_algebra", "group_algebra", "induced_module_monad",
    "probe_objects", "sweedler_algebra",
]
