"""
whakit: exact verification of weak bialgebras and weak Hopf algebras.

Algebras are finite-dimensional and given by structure constants over Q,
F_p or Q(sqrt d); every identity is checked as an exact matrix equality and
recorded in an AxiomReport.
"""

from .errors import (AmbientCapExceeded, CriterionUnavailable, DoubleConstructionError, FieldError, FormatError,
                     InputError, VerificationError, WhakitError)
from .fields import QQ_FIELD, Field
from .report import AxiomReport, ReportEntry
from .wba import WeakBialgebra, check_wba, check_wba_identities, dualize
from .wha import WeakHopfAlgebra, check_projection_identities, check_wha

__version__ = "0.1.0"

__all__ = [
    "AmbientCapExceeded",
    "AxiomReport",
    "CriterionUnavailable",
    "DoubleConstructionError",
    "Field",
    "FieldError",
    "FormatError",
    "InputError",
    "QQ_FIELD",
    "ReportEntry",
    "VerificationError",
    "WeakBialgebra",
    "WeakHopfAlgebra",
    "WhakitError",
    "check_projection_identities",
    "check_wba",
    "check_wba_identities",
    "check_wha",
    "dualize",
]
