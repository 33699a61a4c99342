"""Exact toric ideals of ADE singularity configurations.

Modules: ``algebra`` (binomial Groebner bases), ``dynkin`` (configurations),
``toric`` (toric ideals), ``betti`` (fibers and minimal generating sets),
``fan`` (initial ideals), ``paperdata`` (transcribed tables and verification),
``serialize`` and ``cli``.
"""

from .algebra import Binomial, MarkedBasis, TermOrder, buchberger, is_groebner_marked
from .dynkin import Configuration, ade_configuration, closed_form_configuration
from .errors import BoundInsufficient, BudgetExceeded, DimensionError, IncoherentMarking, InvalidInput, ToricError
from .toric import ToricIdeal, ideals_equal, toric_ideal

__version__ = "0.1.0"

__all__ = [
    "Binomial", "MarkedBasis", "TermOrder", "buchberger", "is_groebner_marked",
    "Configuration", "ade_configuration", "closed_form_configuration",
    "BoundInsufficient", "BudgetExceeded", "DimensionError", "IncoherentMarking", "InvalidInput", "ToricError",
    "ToricIdeal", "ideals_equal", "toric_ideal",
]
