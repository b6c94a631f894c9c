"""Mayr-Meyer ideals over finite fields: Groebner bases, ideal operations,
a catalog of the associated primes and a verifier for the published identities."""
from __future__ import annotations

from .catalog import (MMParams, ParameterError, candidate_embedded_set, k_family_ideal, mayr_meyer_ideal,
                      minimal_components, minimal_primes)
from .field import Field, UnsupportedFieldError, enumerate_roots_of_unity, primitive_root_of_unity
from .groebner import BudgetExceeded, GroebnerBasis, buchberger, normal_form
from .ideal import (Ideal, colon, dimension, eliminate, equals, height, intersect, is_member,
                    radical_member, saturate)
from .order import MonomialOrder, compare
from .poly import ParseError, Polynomial, RingMismatchError, VarTable, parse_poly, print_poly
from .verifier import CheckReport, Fault, run_all, run_check

__all__ = [
    "BudgetExceeded", "CheckReport", "Fault", "Field", "GroebnerBasis", "Ideal", "MMParams", "MonomialOrder", "ParameterError", "ParseError",
    "Polynomial", "RingMismatchError", "UnsupportedFieldError", "VarTable", "buchberger",
    "candidate_embedded_set", "colon", "compare", "dimension", "eliminate", "enumerate_roots_of_unity", "equals",
    "height", "intersect", "is_member", "k_family_ideal", "mayr_meyer_ideal",
    "minimal_components", "minimal_primes", "normal_form", "parse_poly", "primitive_root_of_unity",
    "print_poly", "radical_member", "run_all", "run_check", "saturate",
]
