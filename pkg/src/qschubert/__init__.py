"""Classical and small quantum Schubert calculus on partial flag varieties."""

__version__ = "0.1.0"

from .classes import CohClass, QCohClass
from .classical import basis_product, classical_product, dual, pairing
from .flagcore import FlagError, FlagType, coset_elements, in_S, length
from .polyring import Poly
from .quantum import (
    GWQuery, Gq_special, deformed_matrix, enumerate_hl, expand_in_GLambda, gw_invariant,
    ideal_normal_form, qpairing, quantum_giambelli_poly, quantum_pieri, quantum_product,
    verify_suite,
)
from .schubert import a_lambda_table, giambelli_poly, schubert_poly

__all__ = [
    "CohClass", "FlagError", "FlagType", "GWQuery", "Gq_special", "Poly", "QCohClass",
    "a_lambda_table", "basis_product", "classical_product", "coset_elements", "deformed_matrix",
    "dual", "enumerate_hl", "expand_in_GLambda", "giambelli_poly", "gw_invariant",
    "ideal_normal_form", "in_S", "length", "pairing", "qpairing", "quantum_giambelli_poly",
    "quantum_pieri", "quantum_product", "schubert_poly", "verify_suite",
]
