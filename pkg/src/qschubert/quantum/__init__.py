"""Quantum cohomology: deformed matrix, quantum Pieri, products and presentation oracle."""

from .matrices import Gq_special, deformed_matrix
from .pieri import HLCollection, enumerate_hl, qpieri_multiply, quantum_pieri
from .presentation import ideal_normal_form, presentation_class, presentation_product
from .ring import (
    GWQuery, G_lambda_q, class_of_G_lambda, evaluate_poly, expand_in_GLambda, gw_invariant,
    qpairing, quantum_basis_product, quantum_giambelli_poly, quantum_product,
)
from .suites import SUITES, SuiteReport, verify_suite

__all__ = [
    "GWQuery", "G_lambda_q", "Gq_special", "HLCollection", "SUITES", "SuiteReport",
    "class_of_G_lambda", "deformed_matrix", "enumerate_hl", "evaluate_poly", "expand_in_GLambda",
    "gw_invariant", "ideal_normal_form", "presentation_class", "presentation_product",
    "qpairing", "qpieri_multiply", "quantum_basis_product", "quantum_giambelli_poly",
    "quantum_pieri", "quantum_product", "verify_suite",
]
