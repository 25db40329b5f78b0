import random

import pytest

from qschubert.classes import CohClass, QCohClass
from qschubert.flagcore import FlagType, coset_elements, flags_of_size, length
from qschubert.polyring import Poly, q, sigma, weighted_degree, x
from qschubert.quantum.matrices import Gq_special
from qschubert.quantum.presentation import (
    _q_exponents_of_weight, ideal_normal_form, ideal_slice, monomials_of_degree,
    presentation_class, presentation_classical_class, same_class,
)
from qschubert.quantum.ring import quantum_giambelli_poly
from qschubert.schubert import g_special, giambelli_poly

F = FlagType.parse
P1 = F("1;2")


def test_p1_normal_forms():
    assert ideal_normal_form(sigma(1, 1) ** 2, P1) == q(1)
    assert ideal_normal_form(sigma(1, 1) ** 2, P1, q_zero=True) == Poly()
    assert same_class(sigma(1, 1) + sigma(1, 2), Poly(), P1)
    assert ideal_normal_form(Poly(), P1) == Poly()


def test_inhomogeneous_input_rejected():
    with pytest.raises(ValueError):
        ideal_normal_form(sigma(1, 1) + q(1), P1)


@pytest.mark.parametrize("text", ["1;3", "1,2;3", "2;4", "1,3;4"])
def test_quotient_has_the_schubert_rank(text):
    flag = F(text)
    for q_zero in (True, False):
        for degree in range(0, flag.dim + 4):
            sl = ideal_slice(flag, degree, q_zero)
            free = len(monomials_of_degree(flag, degree, not q_zero)) - sl.echelon.rank
            if q_zero:
                want = sum(1 for w in coset_elements(flag) if length(w) == degree)
            else:
                want = sum(len(_q_exponents_of_weight(flag, degree - length(w)))
                           for w in coset_elements(flag) if length(w) <= degree)
            assert free == want


@pytest.mark.parametrize("text", ["1,2;3", "2;4"])
def test_normal_form_is_canonical(text):
    flag = F(text)
    rng = random.Random(text)
    gens = [sigma(i, j) for j in range(1, flag.k + 2) for i in range(1, flag.block_size(j) + 1)]
    for w in coset_elements(flag):
        p = quantum_giambelli_poly(w, flag)
        nf = ideal_normal_form(p, flag)
        assert ideal_normal_form(nf, flag) == nf
        # adding a multiple of a relation does not change the normal form
        for i in range(1, flag.n + 1):
            deg = length(w) - i
            if deg < 0:
                continue
            mult = Poly.const(1)
            while deg > 0:
                g = rng.choice([g for g in gens if weighted_degree(g, flag) <= deg])
                mult = mult * g
                deg -= weighted_degree(g, flag)
            assert ideal_normal_form(p + mult * Gq_special(i, flag.k + 1, flag) * 3, flag) == nf


def test_normal_form_rejects_x():
    with pytest.raises(ValueError):
        ideal_normal_form(x(1), P1)


@pytest.mark.parametrize("text", ["1,2;3", "1;4"])
def test_presentation_classes_of_giambelli(text):
    flag = F(text)
    for w in coset_elements(flag):
        assert presentation_class(quantum_giambelli_poly(w, flag), flag) == QCohClass.basis(w, flag)
        assert presentation_classical_class(giambelli_poly(w, flag), flag) == CohClass.basis(w, flag)


@pytest.mark.parametrize("n", [3, 4])
def test_classical_relations_vanish(n):
    for flag in flags_of_size(n):
        for i in range(1, n + 1):
            assert ideal_normal_form(g_special(i, flag.k + 1, flag), flag, q_zero=True).is_zero()
