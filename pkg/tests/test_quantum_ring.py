from itertools import permutations

import pytest

from qschubert.classes import CohClass, QCohClass
from qschubert.classical import dual
from qschubert.flagcore import (
    FlagError, FlagType, alpha, coset_elements, flags_of_size, length, longest_element,
)
from qschubert.polyring import Poly, q, sigma, x
from qschubert.quantum.matrices import Gq_special
from qschubert.quantum.ring import (
    GWQuery, class_of_G_lambda, evaluate_poly, expand_in_GLambda, gw_invariant, qpairing,
    quantum_basis_product, quantum_giambelli_poly, quantum_power, quantum_product, structure_constant,
)
from qschubert.schubert import a_lambda_table, giambelli_poly, lambda_circ, lambda_indices

F = FlagType.parse
P1 = F("1;2")
S1, ID = (2, 1), (1, 2)


def test_p1_square():
    assert quantum_basis_product(S1, S1, P1) == QCohClass.basis(ID, P1, (1,))
    assert structure_constant(S1, S1, ID, (1,), P1) == 1


def test_unit():
    flag = F("1,2;3")
    one = QCohClass.one(flag)
    for w in coset_elements(flag):
        assert quantum_product(one, QCohClass.basis(w, flag)) == QCohClass.basis(w, flag)


def test_grassmannian_g24_products():
    flag = F("2;4")
    s11, s2, s1, s22 = (2, 3, 1, 4), (1, 4, 2, 3), (1, 3, 2, 4), (3, 4, 1, 2)
    one = QCohClass.basis((1, 2, 3, 4), flag, (1,))
    assert quantum_basis_product(s11, s2, flag) == one
    assert quantum_basis_product(s11, s11, flag) == QCohClass.basis(s22, flag)
    assert quantum_basis_product(s2, s2, flag) == QCohClass.basis(s22, flag)
    assert quantum_power(QCohClass.basis(s1, flag), 4) == QCohClass.basis(s22, flag) * 2 + one * 2


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_projective_space_power(n):
    flag = F(f"1;{n}")
    h = QCohClass.basis((2, 1) + tuple(range(3, n + 1)), flag)
    assert quantum_power(h, n) == QCohClass.basis(tuple(range(1, n + 1)), flag, (1,))


@pytest.mark.parametrize("text", ["1;3", "1,2;3", "2;4", "1,3;4"])
def test_commutative_and_graded(text):
    flag = F(text)
    degs = flag.q_degrees
    for u in coset_elements(flag):
        for v in coset_elements(flag):
            p = quantum_basis_product(u, v, flag)
            assert p == quantum_basis_product(v, u, flag)
            for (d, w), c in p.terms.items():
                assert length(w) + sum(a * b for a, b in zip(d, degs)) == length(u) + length(v)
            assert p.at_q_zero() == CohClass(flag, {w: c for (d, w), c in p.terms.items() if not any(d)})


def test_gw_examples():
    assert gw_invariant(GWQuery(P1, (S1, S1, S1), (1,))) == 1
    # lengths sum to 2, but dim + deg q_1 = 3
    assert gw_invariant(GWQuery(P1, (S1, S1, ID), (1,))) == 0


@pytest.mark.parametrize("text", ["1,2;3", "2;4", "1;4"])
def test_two_point_invariants(text):
    flag = F(text)
    for u in coset_elements(flag):
        for v in coset_elements(flag):
            assert gw_invariant(GWQuery(flag, (u, v), (0,) * flag.k)) == (1 if v == dual(u, flag) else 0)
            for j in range(flag.k):
                d = tuple(int(t == j) for t in range(flag.k))
                assert gw_invariant(GWQuery(flag, (u, v), d)) == 0


@pytest.mark.parametrize("text,degrees", [("1,2;3", [(0, 0), (1, 0), (0, 1), (1, 1)]), ("2;4", [(0,), (1,)])])
def test_three_point_invariants_are_symmetric(text, degrees):
    flag = F(text)
    perms = coset_elements(flag)
    for d in degrees:
        for a in perms:
            for b in perms:
                for c in perms:
                    val = gw_invariant(GWQuery(flag, (a, b, c), d))
                    for order in permutations((a, b, c)):
                        assert gw_invariant(GWQuery(flag, order, d)) == val


def test_gw_query_validation():
    with pytest.raises(FlagError):
        GWQuery(P1, (S1, S1, S1), (1, 0))
    with pytest.raises(FlagError):
        GWQuery(F("1;3"), ((1, 3, 2), (1, 2, 3)), (0,))
    with pytest.raises(FlagError):
        GWQuery(P1, (S1, S1), (-1,))


def test_quantum_giambelli_examples():
    flag = F("1,2;3")
    assert quantum_giambelli_poly((1, 2, 3), flag) == Poly.const(1)
    for j in (1, 2):
        for i in range(1, flag.bounds[j] + 1):
            assert quantum_giambelli_poly(alpha(i, j, flag), flag) == Gq_special(i, j, flag)


@pytest.mark.parametrize("text", ["2;4", "2;5", "3;6"])
def test_grassmannian_quantum_giambelli_is_classical(text):
    flag = F(text)
    for w in coset_elements(flag):
        assert quantum_giambelli_poly(w, flag) == giambelli_poly(w, flag)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_quantum_giambelli_at_q_zero(n):
    for flag in flags_of_size(n):
        for w in coset_elements(flag):
            assert quantum_giambelli_poly(w, flag).set_q_zero() == giambelli_poly(w, flag)


@pytest.mark.parametrize("text", ["1,2;3", "2;4", "1,3;4"])
def test_expand_in_GLambda(text):
    flag = F(text)
    table = a_lambda_table(flag)
    for lam in lambda_indices(flag):
        assert expand_in_GLambda(class_of_G_lambda(lam, flag)) == {lam: Poly.const(1)}
    for w in coset_elements(flag):
        want = {lam: Poly.const(a) for lam, a in table.a(w).items()}
        assert expand_in_GLambda(QCohClass.basis(w, flag)) == want
    top = QCohClass.basis(longest_element(flag), flag)
    assert expand_in_GLambda(top) == {lambda_circ(flag): Poly.const(1)}
    assert expand_in_GLambda(QCohClass.one(flag)) == {(((),) * flag.k): Poly.const(1)}


def test_expand_shifted_class():
    flag = F("1,2;3")
    c = QCohClass.basis((2, 1, 3), flag, (1, 1)) * 3
    got = expand_in_GLambda(c)
    assert got == {lam: q(1) * q(2) * (3 * a) for lam, a in a_lambda_table(flag).a((2, 1, 3)).items()}


def test_qpairing_on_classes_and_polys():
    flag = F("1,2;3")
    for w in coset_elements(flag):
        for v in coset_elements(flag):
            want = Poly.const(1 if v == dual(w, flag) else 0)
            assert qpairing(QCohClass.basis(w, flag), CohClass.basis(v, flag)) == want
    # sigma^2 = q_1 has no point-class part; sigma^3 = q_1 sigma pairs to q_1
    assert qpairing(sigma(1, 1), sigma(1, 1), P1) == Poly()
    assert qpairing(sigma(1, 1) ** 2, sigma(1, 1), P1) == q(1)
    with pytest.raises(ValueError):
        qpairing(sigma(1, 1), sigma(1, 1))


def test_evaluate_poly():
    assert evaluate_poly(sigma(1, 1) ** 2, P1) == QCohClass.basis(ID, P1, (1,))
    assert evaluate_poly(sigma(1, 1) + sigma(1, 2), P1) == QCohClass(P1)
    assert evaluate_poly(q(1) * 2, P1) == QCohClass.basis(ID, P1, (1,)) * 2
    with pytest.raises(ValueError):
        evaluate_poly(x(1), P1)


def test_flag_mismatch():
    with pytest.raises(ValueError):
        quantum_product(QCohClass.one(P1), QCohClass.one(F("1;3")))
