from itertools import permutations

import pytest

from qschubert.classes import CohClass
from qschubert.flagcore import (
    FlagError, FlagType, coset_elements, flags_of_size, length, longest_element, swap,
)
from qschubert.polyring import Poly, complete, elementary, expand_sigma, x
from qschubert.quantum.presentation import ideal_normal_form
from qschubert.schubert import (
    a_lambda_table, check_lambda, expand_in_g_lambda, f_special, g_lambda, g_lambda_class,
    g_special, giambelli_poly, lambda_circ, lambda_indices, lambda_size, schubert_poly,
)
from qschubert.polyring import divided_difference

F = FlagType.parse


def test_schubert_polynomials_of_s3():
    assert schubert_poly((1, 2, 3)) == Poly.const(1)
    assert schubert_poly((2, 1, 3)) == x(1)
    assert schubert_poly((1, 3, 2)) == x(1) + x(2)
    assert schubert_poly((2, 3, 1)) == x(1) * x(2)
    assert schubert_poly((3, 1, 2)) == x(1) ** 2
    assert schubert_poly((3, 2, 1)) == x(1) ** 2 * x(2)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_schubert_polynomial_is_word_independent(n):
    for w in permutations(range(1, n + 1)):
        assert schubert_poly(w, "first") == schubert_poly(w, "last")


@pytest.mark.parametrize("n", [3, 4])
def test_divided_differences_walk_down(n):
    for w in permutations(range(1, n + 1)):
        for i in range(1, n):
            got = divided_difference(i, schubert_poly(w))
            want = schubert_poly(swap(w, i, i + 1)) if w[i - 1] > w[i] else Poly()
            assert got == want


def test_schubert_word_argument():
    with pytest.raises(ValueError):
        schubert_poly((1, 2), "middle")


@pytest.mark.parametrize("text", ["1;3", "1,2;4", "2;5", "1,3;5"])
def test_g_special_is_elementary_of_first_roots(text):
    flag = F(text)
    b = flag.bounds
    for j in range(flag.k + 2):
        for i in range(b[j] + 2):
            assert expand_sigma(g_special(i, j, flag), flag) == elementary(i, tuple(range(1, b[j] + 1)))


@pytest.mark.parametrize("text", ["1;3", "1,2;4", "2;5"])
def test_f_special_is_complete_of_first_roots(text):
    flag = F(text)
    for j in range(flag.k + 2):
        for i in range(5):
            assert expand_sigma(f_special(i, j, flag), flag) == complete(i, tuple(range(1, flag.bounds[j] + 1)))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_lambda_count_matches_coset_count(n):
    for flag in flags_of_size(n):
        lams = lambda_indices(flag)
        assert len(lams) == flag.coset_size
        assert max(lambda_size(lam) for lam in lams) == flag.dim
        assert lambda_circ(flag) in lams


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_a_table_inverts_the_g_lambda_classes(n):
    for flag in flags_of_size(n):
        table = a_lambda_table(flag)
        for w in coset_elements(flag):
            total = CohClass(flag)
            for lam, a in table.a(w).items():
                total = total + g_lambda_class(lam, flag) * a
            assert total == CohClass.basis(w, flag)


@pytest.mark.parametrize("text", ["1,2;3", "2;4", "1,3;4", "1;4"])
def test_giambelli_is_the_g_lambda_combination_mod_ideal(text):
    flag = F(text)
    table = a_lambda_table(flag)
    for w in coset_elements(flag):
        diff = giambelli_poly(w, flag)
        for lam, a in table.a(w).items():
            diff = diff - g_lambda(lam, flag) * a
        assert ideal_normal_form(diff, flag, q_zero=True).is_zero()


def test_point_class():
    for flag in flags_of_size(4):
        assert g_lambda_class(lambda_circ(flag), flag) == CohClass.basis(longest_element(flag), flag)


def test_expand_in_g_lambda_round_trip():
    flag = F("1,3;4")
    c = CohClass.basis((2, 1, 4, 3), flag) * 3 - CohClass.basis((1, 3, 4, 2), flag)
    back = CohClass(flag)
    for lam, a in expand_in_g_lambda(c).items():
        back = back + g_lambda_class(lam, flag) * a
    assert back == c


@pytest.mark.parametrize("lam", [((2,),), ((1, 1, 1),), ((1,), (1,)), ((1, 2),), ((0,),)])
def test_bad_lambda(lam):
    with pytest.raises(FlagError):
        check_lambda(lam, F("1;3"))


def test_giambelli_needs_S():
    with pytest.raises(FlagError):
        giambelli_poly((1, 3, 2), F("1;3"))


def test_giambelli_of_grassmannian_class():
    # the class (1,3,2,4) on (2;4) is e_1 of the first two roots
    flag = F("2;4")
    assert giambelli_poly((1, 3, 2, 4), flag) == g_special(1, 1, flag)
    assert length((1, 3, 2, 4)) == 1
