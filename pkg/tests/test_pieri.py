from itertools import permutations

import pytest

from qschubert.classes import CohClass
from qschubert.classical import basis_product
from qschubert.flagcore import (
    FlagError, FlagType, alpha, beta, coset_elements, flags_of_size, in_S, length, swap,
)
from qschubert.pieri import length_up_covers, pieri_chains, pieri_multiply, pieri_targets
from qschubert.quantum.presentation import presentation_classical_class
from qschubert.schubert import g_special, giambelli_poly

F = FlagType.parse


def brute_chain_ends(w, d, steps, distinct):
    """Every chain spelled out explicitly as a list of transpositions."""
    n = len(w)
    ends = set()

    def walk(u, used, left):
        if left == 0:
            ends.add(u)
            return
        for a in range(1, d + 1):
            for b in range(d + 1, n + 1):
                tag = a if distinct == "a" else b
                v = swap(u, a, b)
                if tag not in used and length(v) == length(u) + 1:
                    walk(v, used | {tag}, left - 1)

    walk(tuple(w), frozenset(), steps)
    return frozenset(ends)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_length_up_covers_brute_force(n):
    for w in permutations(range(1, n + 1)):
        for d in range(1, n):
            want = sorted((a, b, swap(w, a, b)) for a in range(1, d + 1) for b in range(d + 1, n + 1)
                          if length(swap(w, a, b)) == length(w) + 1)
            assert length_up_covers(w, d) == want


@pytest.mark.parametrize("n", [3, 4, 5])
def test_chains_brute_force(n):
    for w in permutations(range(1, n + 1)):
        for d in range(1, n):
            for steps in range(0, n):
                for distinct in "ab":
                    assert pieri_chains(w, d, steps, distinct) == brute_chain_ends(w, d, steps, distinct)


def test_chain_argument_errors():
    with pytest.raises(ValueError):
        pieri_chains((1, 2), 1, 1, "c")
    assert pieri_chains((1, 2), 1, -1) == frozenset()


@pytest.mark.parametrize("n", [3, 4, 5])
def test_targets_stay_in_S(n):
    for flag in flags_of_size(n):
        for w in coset_elements(flag):
            for j in range(1, flag.k + 1):
                for i in range(1, flag.bounds[j] + 1):
                    assert all(in_S(t, flag) for t in pieri_targets(w, i, j, "alpha", flag))
                for i in range(1, n - flag.bounds[j] + 1):
                    assert all(in_S(t, flag) for t in pieri_targets(w, i, j, "beta", flag))


def test_monk_rule():
    flag = F("1,2,3;4")
    for w in coset_elements(flag):
        for j in (1, 2, 3):
            want = {swap(w, a, b) for a in range(1, j + 1) for b in range(j + 1, 5)
                    if length(swap(w, a, b)) == length(w) + 1}
            assert pieri_targets(w, 1, j, "alpha", flag) == want


@pytest.mark.parametrize("text", ["1,2;4", "2;5", "1,3;5"])
@pytest.mark.parametrize("kind", ["alpha", "beta"])
def test_pieri_against_polynomial_oracle(text, kind):
    """Special class times [Omega_w], checked against the polynomial presentation."""
    flag = F(text)
    for w in coset_elements(flag):
        pw = giambelli_poly(w, flag)
        for j in range(1, flag.k + 1):
            top = flag.bounds[j] if kind == "alpha" else flag.n - flag.bounds[j]
            for i in range(1, top + 1):
                cyc = alpha(i, j, flag) if kind == "alpha" else beta(i, j, flag)
                got = pieri_multiply(CohClass.basis(w, flag), i, j, kind)
                want = presentation_classical_class(giambelli_poly(cyc, flag) * pw, flag)
                assert got == want


def test_alpha_classes_are_the_g_polynomials():
    flag = F("1,3;5")
    for j in (1, 2):
        for i in range(1, flag.bounds[j] + 1):
            assert giambelli_poly(alpha(i, j, flag), flag) == g_special(i, j, flag)


def test_boundary_conventions():
    flag = F("1,2;3")
    c = CohClass.basis((1, 2, 3), flag)
    assert pieri_multiply(c, 0, 1) == c
    assert not pieri_multiply(c, 2, 1)
    assert not pieri_multiply(c, -1, 1)
    assert not pieri_multiply(c, 1, 0)
    with pytest.raises(FlagError):
        pieri_targets((1, 2, 3), 1, 3, "alpha", flag)
    with pytest.raises(FlagError):
        pieri_targets((1, 2, 3), 1, 1, "gamma", flag)


def test_anchor_product():
    # x1 * x1 = S_312 and x1 * (x1 + x2) = S_312 + S_231
    flag = F("1,2;3")
    assert basis_product((2, 1, 3), (2, 1, 3), flag) == CohClass.basis((3, 1, 2), flag)
    assert basis_product((2, 1, 3), (1, 3, 2), flag) == \
        CohClass.basis((3, 1, 2), flag) + CohClass.basis((2, 3, 1), flag)
