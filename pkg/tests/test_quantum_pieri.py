import pytest

from qschubert.classes import QCohClass
from qschubert.flagcore import FlagError, FlagType, alpha, coset_elements, flags_of_size, length
from qschubert.quantum.pieri import HLCollection, enumerate_hl, qpieri_multiply, quantum_pieri
from qschubert.quantum.ring import quantum_basis_product

F = FlagType.parse


def test_hl_examples():
    flag = F("1;2")
    (hl,) = enumerate_hl((2, 1), 1, 1, flag)
    assert (hl.h, hl.l, hl.m) == ((1,), (1,), 1)
    assert hl.q_exponents() == (1,) and hl.q_weight() == 2
    assert enumerate_hl((1, 2), 1, 1, flag) == []


@pytest.mark.parametrize("h,l,i,j", [((), (), 1, 1), ((1,), (1, 2), 2, 1), ((2, 1), (2, 1), 2, 1),
                                     ((1,), (1,), 1, 2), ((1, 2), (2, 1), 1, 2), ((1,), (3,), 1, 1)])
def test_hl_validation(h, l, i, j):
    with pytest.raises(FlagError):
        HLCollection(h, l, i, j, F("1,2;3"))


def test_hl_q_exponents_count_covering_intervals():
    hl = HLCollection((1, 2), (3, 2), 2, 2, F("1,2,3;4"))
    assert hl.q_exponents() == (1, 2, 1)


def test_quantum_pieri_examples():
    p1 = F("1;2")
    assert quantum_pieri((2, 1), 1, 1, p1) == QCohClass.basis((1, 2), p1, (1,))
    flag = F("1,2;3")
    want = QCohClass.basis((3, 1, 2), flag) + QCohClass.basis((1, 2, 3), flag, (1, 0))
    assert quantum_pieri((2, 1, 3), 1, 1, flag) == want


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_quantum_pieri_is_graded(n):
    for flag in flags_of_size(n):
        degs = flag.q_degrees
        for w in coset_elements(flag):
            for j in range(1, flag.k + 1):
                for i in range(1, flag.bounds[j] + 1):
                    for (d, t), c in quantum_pieri(w, i, j, flag).terms.items():
                        assert c == 1
                        assert length(t) + sum(e * g for e, g in zip(d, degs)) == length(w) + i


@pytest.mark.parametrize("text", ["1,2;4", "2;5", "1,3;5"])
def test_pieri_agrees_with_ring_product(text):
    flag = F(text)
    for w in coset_elements(flag):
        for j in range(1, flag.k + 1):
            for i in range(1, flag.bounds[j] + 1):
                assert quantum_pieri(w, i, j, flag) == quantum_basis_product(alpha(i, j, flag), w, flag)


def test_qpieri_multiply_is_linear():
    flag = F("1,2;3")
    u, v = (2, 1, 3), (1, 3, 2)
    c = QCohClass.basis(u, flag) * 2 + QCohClass.basis(v, flag, (0, 1)) * -1
    want = quantum_pieri(u, 1, 2, flag) * 2 + quantum_pieri(v, 1, 2, flag).shift((0, 1)) * -1
    assert qpieri_multiply(c, 1, 2) == want
    assert qpieri_multiply(c, 0, 2) == c
    assert not qpieri_multiply(c, 3, 2)


@pytest.mark.parametrize("args", [((1, 2, 3), 0, 1), ((1, 2, 3), 2, 1), ((1, 2, 3), 1, 3), ((1, 3, 2), 1, 1)])
def test_quantum_pieri_errors(args):
    w, i, j = args
    with pytest.raises(FlagError):
        quantum_pieri(w, i, j, F("1;3"))
