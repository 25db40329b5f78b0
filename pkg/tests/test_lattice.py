import random
from math import gcd

import pytest
from hypothesis import given, strategies as st

from qschubert.lattice import Echelon, solve_in_span, unimodular_inverse, xgcd


@given(st.integers(-10 ** 6, 10 ** 6), st.integers(-10 ** 6, 10 ** 6))
def test_xgcd(a, b):
    g, s, t = xgcd(a, b)
    assert g == gcd(a, b) and s * a + t * b == g


def mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def random_unimodular(rng, n):
    """Product of random elementary integer matrices."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            m[0][0] *= -1
            continue
        c = rng.randint(-3, 3)
        m[i] = [x + c * y for x, y in zip(m[i], m[j])]
    return m


@pytest.mark.parametrize("seed", range(10))
def test_unimodular_inverse(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    m = random_unimodular(rng, n)
    inv = unimodular_inverse(m)
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    assert mat_mul(m, inv) == ident == mat_mul(inv, m)


@pytest.mark.parametrize("mat", [[[2]], [[1, 2], [2, 4]], [[1, 0], [0, 3]], [[1, 2]]])
def test_non_unimodular_raises(mat):
    with pytest.raises(ValueError):
        unimodular_inverse(mat)


rows_st = st.lists(st.dictionaries(st.integers(0, 5), st.integers(-6, 6), max_size=4), max_size=5)


def combine(rows, coeffs):
    out = {}
    for r, c in zip(rows, coeffs):
        for k, v in r.items():
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


@given(rows_st, st.dictionaries(st.integers(0, 5), st.integers(-20, 20), max_size=6), st.data())
def test_reduce_is_a_canonical_coset_representative(rows, vec, data):
    coeffs = data.draw(st.lists(st.integers(-4, 4), min_size=len(rows), max_size=len(rows)))
    shifted = combine([vec] + rows, [1] + coeffs)
    plain, tidy = Echelon(rows), Echelon(rows, reduced=True)
    assert plain.reduce(vec) == plain.reduce(shifted) == tidy.reduce(vec) == tidy.reduce(shifted)
    assert plain.rank == tidy.rank
    for r in rows:
        assert plain.reduce(r) == {} == tidy.reduce(r)


def test_pivots_are_gcds():
    # span of (4, 1) and (6, 0) is spanned by (2, -1) and (0, 3)
    e = Echelon([{0: 4, 1: 1}, {0: 6}])
    assert e.pivots[0][0] == 2 and e.pivots[1] == {1: 3}
    assert e.reduce({0: 2, 1: 7}) == {1: 2}
    assert e.reduce({0: 1}) == {0: 1}


def test_solve_in_span():
    basis = [{0: 1, 1: 1}, {1: 1}]
    assert solve_in_span(basis, {0: 3, 1: 5}) == [3, 2]
    rel = Echelon([{1: 1}])
    # modulo the relation x_1 = 0 only the first coordinate matters
    assert solve_in_span([{0: 2, 1: 1}], {0: 4}, relations=rel) == [2]
    with pytest.raises(ValueError):
        solve_in_span([{0: 2}], {0: 3})
