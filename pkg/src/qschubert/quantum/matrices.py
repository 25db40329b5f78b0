"""The deformed companion matrix and the quantized special polynomials ``G_i^j``.

``G_i^j`` is built three ways: a two-step recursion in ``j`` (the reference),
a sum over matchings in a labelled path graph, and the coefficients of the
characteristic polynomial of the upper-left ``n_j x n_j`` block of the
deformed matrix.
"""

from __future__ import annotations

from functools import lru_cache

from ..flagcore import FlagError, FlagType
from ..polyring import Poly, PolyMatrix, char_poly_coeffs, poly_sum, q, sigma, submatrix, zero_matrix
from ..schubert import g_special


def edge_sign(l: int, flag: FlagType) -> int:
    """Sign attached to ``q_l``: ``(-1)^(n_{l+1} - n_l + 1)``."""
    b = flag.bounds
    return -1 if (b[l + 1] - b[l] + 1) % 2 else 1


def deformed_matrix(flag: FlagType, quantum: bool = True, link_last_block: bool = True) -> PolyMatrix:
    """``A_n`` (``quantum=False``) or ``A_n^q = A_n + B_n``, 0-indexed.

    ``A_n`` is block diagonal with companion-type blocks (sigma's along the
    top row, ``-1`` on the subdiagonal).  ``B_n`` puts ``+-q_j`` at row
    ``n_{j-1}+1``, column ``n_{j+1}``, and ``-1`` at row ``n_j+1``, column
    ``n_j`` for ``1 <= j <= k``.  ``link_last_block=False`` stops the ``-1``
    entries at ``j = k-1``; that variant is kept only to show it breaks the
    presentation (see the tests).
    """
    n, b = flag.n, flag.bounds
    a = zero_matrix(n)
    minus_one = Poly.const(-1)
    for j in range(1, flag.k + 2):
        top = b[j - 1]
        for c in range(1, flag.block_size(j) + 1):
            a[top][top + c - 1] = sigma(c, j)
        for c in range(top + 1, b[j]):
            a[c][c - 1] = minus_one
    if not quantum:
        return a
    last = flag.k if link_last_block else flag.k - 1
    for j in range(1, flag.k + 1):
        a[b[j - 1]][b[j + 1] - 1] = a[b[j - 1]][b[j + 1] - 1] + q(j) * edge_sign(j, flag)
        if j <= last:
            a[b[j]][b[j] - 1] = a[b[j]][b[j] - 1] + minus_one
    return a


def _check_range(i: int, j: int, flag: FlagType) -> None:
    if not 0 <= j <= flag.k + 1:
        raise FlagError(f"G_i^j needs 0 <= j <= k+1, got j = {j}")


@lru_cache(maxsize=None)
def Gq_recursive(i: int, j: int, flag: FlagType) -> Poly:
    """``G_i^j = (+-) q_{j-1} G^{j-2}_{i - (n_j - n_{j-2})} + sum_r sigma_r^j G^{j-1}_{i-r}``.

    Conventions: ``G_0^j = 1``, ``G_i^j = 0`` for ``i < 0`` or ``i > n_j``,
    ``G_i^0 = delta_{i,0}``, ``q_0 = 0``.
    """
    _check_range(i, j, flag)
    b = flag.bounds
    if i < 0 or i > b[j]:
        return Poly()
    if i == 0:
        return Poly.const(1)
    if j == 0:
        return Poly()
    if i == 1:
        return g_special(1, j, flag)
    out = poly_sum(sigma(r, j) * Gq_recursive(i - r, j - 1, flag)
                   for r in range(0, min(i, flag.block_size(j)) + 1))
    if j >= 2:
        shift = b[j] - b[j - 2]
        if i - shift >= 0:
            out = out + q(j - 1) * Gq_recursive(i - shift, j - 2, flag) * edge_sign(j - 1, flag)
    return out


@lru_cache(maxsize=None)
def _matching_polys(j: int, flag: FlagType) -> dict[int, Poly]:
    """Weighted-degree-graded sum over matchings of the graph on vertices ``1..j``."""
    b = flag.bounds
    # (vertex, partial product, degree); every vertex carries at most one chosen edge
    acc: dict[int, Poly] = {}

    def rec(v: int, mono: Poly, deg: int):
        if v > j:
            acc[deg] = acc.get(deg, Poly()) + mono
            return
        rec(v + 1, mono, deg)
        for r in range(1, flag.block_size(v) + 1):
            rec(v + 1, mono * sigma(r, v), deg + r)
        if v + 1 <= j:
            rec(v + 2, mono * q(v) * edge_sign(v, flag), deg + b[v + 1] - b[v - 1])

    rec(1, Poly.const(1), 0)
    return acc


def Gq_matchings(i: int, j: int, flag: FlagType) -> Poly:
    """Sum of the labels of all vertex-disjoint edge/tail selections of degree ``i``."""
    _check_range(i, j, flag)
    if j == 0:
        return Poly.const(1) if i == 0 else Poly()
    return _matching_polys(j, flag).get(i, Poly())


@lru_cache(maxsize=None)
def _charpoly(j: int, flag: FlagType, link_last_block: bool) -> tuple[Poly, ...]:
    nj = flag.bounds[j]
    return tuple(char_poly_coeffs(submatrix(deformed_matrix(flag, True, link_last_block), nj)))


def Gq_charpoly(i: int, j: int, flag: FlagType, link_last_block: bool = True) -> Poly:
    """``i``-th coefficient of ``det(A^q_{n_j} + lambda I)``."""
    _check_range(i, j, flag)
    nj = flag.bounds[j]
    if i == 0:
        return Poly.const(1)
    if i < 0 or i > nj:
        return Poly()
    return _charpoly(j, flag, link_last_block)[i - 1]


def Gq_special(i: int, j: int, flag: FlagType, method: str = "recursion") -> Poly:
    """``G_i^j(sigma, q)`` by ``method`` in {"recursion", "matchings", "charpoly"}."""
    if method == "recursion":
        return Gq_recursive(i, j, flag)
    if method == "matchings":
        return Gq_matchings(i, j, flag)
    if method == "charpoly":
        return Gq_charpoly(i, j, flag)
    raise ValueError(f"unknown method {method!r}")
