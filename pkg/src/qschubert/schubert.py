"""Schubert and Giambelli polynomials, special polynomials, and the
standard elementary monomial basis with its change of basis ``a_Lambda(w)``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from .classes import CohClass
from .flagcore import FlagError, FlagType, Perm, coset_elements, in_S, length, swap
from .lattice import unimodular_inverse
from .pieri import pieri_multiply
from .polyring import (
    Poly, blockwise_elementary_reduce, divided_difference, poly_sum, sigma, x,
)

LambdaIndex = tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def _schubert(w: Perm, pick_last: bool) -> Poly:
    n = len(w)
    ascents = [i for i in range(1, n) if w[i - 1] < w[i]]
    if not ascents:
        # w is the longest element of S_n
        out = Poly.const(1)
        for i in range(1, n):
            out = out * x(i) ** (n - i)
        return out
    i = ascents[-1] if pick_last else ascents[0]
    return divided_difference(i, _schubert(swap(w, i, i + 1), pick_last))


def schubert_poly(w: Perm, word: str = "first") -> Poly:
    """Schubert polynomial of ``w`` by divided differences from ``x_1^(n-1) ... x_(n-1)``.

    ``word`` chooses the reduced word: bubble up the first (``"first"``) or
    the last (``"last"``) ascent at each step.  Both give the same answer.
    """
    if word not in ("first", "last"):
        raise ValueError(f"word must be 'first' or 'last', got {word!r}")
    return _schubert(tuple(w), word == "last")


@lru_cache(maxsize=None)
def giambelli_poly(w: Perm, flag: FlagType) -> Poly:
    """``P_w(sigma)``: the Schubert polynomial rewritten in the sigma variables."""
    w = flag.check_perm(w)
    if not in_S(w, flag):
        raise FlagError(f"{w} is not in S for flag {flag}")
    return blockwise_elementary_reduce(schubert_poly(w), flag)


@lru_cache(maxsize=None)
def g_special(i: int, j: int, flag: FlagType) -> Poly:
    """``g_i^j``, the i-th Chern class of the j-th quotient, via the block recursion."""
    if not 0 <= j <= flag.k + 1:
        raise FlagError(f"g_i^j needs 0 <= j <= k+1, got j = {j}")
    if i < 0 or i > flag.bounds[j]:
        return Poly()
    if i == 0:
        return Poly.const(1)
    if j == 0:
        return Poly()
    return poly_sum(sigma(r, j) * g_special(i - r, j - 1, flag)
                    for r in range(0, min(i, flag.block_size(j)) + 1))


@lru_cache(maxsize=None)
def f_special(i: int, j: int, flag: FlagType) -> Poly:
    """``f_i^j``: complete symmetric ``h_i`` of the first ``n_j`` roots, in sigma.

    Uses ``(sum_r e_r t^r)^(-1) = sum_p (-1)^p h_p t^p``.
    """
    if not 0 <= j <= flag.k + 1:
        raise FlagError(f"f_i^j needs 0 <= j <= k+1, got j = {j}")
    if i < 0:
        return Poly()
    inv = [Poly.const(1)]
    for p in range(1, i + 1):
        inv.append(-poly_sum(g_special(r, j, flag) * inv[p - r] for r in range(1, p + 1)))
    return inv[i] if i % 2 == 0 else -inv[i]


# -- standard elementary monomials ----------------------------------------------

def _box_partitions(parts: int, largest: int) -> list[tuple[int, ...]]:
    out = []
    for cnt in range(parts + 1):
        for combo in combinations_with_replacement(range(largest, 0, -1), cnt):
            out.append(tuple(combo))
    return out


@lru_cache(maxsize=None)
def lambda_indices(flag: FlagType) -> tuple[LambdaIndex, ...]:
    """All ``(Lambda_1, ..., Lambda_k)``; ``Lambda_j`` fits in a ``(n_{j+1}-n_j) x n_j`` box."""
    b = flag.bounds
    per_slot = [_box_partitions(b[j + 1] - b[j], b[j]) for j in range(1, flag.k + 1)]
    out: list[LambdaIndex] = [()]
    for slot in per_slot:
        out = [acc + (lam,) for acc in out for lam in slot]
    return tuple(sorted(out, key=lambda lam: (lambda_size(lam), lam)))


def lambda_size(lam: LambdaIndex) -> int:
    return sum(sum(p) for p in lam)


def check_lambda(lam: LambdaIndex, flag: FlagType) -> LambdaIndex:
    lam = tuple(tuple(int(v) for v in p) for p in lam)
    b = flag.bounds
    if len(lam) != flag.k:
        raise FlagError(f"Lambda needs {flag.k} partitions, got {len(lam)}")
    for j, part in enumerate(lam, 1):
        if len(part) > b[j + 1] - b[j] or any(not 1 <= v <= b[j] for v in part) \
                or list(part) != sorted(part, reverse=True):
            raise FlagError(f"Lambda_{j} = {part} is not a partition in a "
                            f"{b[j + 1] - b[j]} x {b[j]} box")
    return lam


def lambda_circ(flag: FlagType) -> LambdaIndex:
    """Index of the point class: ``Lambda_j = (n_j, ..., n_j)`` with ``n_{j+1} - n_j`` parts."""
    b = flag.bounds
    return tuple((b[j],) * (b[j + 1] - b[j]) for j in range(1, flag.k + 1))


def lambda_factors(lam: LambdaIndex) -> list[tuple[int, int]]:
    """``[(part, j), ...]`` for every factor ``g_part^j`` of ``g_Lambda``."""
    return [(v, j) for j, part in enumerate(lam, 1) for v in part]


@lru_cache(maxsize=None)
def g_lambda(lam: LambdaIndex, flag: FlagType) -> Poly:
    lam = check_lambda(lam, flag)
    out = Poly.const(1)
    for v, j in lambda_factors(lam):
        out = out * g_special(v, j, flag)
    return out


@lru_cache(maxsize=None)
def g_lambda_class(lam: LambdaIndex, flag: FlagType) -> CohClass:
    """Class of ``g_Lambda`` in the Schubert basis, by iterated Pieri from the unit."""
    c = CohClass.one(flag)
    for v, j in lambda_factors(lam):
        c = pieri_multiply(c, v, j, "alpha")
    return c


@dataclass(frozen=True)
class ALambdaTable:
    """``a_Lambda(w)`` with ``P_w = sum_Lambda a_Lambda(w) g_Lambda`` modulo the Borel ideal."""

    flag: FlagType
    lambdas: tuple[LambdaIndex, ...]
    perms: tuple[Perm, ...]
    coefficients: dict  # w -> {Lambda: int}

    def a(self, w: Perm) -> dict[LambdaIndex, int]:
        return self.coefficients[tuple(w)]

    def value(self, w: Perm, lam: LambdaIndex) -> int:
        return self.coefficients[tuple(w)].get(lam, 0)


@lru_cache(maxsize=None)
def a_lambda_table(flag: FlagType) -> ALambdaTable:
    """Invert the (graded, unimodular) matrix of ``g_Lambda`` classes in the Schubert basis."""
    lambdas = lambda_indices(flag)
    perms = coset_elements(flag)
    if len(lambdas) != len(perms):
        raise AssertionError(f"{len(lambdas)} Lambda indices but {len(perms)} Schubert classes")
    coeffs: dict[Perm, dict[LambdaIndex, int]] = {w: {} for w in perms}
    rows_by_deg: dict[int, list[LambdaIndex]] = {}
    cols_by_deg: dict[int, list[Perm]] = {}
    for lam in lambdas:
        rows_by_deg.setdefault(lambda_size(lam), []).append(lam)
    for w in perms:
        cols_by_deg.setdefault(length(w), []).append(w)
    for deg in range(flag.dim + 1):
        rows = rows_by_deg.get(deg, [])
        cols = cols_by_deg.get(deg, [])
        if len(rows) != len(cols):
            raise AssertionError(f"degree {deg}: {len(rows)} monomials vs {len(cols)} classes")
        mat = []
        for lam in rows:
            c = g_lambda_class(lam, flag)
            if any(length(w) != deg for w in c.terms):
                raise AssertionError(f"class of g_{lam} is not homogeneous")
            mat.append([c.coeff(w) for w in cols])
        try:
            inv = unimodular_inverse(mat)
        except ValueError as exc:
            raise AssertionError(f"g_Lambda change of basis not unimodular in degree {deg}") from exc
        for wi, w in enumerate(cols):
            coeffs[w] = {lam: inv[wi][li] for li, lam in enumerate(rows) if inv[wi][li]}
    return ALambdaTable(flag, lambdas, perms, coeffs)


def expand_in_g_lambda(c: CohClass) -> dict[LambdaIndex, int]:
    """Coefficients of a classical class in the ``g_Lambda`` basis."""
    table = a_lambda_table(c.flag)
    out: dict[LambdaIndex, int] = {}
    for w, v in c.terms.items():
        for lam, a in table.a(w).items():
            out[lam] = out.get(lam, 0) + v * a
    return {lam: v for lam, v in out.items() if v}
