"""Classical cohomology ring of a partial flag variety in the Schubert basis."""

from __future__ import annotations

from functools import lru_cache

from .classes import CohClass
from .flagcore import (
    FlagError, FlagType, Perm, beta, coset_elements, in_S, length, longest_element,
    alpha, multiply,
)
from .pieri import pieri_multiply, pieri_targets  # noqa: F401  (re-exported)
from .schubert import a_lambda_table, lambda_factors


def _apply_lambda(lam, c: CohClass) -> CohClass:
    for v, j in lambda_factors(lam):
        c = pieri_multiply(c, v, j, "alpha")
        if not c:
            break
    return c


@lru_cache(maxsize=None)
def basis_product(u: Perm, v: Perm, flag: FlagType) -> CohClass:
    """``[Omega_u] . [Omega_v]``: expand ``u`` in the ``g_Lambda`` basis, Pieri onto ``v``."""
    table = a_lambda_table(flag)
    base = CohClass.basis(v, flag)
    out = CohClass(flag)
    for lam, a in table.a(u).items():
        out = out + _apply_lambda(lam, base) * a
    return out


def classical_product(a: CohClass, b: CohClass) -> CohClass:
    """Bilinear cup product of two classes."""
    if a.flag != b.flag:
        raise ValueError(f"flag mismatch: {a.flag} vs {b.flag}")
    flag = a.flag
    out: dict[Perm, int] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            # smaller index first so the cache sees each unordered pair once
            x, y = (u, v) if (length(u), u) <= (length(v), v) else (v, u)
            for w, c in basis_product(x, y, flag).terms.items():
                out[w] = out.get(w, 0) + cu * cv * c
    return CohClass(flag, out)


def pairing(a: CohClass, b: CohClass) -> int:
    """Coefficient of the point class ``[Omega_{w°}]`` in ``a . b``."""
    if a.flag != b.flag:
        raise ValueError(f"flag mismatch: {a.flag} vs {b.flag}")
    top = longest_element(a.flag)
    return classical_product(a, b).coeff(top)


@lru_cache(maxsize=None)
def dual_table(flag: FlagType) -> dict[Perm, Perm]:
    """``{w: dual(w)}`` computed from the intersection pairing alone."""
    perms = coset_elements(flag)
    by_len: dict[int, list[Perm]] = {}
    for w in perms:
        by_len.setdefault(length(w), []).append(w)
    out: dict[Perm, Perm] = {}
    for w in perms:
        partners = [v for v in by_len.get(flag.dim - length(w), [])
                    if pairing(CohClass.basis(w, flag), CohClass.basis(v, flag)) == 1]
        if len(partners) != 1:
            raise AssertionError(f"{w} pairs to 1 with {partners} on flag {flag}")
        out[w] = partners[0]
    return out


def dual(w: Perm, flag: FlagType) -> Perm:
    """The unique ``v`` in ``S`` with ``l(v) = dim F - l(w)`` and pairing 1 against ``w``."""
    w = flag.check_perm(w)
    if not in_S(w, flag):
        raise FlagError(f"{w} is not in S for flag {flag}")
    return dual_table(flag)[w]


# -- Chern class identity relating consecutive quotients ---------------------------

def special_class(kind: str, i: int, j: int, flag: FlagType) -> CohClass:
    """``[Omega_{alpha_{i,j}}]`` / ``[Omega_{beta_{i,j}}]`` with the boundary conventions.

    Index ``0`` gives the unit; negative indices, ``j = 0`` with ``i > 0``, and
    ``alpha`` with ``i > n_j`` give zero.
    """
    if i < 0:
        return CohClass(flag)
    if i == 0:
        return CohClass.one(flag)
    if j == 0:
        return CohClass(flag)
    if kind == "alpha":
        if i > flag.bounds[j]:
            return CohClass(flag)
        return CohClass.basis(alpha(i, j, flag), flag)
    return CohClass.basis(beta(i, j, flag), flag)


def verify_chern_identity(flag: FlagType, i: int, j: int) -> bool:
    """Check ``alpha_{i,j} = sum_r (sum_p (-1)^p beta_{p,j-1} alpha_{r-p,j}) alpha_{i-r,j-1}``.

    The inner sum is the class of ``c_r`` of the j-th kernel bundle written
    through the special classes of the neighbouring quotients.
    """
    b = flag.bounds
    if not (1 <= j <= flag.k and 1 <= i <= b[j]):
        raise FlagError(f"(i, j) = ({i}, {j}) out of range for flag {flag}")
    rhs = CohClass(flag)
    for r in range(flag.block_size(j) + 1):
        inner = CohClass(flag)
        for p in range(r + 1):
            term = classical_product(special_class("beta", p, j - 1, flag),
                                     special_class("alpha", r - p, j, flag))
            inner = inner + term * (-1) ** p
        rhs = rhs + classical_product(inner, special_class("alpha", i - r, j - 1, flag))
    return rhs == special_class("alpha", i, j, flag)


def beta_alpha(p: int, r: int, j: int, flag: FlagType) -> Perm | None:
    """``beta_{p,j-1} . alpha_{r-p,j}`` as a permutation (``None`` if a factor vanishes)."""
    n = flag.n
    one = tuple(range(1, n + 1))
    if p > 0 and j - 1 == 0:
        return None
    if r - p > flag.bounds[j]:
        return None
    left = beta(p, j - 1, flag) if p else one
    right = alpha(r - p, j, flag) if r - p else one
    return multiply(left, right)
