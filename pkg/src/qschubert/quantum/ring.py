"""Quantum products, Gromov-Witten invariants and quantum Giambelli polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..classes import CohClass, QCohClass, QDeg
from ..classical import classical_product, dual, special_class
from ..flagcore import FlagError, FlagType, Perm, in_S, length
from ..polyring import Poly, q_monomial
from ..schubert import (
    LambdaIndex, a_lambda_table, check_lambda, lambda_circ, lambda_factors,
)
from .matrices import Gq_special
from .pieri import qpieri_multiply


def apply_lambda_q(lam: LambdaIndex, c: QCohClass) -> QCohClass:
    """Multiply ``c`` by every special factor of ``G_Lambda`` in turn."""
    for v, j in lambda_factors(lam):
        c = qpieri_multiply(c, v, j)
        if not c:
            break
    return c


@lru_cache(maxsize=None)
def class_of_G_lambda(lam: LambdaIndex, flag: FlagType) -> QCohClass:
    """``G_Lambda`` evaluated in ``QH^*(F)`` by iterated quantum Pieri from the unit."""
    return apply_lambda_q(check_lambda(lam, flag), QCohClass.one(flag))


@lru_cache(maxsize=None)
def quantum_basis_product(u: Perm, v: Perm, flag: FlagType) -> QCohClass:
    """``[Omega_u] * [Omega_v] = sum_Lambda a_Lambda(u) G_Lambda * [Omega_v]``."""
    base = QCohClass.basis(v, flag)
    return QCohClass.combine(flag, ((a, apply_lambda_q(lam, base))
                                    for lam, a in a_lambda_table(flag).a(u).items()))


def _add_shifted(out: dict, prod: QCohClass, d: QDeg, coeff: int) -> None:
    for (e, w), c in prod.terms.items():
        key = (tuple(a + b for a, b in zip(d, e)), w)
        out[key] = out.get(key, 0) + coeff * c


def quantum_product(a: QCohClass | CohClass, b: QCohClass | CohClass) -> QCohClass:
    """Bilinear quantum product over ``Z[q]``."""
    if isinstance(a, CohClass):
        a = QCohClass.from_classical(a)
    if isinstance(b, CohClass):
        b = QCohClass.from_classical(b)
    if a.flag != b.flag:
        raise ValueError(f"flag mismatch: {a.flag} vs {b.flag}")
    flag = a.flag
    out: dict = {}
    for (du, u), cu in a.terms.items():
        for (dv, v), cv in b.terms.items():
            x, y = (u, v) if (length(u), u) <= (length(v), v) else (v, u)
            d = tuple(s + t for s, t in zip(du, dv))
            _add_shifted(out, quantum_basis_product(x, y, flag), d, cu * cv)
    return QCohClass(flag, out)


def quantum_power(c: QCohClass, e: int) -> QCohClass:
    out = QCohClass.one(c.flag)
    for _ in range(e):
        out = quantum_product(out, c)
    return out


# -- Gromov-Witten invariants ---------------------------------------------------

@dataclass(frozen=True)
class GWQuery:
    """``<Omega_{w_1}, ..., Omega_{w_N}>_d``."""

    flag: FlagType
    classes: tuple[Perm, ...]
    d: QDeg

    def __post_init__(self):
        if len(self.classes) < 2:
            raise FlagError("a Gromov-Witten query needs at least two classes")
        if len(self.d) != self.flag.k or any(e < 0 for e in self.d):
            raise FlagError(f"degree {self.d} must have {self.flag.k} nonnegative entries")
        for w in self.classes:
            if not in_S(self.flag.check_perm(w), self.flag):
                raise FlagError(f"{w} is not in S for flag {self.flag}")

    def expected_dimension_ok(self) -> bool:
        deg_q = sum(e * g for e, g in zip(self.d, self.flag.q_degrees))
        return sum(length(w) for w in self.classes) == self.flag.dim + deg_q


def gw_invariant(query: GWQuery) -> int:
    """Coefficient of ``q^d [Omega_{dual(w_N)}]`` in ``[Omega_{w_1}] * ... * [Omega_{w_{N-1}}]``."""
    if not query.expected_dimension_ok():
        return 0
    flag = query.flag
    prod = QCohClass.basis(query.classes[0], flag)
    for w in query.classes[1:-1]:
        prod = quantum_product(prod, QCohClass.basis(w, flag))
    return prod.coeff(dual(query.classes[-1], flag), query.d)


# -- quantum Giambelli polynomials ----------------------------------------------

@lru_cache(maxsize=None)
def G_lambda_q(lam: LambdaIndex, flag: FlagType) -> Poly:
    """``G_Lambda``: the product of ``G_v^j`` over the factors of ``Lambda``."""
    out = Poly.const(1)
    for v, j in lambda_factors(check_lambda(lam, flag)):
        out = out * Gq_special(v, j, flag)
    return out


@lru_cache(maxsize=None)
def quantum_giambelli_poly(w: Perm, flag: FlagType) -> Poly:
    """``P_w^q = sum_Lambda a_Lambda(w) G_Lambda``."""
    w = flag.check_perm(w)
    if not in_S(w, flag):
        raise FlagError(f"{w} is not in S for flag {flag}")
    out = Poly()
    for lam, a in a_lambda_table(flag).a(w).items():
        out = out + G_lambda_q(lam, flag) * a
    return out


def expand_in_GLambda(c: QCohClass) -> dict[LambdaIndex, Poly]:
    """Coefficients ``coeff_Lambda(q)`` with ``c = sum_Lambda coeff_Lambda(q) G_Lambda``.

    Peels off terms by increasing weighted q-degree: at q = 0 the change of
    basis is the classical unimodular table, and every correction term of
    ``G_Lambda`` carries strictly positive q-degree.
    """
    flag = c.flag
    table = a_lambda_table(flag)
    out: dict[LambdaIndex, dict[QDeg, int]] = {}
    residual = c
    # each round clears at least one q-exponent; the total number is bounded
    budget = 1 + len(residual.terms) * (1 + flag.dim) ** max(1, flag.k) * 4 + 10_000
    while residual:
        budget -= 1
        if budget < 0:
            raise AssertionError("expansion in G_Lambda did not terminate")
        low = min(residual.q_degree(d) for d, _ in residual.terms)
        layer = {d for d, _ in residual.terms if residual.q_degree(d) == low}
        correction = QCohClass(flag)
        for d in sorted(layer):
            coeffs: dict[LambdaIndex, int] = {}
            for (e, w), v in residual.terms.items():
                if e == d:
                    for lam, a in table.a(w).items():
                        coeffs[lam] = coeffs.get(lam, 0) + v * a
            for lam, v in coeffs.items():
                if v:
                    slot = out.setdefault(lam, {})
                    slot[d] = slot.get(d, 0) + v
                    correction = correction + class_of_G_lambda(lam, flag).shift(d) * v
        residual = residual - correction
        if any(residual.q_degree(d) <= low for d, _ in residual.terms if d in layer):
            raise AssertionError("degree layer did not clear in G_Lambda expansion")
    result = {}
    for lam, by_d in out.items():
        p = Poly()
        for d, v in by_d.items():
            p = p + q_monomial(d) * v
        if p:
            result[lam] = p
    return result


# -- evaluating sigma/q polynomials as classes ------------------------------------

@lru_cache(maxsize=None)
def sigma_class(r: int, j: int, flag: FlagType) -> QCohClass:
    """Class of ``sigma_r^j``, the r-th Chern class of the j-th kernel bundle.

    ``sigma_r^j = sum_p (-1)^p f_p^{j-1} g_{r-p}^j``, and ``f``/``g`` are the
    beta/alpha special classes; for ``j = k+1`` only ``p = r`` survives.
    """
    if not 1 <= j <= flag.k + 1:
        raise FlagError(f"sigma_r^j needs 1 <= j <= k+1, got j = {j}")
    if r == 0:
        return QCohClass.one(flag)
    if not 1 <= r <= flag.block_size(j):
        return QCohClass(flag)
    total = CohClass(flag)
    for p in range(r + 1):
        left = special_class("beta", p, j - 1, flag)
        if j == flag.k + 1:
            right = CohClass.one(flag) if p == r else CohClass(flag)
        else:
            right = special_class("alpha", r - p, j, flag)
        total = total + classical_product(left, right) * (-1) ** p
    return QCohClass.from_classical(total)


def evaluate_poly(p: Poly, flag: FlagType) -> QCohClass:
    """Image of a polynomial in ``sigma`` and ``q`` in ``QH^*(F)``."""
    if any(v[0] == 0 for v in p.variables()):
        raise ValueError("evaluate_poly takes polynomials in sigma and q only")
    cache: dict[tuple, QCohClass] = {(): QCohClass.one(flag)}

    def mono_class(sig: tuple) -> QCohClass:
        hit = cache.get(sig)
        if hit is None:
            head, rest = sig[0], sig[1:]
            hit = quantum_product(sigma_class(head[1], head[0], flag), mono_class(rest))
            cache[sig] = hit
        return hit

    out: dict = {}
    for mono, c in p.terms.items():
        d = [0] * flag.k
        sig = []
        for (fam, a, b), e in mono:
            if fam == 2:
                if not 1 <= a <= flag.k:
                    raise FlagError(f"q_{a} out of range for flag {flag}")
                d[a - 1] += e
            else:
                sig.extend([(a, b)] * e)
        _add_shifted(out, mono_class(tuple(sorted(sig))), tuple(d), c)
    return QCohClass(flag, out)


def _as_class(p, flag: FlagType | None) -> QCohClass:
    if isinstance(p, QCohClass):
        return p
    if isinstance(p, CohClass):
        return QCohClass.from_classical(p)
    if isinstance(p, Poly):
        if flag is None:
            raise ValueError("a flag is needed to evaluate a polynomial")
        return evaluate_poly(p, flag)
    raise TypeError(f"cannot pair {type(p).__name__}")


def qpairing(u, v, flag: FlagType | None = None) -> Poly:
    """``<<u v>>``: the ``G_{Lambda°}`` coefficient of ``u * v``.

    ``u`` and ``v`` are classes or polynomials in ``sigma, q`` (then ``flag``
    is required unless the other argument carries it).
    """
    flag = flag or next((c.flag for c in (u, v) if isinstance(c, (QCohClass, CohClass))), None)
    a, b = _as_class(u, flag), _as_class(v, flag)
    prod = quantum_product(a, b)
    return expand_in_GLambda(prod).get(lambda_circ(prod.flag), Poly())


def structure_constant(u: Perm, v: Perm, w: Perm, d: QDeg, flag: FlagType) -> int:
    """Coefficient of ``q^d [Omega_w]`` in ``[Omega_u] * [Omega_v]``."""
    return quantum_basis_product(tuple(u), tuple(v), flag).coeff(w, d)
