"""Normal forms modulo the relation ideal, by graded integer elimination.

Used as an independent oracle.  For a weighted degree ``D`` the degree-``D``
part of the ideal is spanned over the integers by ``m * G_i^{k+1}`` with
``m`` running over monomials of degree ``D - i``; these rows go into an
integer echelon basis and polynomials are reduced against it.  Nothing here
touches the Pieri rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..classes import CohClass, QCohClass
from ..flagcore import FlagType, coset_elements, length
from ..lattice import Echelon, solve_in_span
from ..polyring import Monomial, Poly, mono_mul, q_monomial, q_var, sigma_var, weighted_degree
from ..schubert import g_special, giambelli_poly
from .matrices import Gq_special
from .ring import quantum_giambelli_poly


def _variables(flag: FlagType, with_q: bool) -> list[tuple[tuple, int]]:
    """``(var, weight)`` in elimination order: last sigma block first, q's last."""
    out = []
    for j in range(flag.k + 1, 0, -1):
        for i in range(flag.block_size(j), 0, -1):
            out.append((sigma_var(i, j), i))
    if with_q:
        out.extend((q_var(j), flag.q_degree(j)) for j in range(1, flag.k + 1))
    return out


@lru_cache(maxsize=None)
def monomials_of_degree(flag: FlagType, degree: int, with_q: bool) -> tuple[Monomial, ...]:
    """All monomials of weighted degree ``degree``, largest in elimination order first."""
    vs = _variables(flag, with_q)
    out: list[tuple[tuple[int, ...], Monomial]] = []

    def rec(idx: int, left: int, exps: list[int]):
        if idx == len(vs):
            if left == 0:
                mono = tuple(sorted((vs[t][0], e) for t, e in enumerate(exps) if e))
                out.append((tuple(exps), mono))
            return
        w = vs[idx][1]
        for e in range(left // w, -1, -1):
            exps.append(e)
            rec(idx + 1, left - e * w, exps)
            exps.pop()

    if degree >= 0:
        rec(0, degree, [])
    out.sort(key=lambda t: t[0], reverse=True)
    return tuple(m for _, m in out)


@dataclass
class IdealSlice:
    """Degree-``D`` part of the relation ideal as an integer lattice."""

    flag: FlagType
    degree: int
    q_zero: bool
    columns: dict[Monomial, int]
    monomials: tuple[Monomial, ...]
    echelon: Echelon

    def vector(self, p: Poly) -> dict[int, int]:
        try:
            return {self.columns[m]: c for m, c in p.terms.items()}
        except KeyError as exc:
            raise ValueError(f"monomial {exc.args[0]} is not of degree {self.degree}") from None

    def poly(self, vec: dict[int, int]) -> Poly:
        return Poly({self.monomials[c]: v for c, v in vec.items()})


def relations(flag: FlagType, q_zero: bool = False) -> list[Poly]:
    """``G_1^{k+1}, ..., G_n^{k+1}`` (or their classical versions ``g_i^{k+1}``)."""
    j = flag.k + 1
    if q_zero:
        return [g_special(i, j, flag) for i in range(1, flag.n + 1)]
    return [Gq_special(i, j, flag) for i in range(1, flag.n + 1)]


@lru_cache(maxsize=None)
def ideal_slice(flag: FlagType, degree: int, q_zero: bool = False) -> IdealSlice:
    monos = monomials_of_degree(flag, degree, not q_zero)
    cols = {m: c for c, m in enumerate(monos)}
    ech = Echelon(reduced=True)
    for i, rel in enumerate(relations(flag, q_zero), 1):
        if i > degree:
            break
        for m in monomials_of_degree(flag, degree - i, not q_zero):
            row: dict[int, int] = {}
            for mm, c in rel.terms.items():
                col = cols[mono_mul(m, mm)]
                row[col] = row.get(col, 0) + c
            ech.insert(row)
    return IdealSlice(flag, degree, q_zero, cols, monos, ech)


def _degree_of(p: Poly, flag: FlagType) -> int:
    d = weighted_degree(p, flag)
    if d is None:
        raise ValueError("ideal_normal_form needs a nonzero weighted-homogeneous polynomial")
    return d


def ideal_normal_form(p: Poly, flag: FlagType, q_zero: bool = False) -> Poly:
    """Canonical representative of ``p`` modulo the relation ideal.

    ``q_zero=True`` first sets every ``q_j`` to zero and reduces modulo the
    classical ideal.  The zero polynomial is its own normal form.
    """
    if q_zero:
        p = p.set_q_zero()
    if not p:
        return Poly()
    sl = ideal_slice(flag, _degree_of(p, flag), q_zero)
    return sl.poly(sl.echelon.reduce(sl.vector(p)))


def same_class(p1: Poly, p2: Poly, flag: FlagType, q_zero: bool = False) -> bool:
    return ideal_normal_form(p1 - p2, flag, q_zero).is_zero()


def _q_exponents_of_weight(flag: FlagType, weight: int) -> list[tuple[int, ...]]:
    degs = flag.q_degrees
    out: list[tuple[int, ...]] = []

    def rec(idx: int, left: int, acc: tuple[int, ...]):
        if idx == len(degs):
            if left == 0:
                out.append(acc)
            return
        for e in range(left // degs[idx] + 1):
            rec(idx + 1, left - e * degs[idx], acc + (e,))

    rec(0, weight, ())
    return out


def presentation_class(p: Poly, flag: FlagType) -> QCohClass:
    """Write ``p`` modulo ``I_q`` as ``sum c q^d P_w^q`` and read off the class."""
    if not p:
        return QCohClass(flag)
    degree = _degree_of(p, flag)
    sl = ideal_slice(flag, degree, False)
    keys, rows = [], []
    for w in coset_elements(flag):
        rest = degree - length(w)
        if rest < 0:
            continue
        for d in _q_exponents_of_weight(flag, rest):
            keys.append((d, w))
            rows.append(sl.vector(quantum_giambelli_poly(w, flag) * q_monomial(d)))
    coeffs = solve_in_span(rows, sl.vector(p), relations=sl.echelon)
    return QCohClass(flag, dict(zip(keys, coeffs)))


def presentation_classical_class(p: Poly, flag: FlagType) -> CohClass:
    """Write ``p`` modulo the classical ideal as ``sum c P_w``."""
    p = p.set_q_zero()
    if not p:
        return CohClass(flag)
    degree = _degree_of(p, flag)
    sl = ideal_slice(flag, degree, True)
    perms = [w for w in coset_elements(flag) if length(w) == degree]
    rows = [sl.vector(giambelli_poly(w, flag)) for w in perms]
    coeffs = solve_in_span(rows, sl.vector(p), relations=sl.echelon)
    return CohClass(flag, dict(zip(perms, coeffs)))


def presentation_product(u, v, flag: FlagType) -> QCohClass:
    """``[Omega_u] * [Omega_v]`` computed as ``P_u^q P_v^q`` modulo ``I_q``."""
    return presentation_class(quantum_giambelli_poly(u, flag) * quantum_giambelli_poly(v, flag), flag)


def presentation_classical_product(u, v, flag: FlagType) -> CohClass:
    """``[Omega_u] . [Omega_v]`` computed as ``P_u P_v`` modulo the classical ideal."""
    return presentation_classical_class(giambelli_poly(u, flag) * giambelli_poly(v, flag), flag)
