"""Named exhaustive checks of the quantum identities on one flag type.

Each suite walks its whole parameter space and collects counterexamples
instead of stopping at the first one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from ..classes import CohClass, QCohClass
from ..classical import beta_alpha, classical_product, dual, special_class
from ..flagcore import FlagType, alpha, coset_elements, format_perm
from ..polyring import Poly, to_text
from ..schubert import a_lambda_table
from .matrices import Gq_special
from .pieri import quantum_pieri
from .presentation import ideal_normal_form, presentation_class, presentation_product
from .ring import (
    class_of_G_lambda, evaluate_poly, qpairing, quantum_basis_product, quantum_giambelli_poly,
    quantum_product,
)

MAX_LISTED = 20


@dataclass
class SuiteReport:
    name: str
    flag: FlagType
    checked: int = 0
    failure_count: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0 and self.checked > 0

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        self.checked += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_LISTED:
                self.failures.append(describe())

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} on ({self.flag}): {self.checked} checks, {self.failure_count} failures"


def _alpha_q(i: int, j: int, flag: FlagType) -> QCohClass:
    """``[Omega_{alpha_{i,j}}]`` with the boundary conventions; ``j = k+1`` gives 0 for ``i > 0``."""
    if j == flag.k + 1 and i > 0:
        return QCohClass(flag)
    return QCohClass.from_classical(special_class("alpha", i, j, flag))


def _beta_q(p: int, j: int, flag: FlagType) -> QCohClass:
    return QCohClass.from_classical(special_class("beta", p, j, flag))


def _q_unit(j: int, flag: FlagType) -> tuple[int, ...]:
    return tuple(1 if t == j else 0 for t in range(1, flag.k + 1))


def chern_sum_q(i: int, j: int, flag: FlagType) -> QCohClass:
    """``sum_r (sum_p (-1)^p beta_{p,j-1} * alpha_{r-p,j}) * alpha_{i-r,j-1}`` in ``QH^*``."""
    total = QCohClass(flag)
    for r in range(flag.block_size(j) + 1):
        inner = QCohClass(flag)
        for p in range(r + 1):
            inner = inner + quantum_product(_beta_q(p, j - 1, flag), _alpha_q(r - p, j, flag)) * (-1) ** p
        total = total + quantum_product(inner, _alpha_q(i - r, j - 1, flag))
    return total


def _cor3_7(flag: FlagType, rep: SuiteReport) -> None:
    b = flag.bounds
    for j in range(1, flag.k + 2):
        for i in range(1, b[j] + 1):
            lhs = chern_sum_q(i, j, flag)
            rhs = _alpha_q(i, j, flag)
            if j >= 2:
                sign = -1 if (b[j] - b[j - 1]) % 2 else 1
                rhs = rhs + _alpha_q(i - (b[j] - b[j - 2]), j - 2, flag).shift(_q_unit(j - 1, flag)) * sign
            rep.record(lhs == rhs, lambda: f"i={i}, j={j}: {lhs} != {rhs}")


def _lemma3_5(flag: FlagType, rep: SuiteReport) -> None:
    for j in range(1, flag.k + 1):
        for r in range(flag.block_size(j) + 1):
            for p in range(r + 1):
                w = beta_alpha(p, r, j, flag)
                if w is None:
                    continue
                left = special_class("beta", p, j - 1, flag)
                right = special_class("alpha", r - p, j, flag)
                expect = CohClass.basis(w, flag)
                rep.record(classical_product(left, right) == expect,
                           lambda: f"classical p={p}, r={r}, j={j}")
                got = quantum_product(left, right)
                rep.record(got == QCohClass.from_classical(expect),
                           lambda: f"quantum p={p}, r={r}, j={j}: {got}")


def _lemma3_6(flag: FlagType, rep: SuiteReport) -> None:
    b = flag.bounds
    for j in range(1, flag.k + 1):
        size = flag.block_size(j)
        for i in range(1, b[j] + 1):
            for r in range(min(size, i) + 1):
                if i - r > b[j - 1]:
                    continue
                for p in range(r + 1):
                    w = beta_alpha(p, r, j, flag)
                    if w is None:
                        continue
                    got = quantum_product(QCohClass.basis(w, flag), _alpha_q(i - r, j - 1, flag)).quantum_part()
                    expect = QCohClass(flag)
                    if j >= 2 and r == p == size and i >= b[j] - b[j - 2]:
                        expect = _alpha_q(i - (b[j] - b[j - 2]), j - 2, flag).shift(_q_unit(j - 1, flag))
                    rep.record(got == expect, lambda: f"i={i}, r={r}, p={p}, j={j}: {got} vs {expect}")


def _thm3_9(flag: FlagType, rep: SuiteReport) -> None:
    b = flag.bounds
    for j in range(0, flag.k + 2):
        for i in range(0, b[j] + 1):
            ref = Gq_special(i, j, flag, "recursion")
            for method in ("matchings", "charpoly"):
                other = Gq_special(i, j, flag, method)
                rep.record(other == ref, lambda: f"G_{i}^{j}: {method} gives {to_text(other)}, "
                                                 f"recursion {to_text(ref)}")
    for j in range(1, flag.k + 1):
        for i in range(1, b[j] + 1):
            g = Gq_special(i, j, flag)
            got = evaluate_poly(g, flag)
            want = QCohClass.basis(alpha(i, j, flag), flag)
            rep.record(got == want, lambda: f"G_{i}^{j} evaluates to {got}")
            pq = quantum_giambelli_poly(alpha(i, j, flag), flag)
            rep.record(pq == g, lambda: f"P^q of alpha_{i},{j} is {to_text(pq)}")
    for i in range(1, flag.n + 1):
        g = Gq_special(i, flag.k + 1, flag)
        got = evaluate_poly(g, flag)
        rep.record(not got, lambda: f"G_{i}^(k+1) evaluates to {got}")
        nf = ideal_normal_form(g, flag)
        rep.record(nf.is_zero(), lambda: f"normal form of G_{i}^(k+1) is {to_text(nf)}")


def _pairs(flag: FlagType) -> Iterator[tuple]:
    perms = coset_elements(flag)
    for u in perms:
        for v in perms:
            yield u, v


def _thm3_16(flag: FlagType, rep: SuiteReport) -> None:
    for u, v in _pairs(flag):
        got = qpairing(quantum_giambelli_poly(u, flag), quantum_giambelli_poly(v, flag), flag)
        want = Poly.const(1 if v == dual(u, flag) else 0)
        rep.record(got == want, lambda: f"<<P_{format_perm(u)} P_{format_perm(v)}>> = {to_text(got)}")


def _thm3_18(flag: FlagType, rep: SuiteReport) -> None:
    table = a_lambda_table(flag)
    for w in coset_elements(flag):
        want = QCohClass.basis(w, flag)
        got = QCohClass.combine(flag, ((a, class_of_G_lambda(lam, flag)) for lam, a in table.a(w).items()))
        rep.record(got == want, lambda: f"sum a_Lambda G_Lambda for {format_perm(w)} is {got}")
        ev = evaluate_poly(quantum_giambelli_poly(w, flag), flag)
        rep.record(ev == want, lambda: f"P^q_{format_perm(w)} evaluates to {ev}")
    for u, v in _pairs(flag):
        got = presentation_product(u, v, flag)
        want = quantum_basis_product(u, v, flag)
        rep.record(got == want, lambda: f"{format_perm(u)} * {format_perm(v)}: presentation {got}, Pieri {want}")


def _presentation_vs_pieri(flag: FlagType, rep: SuiteReport) -> None:
    b = flag.bounds
    for w in coset_elements(flag):
        pw = quantum_giambelli_poly(w, flag)
        for j in range(1, flag.k + 1):
            for i in range(1, b[j] + 1):
                got = presentation_class(Gq_special(i, j, flag) * pw, flag)
                want = quantum_pieri(w, i, j, flag)
                rep.record(got == want, lambda: f"alpha_{i},{j} * {format_perm(w)}: "
                                                f"presentation {got}, Pieri {want}")


SUITES: dict[str, Callable[[FlagType, SuiteReport], None]] = {
    "cor3_7": _cor3_7,
    "lemma3_5": _lemma3_5,
    "lemma3_6": _lemma3_6,
    "thm3_9": _thm3_9,
    "thm3_16": _thm3_16,
    "thm3_18": _thm3_18,
    "presentation_vs_pieri": _presentation_vs_pieri,
}


def verify_suite(name: str, flag: FlagType) -> SuiteReport:
    """Run one named suite exhaustively; unknown names raise ``KeyError``."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    rep = SuiteReport(name, flag)
    SUITES[name](flag, rep)
    return rep
