"""Quantum Pieri rule for multiplication by ``[Omega_{alpha_{i,j}}]``.

The product is the classical Pieri sum plus one block of quantum terms per
admissible collection ``h_1 < ... < h_m <= j <= l_m < ... < l_1``.  For such
a collection the permutation ``w`` is first pushed down by the gamma
cycles, then climbs ``i - m`` Pieri steps across position ``n_j - m``, and
finally is pushed down again by the delta cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from ..classes import QCohClass
from ..flagcore import FlagError, FlagType, Perm, in_S, length, multiply, special_cycle
from ..pieri import pieri_chains, pieri_targets


@dataclass(frozen=True)
class HLCollection:
    """``h`` increasing, ``l`` decreasing, ``h_m <= j <= l_m``."""

    h: tuple[int, ...]
    l: tuple[int, ...]
    i: int
    j: int
    flag: FlagType

    def __post_init__(self):
        h, l, k = self.h, self.l, self.flag.k
        m = len(h)
        if m == 0 or len(l) != m:
            raise FlagError(f"need 1 <= len(h) == len(l), got {h}, {l}")
        if list(h) != sorted(set(h)) or list(l) != sorted(set(l), reverse=True):
            raise FlagError(f"h must increase and l decrease: {h}, {l}")
        if not (1 <= h[0] and h[-1] <= self.j <= l[-1] and l[0] <= k and m <= self.i):
            raise FlagError(f"collection {h}, {l} out of range for i={self.i}, j={self.j}")

    @property
    def m(self) -> int:
        return len(self.h)

    def q_exponents(self) -> tuple[int, ...]:
        """Exponent of ``q_t`` is the number of ``c`` with ``h_c <= t <= l_c``."""
        return tuple(sum(1 for a, b in zip(self.h, self.l) if a <= t <= b)
                     for t in range(1, self.flag.k + 1))

    def q_weight(self) -> int:
        return sum(e * g for e, g in zip(self.q_exponents(), self.flag.q_degrees))

    def gamma(self) -> Perm:
        """``gamma_{h_m,l_m} ... gamma_{h_1,l_1}``."""
        out = tuple(range(1, self.flag.n + 1))
        for a, b in zip(self.h, self.l):
            out = multiply(special_cycle("gamma", a, b, self.flag), out)
        return out

    def delta(self) -> Perm:
        """``delta_{h_1,l_1} ... delta_{h_m,l_m}``."""
        out = tuple(range(1, self.flag.n + 1))
        for a, b in zip(self.h, self.l):
            out = multiply(out, special_cycle("delta", a, b, self.flag))
        return out

    def gamma_drop(self) -> int:
        """``sum_c (n_{l_c+1} - n_{h_c})``: the length lost to ``gamma``."""
        b = self.flag.bounds
        return sum(b[y + 1] - b[x] for x, y in zip(self.h, self.l))

    def delta_drop(self) -> int:
        """``sum_c (n_{l_c} - n_{h_c-1}) - m``: the length lost to ``delta``."""
        b = self.flag.bounds
        return sum(b[y] - b[x - 1] for x, y in zip(self.h, self.l)) - self.m


def _descent_condition(w: Perm, hl: HLCollection) -> bool:
    b = hl.flag.bounds
    for x, y in zip(hl.h, hl.l):
        tail = w[b[x]:b[y + 1]]
        if w[b[x] - 1] <= max(tail):
            return False
    return True


def enumerate_hl(w: Perm, i: int, j: int, flag: FlagType) -> list[HLCollection]:
    """Collections contributing a quantum term to ``alpha_{i,j} * w``.

    Tested by the descent form and by the direct length drop of ``w . gamma``;
    a disagreement raises ``AssertionError``.
    """
    w = flag.check_perm(w)
    k = flag.k
    out = []
    for m in range(1, min(i, j, k - j + 1) + 1):
        for h in combinations(range(1, j + 1), m):
            for l_up in combinations(range(j, k + 1), m):
                hl = HLCollection(h, tuple(reversed(l_up)), i, j, flag)
                by_descent = _descent_condition(w, hl)
                by_length = length(multiply(w, hl.gamma())) == length(w) - hl.gamma_drop()
                if by_descent != by_length:
                    raise AssertionError(f"descent and length tests disagree for {w}, {hl}")
                if by_descent:
                    out.append(hl)
    return out


def _check_pieri_args(i: int, j: int, flag: FlagType) -> None:
    if not 1 <= j <= flag.k:
        raise FlagError(f"j = {j} out of range for flag {flag}")
    if not 1 <= i <= flag.bounds[j]:
        raise FlagError(f"i = {i} out of range for j = {j} on flag {flag}")


@lru_cache(maxsize=None)
def quantum_pieri(w: Perm, i: int, j: int, flag: FlagType) -> QCohClass:
    """``[Omega_{alpha_{i,j}}] * [Omega_w]`` in ``QH^*(F)``."""
    w = flag.check_perm(w)
    _check_pieri_args(i, j, flag)
    if not in_S(w, flag):
        raise FlagError(f"{w} is not in S for flag {flag}")
    zero = (0,) * flag.k
    terms: dict[tuple, int] = {}
    for t in pieri_targets(w, i, j, "alpha", flag):
        terms[(zero, t)] = terms.get((zero, t), 0) + 1
    nj = flag.bounds[j]
    for hl in enumerate_hl(w, i, j, flag):
        m = hl.m
        delta = hl.delta()
        drop = hl.delta_drop()
        d = hl.q_exponents()
        for w2 in pieri_chains(multiply(w, hl.gamma()), nj - m, i - m, "a"):
            t = multiply(w2, delta)
            if length(t) != length(w2) - drop:
                continue
            if not in_S(t, flag):
                raise AssertionError(f"quantum Pieri term {t} left S ({w}, i={i}, j={j}, {hl})")
            terms[(d, t)] = terms.get((d, t), 0) + 1
    return QCohClass(flag, terms)


def qpieri_multiply(c: QCohClass, i: int, j: int) -> QCohClass:
    """``[Omega_{alpha_{i,j}}] * c`` with the same boundary conventions as the classical rule."""
    flag = c.flag
    if i < 0:
        return QCohClass(flag)
    if i == 0:
        return c
    if j == 0 or i > flag.bounds[j]:
        return QCohClass(flag)
    out: dict = {}
    for (d, w), v in c.terms.items():
        for (e, t), u in quantum_pieri(w, i, j, flag).terms.items():
            key = (tuple(a + b for a, b in zip(d, e)), t)
            out[key] = out.get(key, 0) + u * v
    return QCohClass(flag, out)
