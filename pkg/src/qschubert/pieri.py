"""Transposition chains behind the Pieri-type rules.

A chain from ``w`` is a sequence ``w -> w t_{a1 b1} -> w t_{a1 b1} t_{a2 b2} -> ...``
with every ``a_r <= d < b_r`` and every step raising the length by exactly
one.  For multiplication by the elementary-type special classes the ``a_r``
must be distinct; for the complete-type classes the ``b_r`` must be.
"""

from __future__ import annotations

from functools import lru_cache

from .classes import CohClass
from .flagcore import FlagError, FlagType, Perm, in_S, swap


def length_up_covers(w: Perm, d: int) -> list[tuple[int, int, Perm]]:
    """All ``(a, b, w t_ab)`` with ``a <= d < b`` and ``l(w t_ab) = l(w) + 1``.

    ``l(w t_ab) = l(w) + 1`` iff ``w(a) < w(b)`` and no position strictly
    between carries a value strictly between them.
    """
    n = len(w)
    out = []
    for b in range(d + 1, n + 1):
        wb = w[b - 1]
        floor = 0  # largest value below w(b) strictly between the current a and b
        for c in range(d, b - 1):
            if floor < w[c] < wb:
                floor = w[c]
        for a in range(d, 0, -1):
            wa = w[a - 1]
            if floor < wa < wb:
                out.append((a, b, swap(w, a, b)))
                floor = wa
    out.sort()
    return out


@lru_cache(maxsize=200_000)
def pieri_chains(w: Perm, d: int, steps: int, distinct: str = "a") -> frozenset[Perm]:
    """End points of all chains of ``steps`` covers across position ``d``.

    ``distinct`` is ``"a"`` (elementary type) or ``"b"`` (complete type).
    Depth-first with memoisation on (permutation, remaining steps, used
    endpoints); targets are deduplicated because the Pieri sums are
    multiplicity-free.
    """
    if distinct not in ("a", "b"):
        raise ValueError(f"distinct must be 'a' or 'b', got {distinct!r}")
    if steps < 0:
        return frozenset()
    if steps == 0:
        return frozenset([w])

    seen: dict[tuple[Perm, int, frozenset], frozenset[Perm]] = {}

    def rec(u: Perm, left: int, used: frozenset) -> frozenset[Perm]:
        if left == 0:
            return frozenset([u])
        key = (u, left, used)
        hit = seen.get(key)
        if hit is not None:
            return hit
        acc: set[Perm] = set()
        for a, b, v in length_up_covers(u, d):
            tag = a if distinct == "a" else b
            if tag in used:
                continue
            acc |= rec(v, left - 1, used | {tag})
        res = frozenset(acc)
        seen[key] = res
        return res

    return rec(tuple(w), steps, frozenset())


def pieri_targets(w: Perm, i: int, j: int, kind: str, flag: FlagType) -> frozenset[Perm]:
    """Targets ``w'`` of the classical Pieri rule for ``alpha_{i,j}`` or ``beta_{i,j}``."""
    w = flag.check_perm(w)
    _check_range(i, j, kind, flag)
    return _targets(w, i, j, kind, flag)


def _check_range(i: int, j: int, kind: str, flag: FlagType) -> None:
    b = flag.bounds
    if not 1 <= j <= flag.k:
        raise FlagError(f"j = {j} out of range for flag {flag}")
    if kind == "alpha":
        if not 1 <= i <= b[j]:
            raise FlagError(f"alpha_{{{i},{j}}} out of range for flag {flag}")
    elif kind == "beta":
        if not 1 <= i <= flag.n - b[j]:
            raise FlagError(f"beta_{{{i},{j}}} out of range for flag {flag}")
    else:
        raise FlagError(f"unknown Pieri kind {kind!r}")


def _targets(w: Perm, i: int, j: int, kind: str, flag: FlagType) -> frozenset[Perm]:
    return pieri_chains(w, flag.bounds[j], i, "a" if kind == "alpha" else "b")


def check_targets_in_S(targets, flag: FlagType) -> None:
    for t in targets:
        if not in_S(t, flag):
            raise AssertionError(f"Pieri target {t} left S for flag {flag}")


def pieri_multiply(c: CohClass, i: int, j: int, kind: str = "alpha") -> CohClass:
    """``[Omega_{alpha_{i,j}}] . c`` (or beta) in ``H^*(F)``, linearly extended.

    ``i = 0`` is the unit; ``j = 0`` or ``i > n_j`` give the conventions
    ``alpha_{i,0} = beta_{i,0} = 0`` for ``i > 0`` and ``alpha_{i,j} = 0`` for ``i > n_j``.
    """
    flag = c.flag
    if i < 0:
        return CohClass(flag)
    if i == 0:
        return c
    if j == 0 or (kind == "alpha" and i > flag.bounds[j]):
        return CohClass(flag)
    # validates (i, j, kind) once; terms of a class are already permutations
    _check_range(i, j, kind, flag)
    out: dict[Perm, int] = {}
    for w, v in c.terms.items():
        for t in _targets(w, i, j, kind, flag):
            out[t] = out.get(t, 0) + v
    return CohClass(flag, out)
