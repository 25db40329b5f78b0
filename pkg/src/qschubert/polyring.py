"""Sparse multivariate polynomials over the integers.

Variables come in three families: ``x_i`` (Chern roots), ``sigma_i^j``
(Chern classes of the successive kernels, written ``s{i}_{j}`` in text) and
``q_j`` (quantum parameters).  A variable is a tuple ``(family, a, b)`` with

* ``x_i      -> (0, i, 0)``
* ``sigma_i^j -> (1, j, i)``
* ``q_j      -> (2, j, 0)``

so plain tuple comparison gives the global order x < sigma < q.  A monomial is
a sorted tuple of ``(var, exponent)`` pairs and a :class:`Poly` maps monomials
to nonzero Python ints.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable, Mapping, Sequence

from .flagcore import FlagType

X, SIGMA, Q = 0, 1, 2

Var = tuple[int, int, int]
Monomial = tuple[tuple[Var, int], ...]

ONE_MONO: Monomial = ()


class NotSymmetricError(ValueError):
    """Raised when a polynomial is not symmetric within the requested blocks."""


def x_var(i: int) -> Var:
    return (X, i, 0)


def sigma_var(i: int, j: int) -> Var:
    return (SIGMA, j, i)


def q_var(j: int) -> Var:
    return (Q, j, 0)


def var_name(v: Var) -> str:
    fam, a, b = v
    if fam == X:
        return f"x{a}"
    if fam == SIGMA:
        return f"s{b}_{a}"
    return f"q{a}"


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_from_dict(d: Mapping[Var, int]) -> Monomial:
    return tuple(sorted((v, e) for v, e in d.items() if e))


def var_weight(v: Var, flag: FlagType | None = None) -> int:
    fam, a, b = v
    if fam == X:
        return 1
    if fam == SIGMA:
        return b
    if flag is None:
        raise ValueError("the weight of q_j depends on the flag type; pass flag=")
    return flag.q_degree(a)


def mono_weight(m: Monomial, flag: FlagType | None = None) -> int:
    return sum(e * var_weight(v, flag) for v, e in m)


class Poly:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # -- constructors ------------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({ONE_MONO: c})

    @classmethod
    def var(cls, v: Var, power: int = 1) -> "Poly":
        return cls({((v, power),) if power else ONE_MONO: 1})

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly({m: c * other for m, c in self.terms.items()}) if other else Poly()
        if not isinstance(other, Poly):
            return NotImplemented
        if len(self.terms) < len(other.terms):
            small, big = self.terms, other.terms
        else:
            small, big = other.terms, self.terms
        out: dict[Monomial, int] = {}
        for m1, c1 in small.items():
            for m2, c2 in big.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = Poly.const(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: int) -> "Poly":
        return self * c

    # -- comparisons -----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"Poly({to_text(self)!r})"

    def __str__(self):
        return to_text(self)

    # -- inspection --------------------------------------------------------------
    def variables(self) -> set[Var]:
        return {v for m in self.terms for v, _ in m}

    def families(self) -> set[int]:
        return {v[0] for v in self.variables()}

    def coeff(self, mono: Monomial) -> int:
        return self.terms.get(mono, 0)

    def constant_term(self) -> int:
        return self.terms.get(ONE_MONO, 0)

    def map_monomials(self, fn: Callable[[Monomial], "Poly"]) -> "Poly":
        """Substitute each monomial by ``fn(monomial)`` (coefficients kept)."""
        out = Poly()
        for m, c in self.terms.items():
            out = out + fn(m) * c
        return out

    def split_q(self) -> dict[tuple[tuple[int, int], ...], "Poly"]:
        """Group terms by their q-part: ``{q-monomial: coefficient poly}``."""
        out: dict[tuple, dict] = {}
        for m, c in self.terms.items():
            qpart = tuple((v, e) for v, e in m if v[0] == Q)
            rest = tuple((v, e) for v, e in m if v[0] != Q)
            out.setdefault(qpart, {})[rest] = c
        return {k: Poly(v) for k, v in out.items()}

    def set_q_zero(self) -> "Poly":
        return Poly({m: c for m, c in self.terms.items() if all(v[0] != Q for v, _ in m)})


def _coerce(other):
    if isinstance(other, Poly):
        return other
    if isinstance(other, int):
        return Poly.const(other)
    return NotImplemented


def x(i: int) -> Poly:
    return Poly.var(x_var(i))


def sigma(i: int, j: int) -> Poly:
    """``sigma_i^j``; ``sigma_0^j = 1`` by convention."""
    if i == 0:
        return Poly.const(1)
    return Poly.var(sigma_var(i, j))


def q(j: int) -> Poly:
    """``q_j``; ``q_0 = 0`` by convention."""
    if j == 0:
        return Poly()
    return Poly.var(q_var(j))


def q_monomial(d: Sequence[int]) -> Poly:
    return Poly({mono_from_dict({q_var(j): e for j, e in enumerate(d, 1)}): 1})


# -- grading ------------------------------------------------------------------

def weighted_degree(p: Poly, flag: FlagType | None = None) -> int | None:
    """Common weighted degree of all terms, or ``None`` when inhomogeneous.

    ``deg x_i = 1``, ``deg sigma_i^j = i``, ``deg q_j = n_{j+1} - n_{j-1}``.
    The zero polynomial also returns ``None``.
    """
    degs = {mono_weight(m, flag) for m in p.terms}
    if len(degs) != 1:
        return None
    return degs.pop()


# -- divided differences ----------------------------------------------------------

def divided_difference(i: int, p: Poly) -> Poly:
    """``(p - s_i p) / (x_i - x_{i+1})``; exact for polynomials in ``x``."""
    if i < 1:
        raise ValueError(f"divided difference index must be >= 1, got {i}")
    vi, vj = x_var(i), x_var(i + 1)
    out: dict[Monomial, int] = {}
    for m, c in p.terms.items():
        d = dict(m)
        if any(v[0] != X for v in d):
            raise ValueError("divided differences act on x-polynomials only")
        a, b = d.pop(vi, 0), d.pop(vj, 0)
        if a == b:
            continue
        sign = 1
        if a < b:
            a, b, sign = b, a, -1
        # x_i^a x_j^b - x_i^b x_j^a = (x_i x_j)^b (x_i^(a-b) - x_j^(a-b))
        for t in range(a - b):
            dd = dict(d)
            ea, eb = b + a - b - 1 - t, b + t
            if ea:
                dd[vi] = ea
            if eb:
                dd[vj] = eb
            mm = mono_from_dict(dd)
            out[mm] = out.get(mm, 0) + sign * c
    return Poly(out)


def swap_x(i: int, p: Poly) -> Poly:
    """Apply ``s_i`` (exchange ``x_i`` and ``x_{i+1}``)."""
    vi, vj = x_var(i), x_var(i + 1)
    ren = {vi: vj, vj: vi}
    return Poly({mono_from_dict({ren.get(v, v): e for v, e in m}): c for m, c in p.terms.items()})


# -- symmetric functions --------------------------------------------------------

@lru_cache(maxsize=None)
def elementary(r: int, indices: tuple[int, ...]) -> Poly:
    """``e_r`` in the variables ``x_i``, ``i`` in ``indices``."""
    if r < 0 or r > len(indices):
        return Poly()
    return Poly({tuple((x_var(i), 1) for i in sub): 1 for sub in combinations(indices, r)})


@lru_cache(maxsize=None)
def complete(r: int, indices: tuple[int, ...]) -> Poly:
    """``h_r`` in the variables ``x_i``, ``i`` in ``indices``."""
    if r < 0:
        return Poly()
    out: dict[Monomial, int] = {}
    for sub in combinations_with_replacement(indices, r):
        d: dict[Var, int] = {}
        for i in sub:
            d[x_var(i)] = d.get(x_var(i), 0) + 1
        out[mono_from_dict(d)] = 1
    return Poly(out)


def expand_sigma(p: Poly, flag: FlagType) -> Poly:
    """Substitute ``sigma_i^j -> e_i(x in block j)``; q-variables are kept."""
    blocks = {j: tuple(flag.block(j)) for j in range(1, flag.k + 2)}

    @lru_cache(maxsize=None)
    def image(mono: Monomial) -> Poly:
        out = Poly.const(1)
        for v, e in mono:
            if v[0] == SIGMA:
                out = out * elementary(v[2], blocks[v[1]]) ** e
            else:
                out = out * Poly.var(v, e)
        return out

    return p.map_monomials(image)


def blockwise_elementary_reduce(p: Poly, flag: FlagType) -> Poly:
    """Rewrite a block-symmetric x-polynomial in the sigma variables.

    Repeatedly takes the lexicographically largest monomial (x_1 > x_2 > ...),
    whose exponents must then be weakly decreasing inside every block, and
    subtracts the matching product of blockwise elementary polynomials.
    """
    if any(v[0] != X for v in p.variables()):
        raise ValueError("blockwise reduction expects a polynomial in x only")
    if any(v[1] > flag.n for v in p.variables()):
        raise ValueError(f"polynomial uses variables beyond x_{flag.n}")
    blocks = [tuple(flag.block(j)) for j in range(1, flag.k + 2)]
    rest = dict(p.terms)
    result: dict[Monomial, int] = {}

    def lex_key(m: Monomial):
        d = dict(m)
        return tuple(d.get(x_var(i), 0) for i in range(1, flag.n + 1))

    while rest:
        lead = max(rest, key=lex_key)
        c = rest[lead]
        expo = lex_key(lead)
        sig: dict[Var, int] = {}
        prod_x = Poly.const(1)
        for j, blk in enumerate(blocks, 1):
            ex = [expo[i - 1] for i in blk] + [0]
            for r in range(len(blk)):
                diff = ex[r] - ex[r + 1]
                if diff < 0:
                    raise NotSymmetricError(
                        f"not symmetric in block {j} (x_{blk[0]}..x_{blk[-1]}): "
                        f"leading exponents {ex[:-1]}")
                if diff:
                    sig[sigma_var(r + 1, j)] = diff
                    prod_x = prod_x * elementary(r + 1, blk) ** diff
        result[mono_from_dict(sig)] = c
        for m, cc in prod_x.terms.items():
            s = rest.get(m, 0) - c * cc
            if s:
                rest[m] = s
            else:
                rest.pop(m, None)
    return Poly(result)


# -- matrices ------------------------------------------------------------------

PolyMatrix = list[list[Poly]]


def zero_matrix(m: int) -> PolyMatrix:
    return [[Poly() for _ in range(m)] for _ in range(m)]


def submatrix(a: PolyMatrix, m: int) -> PolyMatrix:
    """Upper-left ``m x m`` block."""
    return [row[:m] for row in a[:m]]


def char_poly_coeffs(a: Sequence[Sequence]) -> list:
    """``(c_1, ..., c_m)`` with ``det(A + lambda I) = lambda^m + c_1 lambda^(m-1) + ... + c_m``.

    Berkowitz's division-free algorithm, so it works for entries in any
    commutative ring (``Poly`` or plain ints).
    """
    m = len(a)
    if any(len(row) != m for row in a):
        raise ValueError("characteristic polynomial needs a square matrix")
    if m == 0:
        return []
    zero = a[0][0] * 0
    # coefficients of det(lambda I - A_r), leading first
    vect = [zero + 1, -a[0][0]]
    for r in range(1, m):
        row = [a[r][c] for c in range(r)]
        col = [a[c][r] for c in range(r)]
        toeplitz = [zero + 1, -a[r][r]]
        cur = col
        for _ in range(r):
            toeplitz.append(-sum((row[t] * cur[t] for t in range(r)), zero))
            cur = [sum((a[s][t] * cur[t] for t in range(r)), zero) for s in range(r)]
        vect = [sum((toeplitz[s - t] * vect[t] for t in range(min(s, r) + 1)), zero)
                for s in range(r + 2)]
    # det(lambda I + A) coefficients: c_s = (-1)^s p_s
    return [vect[s] if s % 2 == 0 else -vect[s] for s in range(1, m + 1)]


# -- text form -----------------------------------------------------------------

def grlex_key(m: Monomial):
    """Graded lexicographic sort key (total exponent, then variable order)."""
    return (sum(e for _, e in m), [(tuple(-t for t in v), e) for v, e in m])


def to_text(p: Poly) -> str:
    """``"2*s1_1^2*q1 - x3 + 5"``; terms in descending graded-lex order."""
    if not p.terms:
        return "0"
    parts: list[str] = []
    for m in sorted(p.terms, key=grlex_key, reverse=True):
        c = p.terms[m]
        factors = [var_name(v) + (f"^{e}" if e > 1 else "") for v, e in m]
        mag = abs(c)
        body = "*".join(([str(mag)] if mag != 1 or not factors else []) + factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


_TOKEN = re.compile(r"^(x(\d+)|s(\d+)_(\d+)|q(\d+))(?:\^(\d+))?$")


def parse_var_power(tok: str) -> tuple[Var, int]:
    mt = _TOKEN.match(tok)
    if not mt:
        raise ValueError(f"cannot parse factor {tok!r}")
    if mt.group(2):
        v = x_var(int(mt.group(2)))
    elif mt.group(3):
        v = sigma_var(int(mt.group(3)), int(mt.group(4)))
    else:
        v = q_var(int(mt.group(5)))
    return v, int(mt.group(6) or 1)


def from_text(text: str) -> Poly:
    """Inverse of :func:`to_text`; also accepts ``+ -c*...`` spellings."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    out = Poly()
    for t in terms:
        sign = -1 if t.startswith("-") else 1
        t = t.lstrip("+-")
        coeff, d = 1, {}
        for f in t.split("*"):
            if f.isdigit():
                coeff *= int(f)
            else:
                v, e = parse_var_power(f)
                d[v] = d.get(v, 0) + e
        out = out + Poly({mono_from_dict(d): sign * coeff})
    return out


def poly_sum(items: Iterable[Poly]) -> Poly:
    out: dict[Monomial, int] = {}
    for p in items:
        for m, c in p.terms.items():
            out[m] = out.get(m, 0) + c
    return Poly(out)
