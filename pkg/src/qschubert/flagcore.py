"""Flag types and type-A permutation combinatorics.

Permutations are plain tuples in one-line notation with 1-indexed values,
``w = (w(1), ..., w(n))``.  Products follow ``(u*v)(i) = u(v(i))``, so
right-multiplying by a transposition ``t_ab`` swaps the entries of ``w`` in
positions ``a`` and ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from math import comb, factorial, prod
from typing import Iterator, Sequence

Perm = tuple[int, ...]


class FlagError(ValueError):
    """Malformed flag type, permutation, or out-of-range parameter."""


@dataclass(frozen=True, order=True)
class FlagType:
    """Ranks ``0 < n_1 < ... < n_k < n`` of a partial flag of quotients."""

    n: int
    ranks: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))
        if self.n < 1:
            raise FlagError(f"ambient dimension must be positive, got {self.n}")
        prev = 0
        for r in self.ranks:
            if r <= prev:
                raise FlagError(f"ranks must be strictly increasing and positive: {self.ranks}")
            prev = r
        if self.ranks and self.ranks[-1] >= self.n:
            raise FlagError(f"largest rank {self.ranks[-1]} must be < n = {self.n}")

    @classmethod
    def parse(cls, text: str) -> "FlagType":
        """Parse ``"n1,n2,...,nk;n"``, e.g. ``"1,2;3"``."""
        try:
            head, tail = text.split(";")
            ranks = tuple(int(t) for t in head.split(",") if t.strip())
            return cls(int(tail), ranks)
        except FlagError:
            raise
        except ValueError as exc:
            raise FlagError(f"cannot parse flag type {text!r}") from exc

    def __str__(self) -> str:
        return ",".join(map(str, self.ranks)) + f";{self.n}"

    @property
    def k(self) -> int:
        return len(self.ranks)

    @cached_property
    def bounds(self) -> tuple[int, ...]:
        """``(n_0, n_1, ..., n_k, n_{k+1}) = (0, ranks..., n)``."""
        return (0, *self.ranks, self.n)

    def block(self, j: int) -> range:
        """Positions ``n_{j-1}+1 .. n_j`` of block ``j`` (``1 <= j <= k+1``)."""
        b = self.bounds
        return range(b[j - 1] + 1, b[j] + 1)

    def block_size(self, j: int) -> int:
        b = self.bounds
        return b[j] - b[j - 1]

    @cached_property
    def dim(self) -> int:
        b, n = self.bounds, self.n
        return sum((n - b[j]) * (b[j] - b[j - 1]) for j in range(1, self.k + 1))

    def q_degree(self, j: int) -> int:
        """Weighted degree ``n_{j+1} - n_{j-1}`` of ``q_j``."""
        if not 1 <= j <= self.k:
            raise FlagError(f"q_{j} does not exist for flag {self}")
        b = self.bounds
        return b[j + 1] - b[j - 1]

    @cached_property
    def q_degrees(self) -> tuple[int, ...]:
        return tuple(self.q_degree(j) for j in range(1, self.k + 1))

    @cached_property
    def coset_size(self) -> int:
        """Multinomial ``n! / prod (n_j - n_{j-1})!``."""
        return factorial(self.n) // prod(
            factorial(self.block_size(j)) for j in range(1, self.k + 2))

    def check_perm(self, w: Sequence[int]) -> Perm:
        w = check_perm(w)
        if len(w) != self.n:
            raise FlagError(f"permutation {w} has size {len(w)}, flag needs {self.n}")
        return w


def complete_flag(n: int) -> FlagType:
    return FlagType(n, tuple(range(1, n)))


def flags_of_size(n: int) -> list[FlagType]:
    """Every flag type with ambient dimension ``n`` and at least one rank."""
    return [FlagType(n, ranks) for k in range(1, n) for ranks in combinations(range(1, n), k)]


def flags_with_coset_size_at_most(bound: int) -> list[FlagType]:
    """All flag types with ``card(S) <= bound``, grown one block at a time.

    The multinomial only increases when a block is appended, so a branch
    stops as soon as it passes the bound.
    """
    out: list[FlagType] = []

    def grow(parts: tuple[int, ...], total: int, card: int) -> None:
        if len(parts) >= 2:
            out.append(FlagType(total, tuple(sum(parts[:i]) for i in range(1, len(parts)))))
        a = 1
        while total + a <= bound and card * comb(total + a, a) <= bound:
            grow(parts + (a,), total + a, card * comb(total + a, a))
            a += 1

    grow((), 0, 1)
    return sorted(out, key=lambda f: (f.n, f.ranks))


# -- permutations ---------------------------------------------------------

def check_perm(w: Sequence[int]) -> Perm:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise FlagError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def parse_perm(text: str) -> Perm:
    """Parse comma-separated one-line notation, e.g. ``"2,1,3"``."""
    try:
        return check_perm(int(t) for t in text.split(","))
    except ValueError as exc:
        if isinstance(exc, FlagError):
            raise
        raise FlagError(f"cannot parse permutation {text!r}") from exc


def format_perm(w: Perm) -> str:
    return ",".join(map(str, w))


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def length(w: Sequence[int]) -> int:
    """Number of inversions ``a < b`` with ``w(a) > w(b)``."""
    return _length(tuple(w))


@lru_cache(maxsize=1 << 18)
def _length(w: Perm) -> int:
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def rank_fn(w: Perm, q: int, p: int) -> int:
    """``card{i <= q : w(i) <= p}``."""
    n = len(w)
    if not (1 <= q <= n and 1 <= p <= n):
        raise FlagError(f"rank function indices out of range: q={q}, p={p}, n={n}")
    return sum(1 for x in w[:q] if x <= p)


def multiply(u: Perm, v: Perm) -> Perm:
    """``(u*v)(i) = u(v(i))``."""
    return tuple(u[x - 1] for x in v)


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, x in enumerate(w, 1):
        inv[x - 1] = i
    return tuple(inv)


def swap(w: Perm, a: int, b: int) -> Perm:
    """``w * t_ab``: exchange the entries in positions ``a`` and ``b``."""
    lst = list(w)
    lst[a - 1], lst[b - 1] = lst[b - 1], lst[a - 1]
    return tuple(lst)


def simple_product(indices: Sequence[int], n: int) -> Perm:
    """``s_{i_1} * s_{i_2} * ...`` as a permutation of size ``n``."""
    w = list(range(1, n + 1))
    for m in indices:
        if not 1 <= m < n:
            raise FlagError(f"simple transposition s_{m} undefined in S_{n}")
        w[m - 1], w[m] = w[m], w[m - 1]
    return tuple(w)


def descents(w: Perm) -> list[int]:
    return [q for q in range(1, len(w)) if w[q - 1] > w[q]]


def in_S(w: Sequence[int], flag: FlagType) -> bool:
    """True iff every descent of ``w`` lies in ``{n_1, ..., n_k}``."""
    w = flag.check_perm(w)
    allowed = set(flag.ranks)
    return all(q in allowed for q in descents(w))


def _in_S_unchecked(w: Perm, ranks: frozenset) -> bool:
    return all(w[q - 1] < w[q] or q in ranks for q in range(1, len(w)))


@lru_cache(maxsize=None)
def coset_elements(flag: FlagType) -> tuple[Perm, ...]:
    """All of ``S(n_1, ..., n_k)``, sorted by length then lexicographically."""
    sizes = [flag.block_size(j) for j in range(1, flag.k + 2)]
    out: list[Perm] = []

    def rec(remaining: tuple[int, ...], blk: int, acc: tuple[int, ...]):
        if blk == len(sizes):
            out.append(acc)
            return
        for chosen in combinations(remaining, sizes[blk]):
            rest = tuple(x for x in remaining if x not in chosen)
            rec(rest, blk + 1, acc + chosen)

    rec(tuple(range(1, flag.n + 1)), 0, ())
    return tuple(sorted(out, key=lambda w: (length(w), w)))


def iter_S(flag: FlagType) -> Iterator[Perm]:
    return iter(coset_elements(flag))


@lru_cache(maxsize=None)
def longest_element(flag: FlagType) -> Perm:
    """``w(i) = n - n_j + i - n_{j-1}`` for ``n_{j-1} < i <= n_j``."""
    b, n = flag.bounds, flag.n
    return tuple(n - b[j] + i - b[j - 1]
                 for j in range(1, flag.k + 2) for i in flag.block(j))


def special_cycle(kind: str, i: int, j: int, flag: FlagType) -> Perm:
    """The cyclic permutations indexing special classes and quantum corrections.

    ``alpha(i, j) = s_{n_j-i+1} ... s_{n_j}``, ``beta(i, j) = s_{n_j+i-1} ... s_{n_j}``,
    ``gamma(h, l) = s_{n_h} ... s_{n_{l+1}-1}``, ``delta(h, l) = s_{n_l-1} ... s_{n_{h-1}+1}``.
    For gamma and delta the pair ``(i, j)`` is read as ``(h, l)``.
    """
    b, n, k = flag.bounds, flag.n, flag.k
    if kind == "alpha":
        if not (1 <= j <= k and 1 <= i <= b[j]):
            raise FlagError(f"alpha_{{{i},{j}}} out of range for flag {flag}")
        word = range(b[j] - i + 1, b[j] + 1)
    elif kind == "beta":
        if not (1 <= j <= k and 1 <= i <= n - b[j]):
            raise FlagError(f"beta_{{{i},{j}}} out of range for flag {flag}")
        word = range(b[j] + i - 1, b[j] - 1, -1)
    elif kind == "gamma":
        h, l = i, j
        if not 1 <= h <= l <= k:
            raise FlagError(f"gamma_{{{h},{l}}} out of range for flag {flag}")
        word = range(b[h], b[l + 1])
    elif kind == "delta":
        h, l = i, j
        if not 1 <= h <= l <= k:
            raise FlagError(f"delta_{{{h},{l}}} out of range for flag {flag}")
        word = range(b[l] - 1, b[h - 1], -1)
    else:
        raise FlagError(f"unknown cycle kind {kind!r}")
    return simple_product(word, n)


def alpha(i: int, j: int, flag: FlagType) -> Perm:
    return special_cycle("alpha", i, j, flag)


def beta(i: int, j: int, flag: FlagType) -> Perm:
    return special_cycle("beta", i, j, flag)


def dual_by_sorting(w: Perm, flag: FlagType) -> Perm:
    """Closed-form dual: reverse values, then sort each block increasingly.

    Only a shortcut; :func:`qschubert.classical.dual` defines duality through
    the intersection pairing, and the test-suite checks the two agree.
    """
    if not in_S(w, flag):
        raise FlagError(f"{w} is not a minimal coset representative for {flag}")
    n = flag.n
    rev = [n + 1 - x for x in w]
    out: list[int] = []
    for j in range(1, flag.k + 2):
        blk = flag.block(j)
        out.extend(sorted(rev[blk.start - 1:blk.stop - 1]))
    return tuple(out)
