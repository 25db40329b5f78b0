"""Cohomology classes as finitely supported integer combinations of Schubert classes."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .flagcore import FlagType, Perm, identity, in_S, length

QDeg = tuple[int, ...]


class CohClass:
    """Element of ``H^*(F)``: ``{w: coefficient}`` with every ``w`` in ``S``."""

    __slots__ = ("flag", "terms")

    def __init__(self, flag: FlagType, terms: Mapping[Perm, int] | None = None, check: bool = False):
        self.flag = flag
        self.terms: dict[Perm, int] = {tuple(w): c for w, c in (terms or {}).items() if c}
        if check:
            for w in self.terms:
                if not in_S(w, flag):
                    raise ValueError(f"{w} is not in S for flag {flag}")

    @classmethod
    def basis(cls, w: Perm, flag: FlagType) -> "CohClass":
        return cls(flag, {tuple(w): 1}, check=True)

    @classmethod
    def one(cls, flag: FlagType) -> "CohClass":
        return cls(flag, {identity(flag.n): 1})

    def _same(self, other: "CohClass") -> None:
        if self.flag != other.flag:
            raise ValueError(f"flag mismatch: {self.flag} vs {other.flag}")

    def __add__(self, other: "CohClass") -> "CohClass":
        self._same(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return CohClass(self.flag, out)

    def __sub__(self, other: "CohClass") -> "CohClass":
        return self + other * -1

    def __mul__(self, c: int) -> "CohClass":
        if not isinstance(c, int):
            return NotImplemented
        return CohClass(self.flag, {w: v * c for w, v in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        return self.flag == other.flag and self.terms == other.terms

    def __hash__(self):
        return hash((self.flag, frozenset(self.terms.items())))

    def __iter__(self) -> Iterator[tuple[Perm, int]]:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, w: Perm) -> int:
        return self.terms.get(tuple(w), 0)

    def is_graded(self) -> bool:
        return len({length(w) for w in self.terms}) <= 1

    def __repr__(self):
        inner = ", ".join(f"{c}*{w}" for w, c in sorted(self.terms.items()))
        return f"CohClass({self.flag}: {inner or 0})"


class QCohClass:
    """Element of ``QH^*(F)``: ``{(d, w): coefficient}`` meaning ``sum c q^d [Omega_w]``."""

    __slots__ = ("flag", "terms")

    def __init__(self, flag: FlagType, terms: Mapping[tuple[QDeg, Perm], int] | None = None):
        self.flag = flag
        self.terms: dict[tuple[QDeg, Perm], int] = {
            (tuple(d), tuple(w)): c for (d, w), c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, w: Perm, flag: FlagType, d: QDeg | None = None) -> "QCohClass":
        if not in_S(w, flag):
            raise ValueError(f"{w} is not in S for flag {flag}")
        return cls(flag, {(tuple(d) if d else (0,) * flag.k, tuple(w)): 1})

    @classmethod
    def one(cls, flag: FlagType) -> "QCohClass":
        return cls(flag, {((0,) * flag.k, identity(flag.n)): 1})

    @classmethod
    def from_classical(cls, c: CohClass) -> "QCohClass":
        z = (0,) * c.flag.k
        return cls(c.flag, {(z, w): v for w, v in c.terms.items()})

    @classmethod
    def combine(cls, flag: FlagType, parts: Iterable[tuple[int, "QCohClass"]]) -> "QCohClass":
        out: dict = {}
        for c, cls_ in parts:
            for key, v in cls_.terms.items():
                out[key] = out.get(key, 0) + c * v
        return cls(flag, out)

    def _same(self, other: "QCohClass") -> None:
        if self.flag != other.flag:
            raise ValueError(f"flag mismatch: {self.flag} vs {other.flag}")

    def __add__(self, other: "QCohClass") -> "QCohClass":
        self._same(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return QCohClass(self.flag, out)

    def __sub__(self, other: "QCohClass") -> "QCohClass":
        return self + other * -1

    def __mul__(self, c: int) -> "QCohClass":
        if not isinstance(c, int):
            return NotImplemented
        return QCohClass(self.flag, {key: v * c for key, v in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def shift(self, d: QDeg) -> "QCohClass":
        """Multiply by ``q^d``."""
        return QCohClass(self.flag, {(tuple(a + b for a, b in zip(dd, d)), w): c
                                     for (dd, w), c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, QCohClass):
            return NotImplemented
        return self.flag == other.flag and self.terms == other.terms

    def __hash__(self):
        return hash((self.flag, frozenset(self.terms.items())))

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, w: Perm, d: QDeg | None = None) -> int:
        d = tuple(d) if d else (0,) * self.flag.k
        return self.terms.get((d, tuple(w)), 0)

    def q_degree(self, d: QDeg) -> int:
        return sum(e * g for e, g in zip(d, self.flag.q_degrees))

    def degrees(self) -> set[int]:
        """Total weighted degrees ``l(w) + deg q^d`` of the terms."""
        return {length(w) + self.q_degree(d) for d, w in self.terms}

    def at_q_zero(self) -> CohClass:
        z = (0,) * self.flag.k
        return CohClass(self.flag, {w: c for (d, w), c in self.terms.items() if d == z})

    def quantum_part(self) -> "QCohClass":
        z = (0,) * self.flag.k
        return QCohClass(self.flag, {key: c for key, c in self.terms.items() if key[0] != z})

    def sorted_terms(self) -> list[tuple[QDeg, Perm, int]]:
        """Terms ordered by (weighted q-degree, q exponents, permutation)."""
        keys = sorted(self.terms, key=lambda key: (self.q_degree(key[0]), key[0], key[1]))
        return [(d, w, self.terms[(d, w)]) for d, w in keys]

    def __repr__(self):
        inner = ", ".join(f"{c}*q^{list(d)}{w}" for d, w, c in self.sorted_terms())
        return f"QCohClass({self.flag}: {inner or 0})"
