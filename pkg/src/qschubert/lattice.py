"""Integer row echelon (Hermite-style) forms on sparse rows.

Rows are dicts ``{column: int}``.  Leading entries of the echelon basis are
kept positive; :meth:`Echelon.reduce` gives a canonical coset representative
whose pivot coordinates lie in ``[0, pivot)``.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

Row = dict[int, int]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        qt, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - qt * s1
        t0, t1 = t1, t0 - qt * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _axpy(y: Row, a: int, x: Mapping[int, int]) -> Row:
    """``y + a*x`` in place."""
    for c, v in x.items():
        s = y.get(c, 0) + a * v
        if s:
            y[c] = s
        else:
            y.pop(c, None)
    return y


def _lin(a: int, u: Mapping[int, int], b: int, v: Mapping[int, int]) -> Row:
    out: Row = {c: a * val for c, val in u.items()} if a else {}
    return _axpy(out, b, v)


class Echelon:
    """Incrementally maintained integer echelon basis of a row lattice."""

    def __init__(self, rows: Iterable[Mapping[int, int]] = (), reduced: bool = False):
        # reduced=True keeps every pivot column cleared in the other rows after
        # each insertion, which stops coefficient growth on long runs
        self.pivots: dict[int, Row] = {}
        self.reduced = reduced
        for r in rows:
            self.insert(r)

    def copy(self) -> "Echelon":
        e = Echelon(reduced=self.reduced)
        e.pivots = {c: dict(r) for c, r in self.pivots.items()}
        return e

    def _settle(self, c: int) -> None:
        piv = self.pivots[c]
        for c2 in sorted(k for k in piv if k > c and k in self.pivots):
            v = piv.get(c2)
            if v:
                qt = v // self.pivots[c2][c2]
                if qt:
                    _axpy(piv, -qt, self.pivots[c2])
        lead = piv[c]
        for c0, r in self.pivots.items():
            if c0 < c:
                v = r.get(c)
                if v:
                    qt = v // lead
                    if qt:
                        _axpy(r, -qt, piv)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def insert(self, row: Mapping[int, int]) -> bool:
        """Add ``row`` to the lattice; True if the rank grew."""
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                if row[c] < 0:
                    row = {cc: -v for cc, v in row.items()}
                self.pivots[c] = row
                if self.reduced:
                    self._settle(c)
                return True
            a, b = piv[c], row[c]
            if b % a == 0:
                row = _axpy(row, -(b // a), piv)
                continue
            g, s, t = xgcd(a, b)
            new_piv = _lin(s, piv, t, row)
            row = _lin(a // g, row, -(b // g), piv)
            self.pivots[c] = new_piv
            if self.reduced:
                self._settle(c)
        return False

    def reduce(self, vec: Mapping[int, int]) -> Row:
        """Canonical representative of ``vec`` modulo the lattice."""
        out = {c: v for c, v in vec.items() if v}
        for c in sorted(self.pivots):
            v = out.get(c)
            if v:
                piv = self.pivots[c]
                qt = v // piv[c]
                if qt:
                    _axpy(out, -qt, piv)
        return out

    def fully_reduce(self) -> None:
        """Reduce entries above every pivot into ``[0, pivot)`` (true Hermite form)."""
        cols = sorted(self.pivots)
        for idx, c in enumerate(cols):
            piv = self.pivots[c]
            for c2 in cols[:idx]:
                r = self.pivots[c2]
                v = r.get(c)
                if v:
                    qt = v // piv[c]
                    if qt:
                        _axpy(r, -qt, piv)


def unimodular_inverse(mat: Sequence[Sequence[int]]) -> list[list[int]]:
    """Exact inverse of a square integer matrix with determinant +-1.

    Fraction-free: the Hermite form of ``[M | I]`` is ``[I | M^-1]``.  Raises
    ``ValueError`` when ``M`` is singular or not unimodular.
    """
    n = len(mat)
    ech = Echelon()
    for i, row in enumerate(mat):
        if len(row) != n:
            raise ValueError("matrix is not square")
        r = {c: v for c, v in enumerate(row) if v}
        r[n + i] = 1
        ech.insert(r)
    for c in range(n):
        piv = ech.pivots.get(c)
        if piv is None or piv[c] != 1:
            raise ValueError("matrix is singular or not unimodular over the integers")
    ech.fully_reduce()
    return [[ech.pivots[c].get(n + i, 0) for i in range(n)] for c in range(n)]


def solve_in_span(basis: Sequence[Mapping[int, int]], target: Mapping[int, int],
                  relations: "Echelon | None" = None) -> list[int]:
    """Integers ``x`` with ``target = sum x_r basis_r`` modulo ``relations``.

    Raises ``ValueError`` if no integral solution exists.  The basis rows
    must be independent modulo the relation lattice for the answer to be
    unique.
    """
    ech = relations.copy() if relations is not None else Echelon()
    width = 1 + max([-1] + [c for r in basis for c in r] + list(target)
                    + [c for r in ech.pivots.values() for c in r])
    for i, b in enumerate(basis):
        row = dict(b)
        row[width + i] = 1
        ech.insert(row)
    rem = ech.reduce(target)
    if any(c < width for c in rem):
        raise ValueError("target is not an integral combination of the basis")
    return [-rem.get(width + i, 0) for i in range(len(basis))]
