"""Exact lattices (over Z) and subspaces (over Q) in coordinate space.

Bases are kept in row echelon normal form: Hermite normal form over Z
(positive pivots, entries above a pivot reduced modulo it) and reduced row
echelon form over Q. Two spans are equal iff their normal forms agree.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors


def _pivot(row):
    for k, c in enumerate(row):
        if c:
            return k
    return None


def hermite_rows(rows, ncols: int) -> list[list[int]]:
    """Row-style Hermite normal form of the integer span of ``rows``."""
    A = [list(r) for r in rows if any(r)]
    top = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(top, len(A)) if A[i][col]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][col]))
            A[top], A[p] = A[p], A[top]
            piv = A[top]
            clean = True
            for i in range(top + 1, len(A)):
                c = A[i][col]
                if c:
                    q = c // piv[col]
                    if q:
                        A[i] = [a - q * b for a, b in zip(A[i], piv)]
                    if A[i][col]:
                        clean = False
            if clean:
                break
        if top < len(A) and A[top][col]:
            if A[top][col] < 0:
                A[top] = [-a for a in A[top]]
            piv = A[top]
            for i in range(top):
                q = A[i][col] // piv[col]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], piv)]
            top += 1
            A = A[:top] + [r for r in A[top:] if any(r)]
    return A[:top]


def rref_rows(rows, ncols: int) -> list[list[Fraction]]:
    """Reduced row echelon basis of the rational span of ``rows``."""
    A = [[Fraction(c) for c in r] for r in rows if any(r)]
    top = 0
    for col in range(ncols):
        p = next((i for i in range(top, len(A)) if A[i][col]), None)
        if p is None:
            continue
        A[top], A[p] = A[p], A[top]
        inv = 1 / A[top][col]
        A[top] = [c * inv for c in A[top]]
        for i in range(len(A)):
            if i != top and A[i][col]:
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[top])]
        top += 1
    return A[:top]


class Lattice:
    """Span of integer (``ring="ZZ"``) or rational (``ring="QQ"``) row vectors."""

    def __init__(self, rows, ncols: int, ring: str = "ZZ"):
        if ring not in ("ZZ", "QQ"):
            raise ValueError(f"unknown ring {ring!r}")
        self.ncols = ncols
        self.ring = ring
        rows = [list(r) for r in rows]
        if ring == "ZZ":
            if any(not isinstance(c, int) for r in rows for c in r):
                raise TypeError("integer lattice needs integer entries")
            self.basis = hermite_rows(rows, ncols)
        else:
            self.basis = rref_rows(rows, ncols)

    @classmethod
    def coordinate(cls, indices, ncols: int, ring: str = "ZZ") -> Lattice:
        rows = []
        for k in indices:
            r = [0] * ncols
            r[k] = 1
            rows.append(r)
        return cls(rows, ncols, ring)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.ncols == other.ncols and self.basis == other.basis

    def __hash__(self):
        return hash((self.ncols, tuple(map(tuple, self.basis))))

    def __repr__(self):
        return f"Lattice(rank={self.rank}, ncols={self.ncols}, ring={self.ring})"

    def coordinates(self, vec):
        """Coefficients of ``vec`` in :attr:`basis`, or ``None`` if outside the span."""
        vec = list(vec)
        coeffs = []
        for row in self.basis:
            p = _pivot(row)
            if any(vec[:p]):
                return None
            c = vec[p]
            if self.ring == "ZZ":
                if c % row[p]:
                    return None
                q = c // row[p]
            else:
                q = Fraction(c) / row[p]
            coeffs.append(q)
            if q:
                vec = [a - q * b for a, b in zip(vec, row)]
        if any(vec):
            return None
        return coeffs

    def contains(self, vec) -> bool:
        return self.coordinates(vec) is not None

    def contains_lattice(self, other: Lattice) -> bool:
        return all(self.contains(r) for r in other.basis)

    def quotient(self, sub: Lattice) -> tuple[int, list[int]]:
        """Structure of ``self / sub`` as ``(free rank, torsion invariant factors > 1)``.

        Over Q the torsion list is always empty.
        """
        if not self.contains_lattice(sub):
            raise ValueError("sublattice is not contained in the lattice")
        if self.ring == "QQ":
            return self.rank - sub.rank, []
        if not sub.basis:
            return self.rank, []
        X = [self.coordinates(r) for r in sub.basis]
        dm = DomainMatrix([[ZZ(int(c)) for c in row] for row in X], (len(X), self.rank), ZZ)
        inv = [int(d) for d in invariant_factors(dm)]
        nonzero = [abs(d) for d in inv if d]
        return self.rank - len(nonzero), [d for d in nonzero if d > 1]
