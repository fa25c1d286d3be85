"""Exact linear algebra over the rationals.

Vectors are sequences of Fraction.  Reduced row echelon form gives a
unique basis per row space, so subspaces compare by equality of their
reduced bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

_ZERO = Fraction(0)

Vector = tuple[Fraction, ...]


def _as_vector(row: Sequence) -> list[Fraction]:
    return [Fraction(v) for v in row]


def rref(rows: Iterable[Sequence]) -> tuple[Vector, ...]:
    """Reduced row echelon form; zero rows dropped, pivots normalized."""
    work = [_as_vector(r) for r in rows]
    if not work:
        return ()
    ncols = len(work[0])
    if any(len(r) != ncols for r in work):
        raise ValueError("ragged rows")
    pivot_row = 0
    for col in range(ncols):
        sel = next(
            (r for r in range(pivot_row, len(work)) if work[r][col]), None
        )
        if sel is None:
            continue
        work[pivot_row], work[sel] = work[sel], work[pivot_row]
        inv = 1 / work[pivot_row][col]
        work[pivot_row] = [v * inv for v in work[pivot_row]]
        for r in range(len(work)):
            if r != pivot_row and work[r][col]:
                factor = work[r][col]
                work[r] = [
                    v - factor * p for v, p in zip(work[r], work[pivot_row])
                ]
        pivot_row += 1
        if pivot_row == len(work):
            break
    return tuple(tuple(r) for r in work[:pivot_row] if any(r))


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows))


def nullspace(rows: Iterable[Sequence], ncols: int) -> tuple[Vector, ...]:
    """Reduced basis of the right kernel of the given row system."""
    reduced = rref(rows)
    pivots = []
    for row in reduced:
        pivots.append(next(i for i, v in enumerate(row) if v))
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [_ZERO] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return rref(basis)


def in_row_space(reduced: Sequence[Vector], vec: Sequence) -> bool:
    """Membership test against an already reduced basis."""
    residual = _as_vector(vec)
    for row in reduced:
        pivot = next(i for i, v in enumerate(row) if v)
        if residual[pivot]:
            factor = residual[pivot]
            residual = [v - factor * r for v, r in zip(residual, row)]
    return not any(residual)


@dataclass(frozen=True)
class Subspace:
    """Subspace of the level-k matrix algebra, coordinates row-major.

    The basis is stored in reduced row echelon form over the 4**level
    flattened coordinates, so equal subspaces are equal objects.
    """

    ambient_level: int
    basis: tuple[Vector, ...]

    @classmethod
    def from_vectors(
        cls, ambient_level: int, vectors: Iterable[Sequence]
    ) -> "Subspace":
        ncols = 4 ** ambient_level
        reduced = rref(vectors)
        if reduced and len(reduced[0]) != ncols:
            raise ValueError(
                f"expected vectors of length {ncols} at level {ambient_level}"
            )
        return cls(ambient_level, reduced)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vec: Sequence) -> bool:
        return in_row_space(self.basis, vec)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return self.ambient_level == other.ambient_level and all(
            other.contains(row) for row in self.basis
        )
