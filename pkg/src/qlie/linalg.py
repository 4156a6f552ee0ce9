"""Fraction-free Gaussian elimination over the scalar ring.

Rows are sparse mappings column -> Scalar.  The one-step Bareiss recurrence

    new[j] = (pivot * row[j] - row[c] * pivot_row[j]) / previous_pivot

keeps every intermediate entry a polynomial (the division is exact, each
entry being a minor of the original matrix), so no rational-function
arithmetic or polynomial gcd is ever needed.  Membership of a vector in the
row span over the fraction field is decided by replaying the recorded pivot
steps against the vector and testing for zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .scalars import ONE, Scalar

Row = dict[int, Scalar]


@dataclass
class Echelon:
    """Pivot history of a fraction-free elimination, replayable on vectors."""

    ncols: int
    # per elimination step: pivot column, pivot value, eliminated pivot row
    steps: list[tuple[int, Scalar, Row]] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.steps)

    def reduce(self, row: Row) -> Row:
        """Replay the elimination against one extra row."""
        vec = dict(row)
        prev = ONE
        for col, pivot, pivot_row in self.steps:
            if not vec:
                return vec
            coeff = vec.get(col)
            new: Row = {}
            if coeff is None:
                for j, v in vec.items():
                    new[j] = (pivot * v).exact_div(prev)
            else:
                for j in set(vec) | set(pivot_row):
                    v = pivot * vec.get(j, _ZERO) - coeff * pivot_row.get(j, _ZERO)
                    if v:
                        new[j] = v.exact_div(prev)
            vec = new
            prev = pivot
        return vec

    def contains(self, row: Row) -> bool:
        """Is the row in the span of the eliminated rows (over fractions)?"""
        return not self.reduce(row)


_ZERO = Scalar.zero()


def echelon(rows: list[Row], ncols: int) -> Echelon:
    """Fraction-free row echelon form of sparse rows.

    The pivot at each step is chosen among candidates in the lowest available
    column as the entry with the fewest polynomial terms, breaking ties by
    row order, which keeps intermediate entries small and the run
    deterministic.
    """
    work = [dict(r) for r in rows if r]
    ech = Echelon(ncols=ncols)
    prev = ONE
    for col in range(ncols):
        best: Optional[int] = None
        for idx, row in enumerate(work):
            coeff = row.get(col)
            if coeff and (
                best is None or coeff.term_count() < work[best][col].term_count()
            ):
                best = idx
        if best is None:
            continue
        pivot_row = work.pop(best)
        pivot = pivot_row[col]
        remaining = []
        for row in work:
            coeff = row.get(col)
            new: Row = {}
            if coeff is None:
                for j, v in row.items():
                    new[j] = (pivot * v).exact_div(prev)
            else:
                for j in set(row) | set(pivot_row):
                    v = pivot * row.get(j, _ZERO) - coeff * pivot_row.get(j, _ZERO)
                    if v:
                        new[j] = v.exact_div(prev)
            if new:
                remaining.append(new)
        ech.steps.append((col, pivot, pivot_row))
        work = remaining
        prev = pivot
    return ech


# -- numeric specialization pre-filter --------------------------------------


NumRow = dict[int, Fraction]


def numeric_echelon(rows: list[NumRow], ncols: int) -> list[NumRow]:
    """Plain Gaussian elimination over Fraction; rows normalized to pivot 1."""
    basis: list[NumRow] = []
    for row in rows:
        vec = numeric_reduce(dict(row), basis)
        if vec:
            col = min(vec)
            inv = 1 / vec[col]
            basis.append({j: v * inv for j, v in vec.items()})
            basis.sort(key=lambda r: min(r))
    return basis

def numeric_reduce(vec: NumRow, basis: list[NumRow]) -> NumRow:
    for brow in basis:
        col = min(brow)
        coeff = vec.get(col)
        if coeff:
            for j, v in brow.items():
                acc = vec.get(j, Fraction(0)) - coeff * v
                if acc:
                    vec[j] = acc
                else:
                    vec.pop(j, None)
    return vec


def numeric_contains(vec: NumRow, basis: list[NumRow]) -> bool:
    return not numeric_reduce(dict(vec), basis)
