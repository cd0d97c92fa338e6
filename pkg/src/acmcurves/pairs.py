"""Weak admissible pairs and their degree matrices.

A weak admissible pair is two nondecreasing integer sequences
``a = (a_1, ..., a_t)`` and ``b = (b_1, ..., b_t)`` with ``t >= 2`` and
``a_i < b_i`` for every ``i``.  Its degree is ``sum(b_i - a_i)`` and two
pairs are equivalent when they differ by a common integer shift.  The
degree matrix has entries ``delta(a_i, b_j)`` where ``delta`` clamps
nonpositive differences to zero; its trace equals the degree.

Kinds abstract the degree matrix entry-wise: zero stays zero, a value
strictly between 0 and the degree is kept exactly, and anything >= the
degree collapses to a single BIG marker.  There are finitely many kinds
per degree, which is what makes the family catalogs finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

BIG = "BIG"

Cell = Union[int, str]  # 0, a value in (0, d), or BIG


class PairError(ValueError):
    """Raised when sequences do not form a weak admissible pair."""


def delta(a: int, b: int) -> int:
    """Clamped difference: b - a if positive, else 0."""
    return b - a if b > a else 0


@dataclass(frozen=True)
class WeakAdmissiblePair:
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        a, b = self.a, self.b
        if len(a) != len(b):
            raise PairError(f"sequences differ in length ({len(a)} vs {len(b)})")
        if len(a) < 2:
            raise PairError(f"length must be at least 2, got {len(a)}")
        for i in range(1, len(a)):
            if a[i] < a[i - 1]:
                raise PairError(f"a is not nondecreasing at index {i + 1}")
        for i in range(1, len(b)):
            if b[i] < b[i - 1]:
                raise PairError(f"b is not nondecreasing at index {i + 1}")
        for i, (ai, bi) in enumerate(zip(a, b)):
            if ai >= bi:
                raise PairError(f"a_i < b_i violated at index {i + 1}")

    @property
    def length(self) -> int:
        return len(self.a)

    @property
    def degree(self) -> int:
        return sum(bi - ai for ai, bi in zip(self.a, self.b))

    @property
    def sort_key(self) -> tuple:
        return (self.length, self.a, self.b)

    def shift(self, k: int) -> "WeakAdmissiblePair":
        """The equivalent pair with k added to every entry."""
        return WeakAdmissiblePair(
            tuple(x + k for x in self.a), tuple(x + k for x in self.b)
        )

    def to_json(self) -> dict:
        return {"a": list(self.a), "b": list(self.b)}

    @classmethod
    def from_json(cls, doc: dict) -> "WeakAdmissiblePair":
        return make_pair(doc["a"], doc["b"])

    def __repr__(self) -> str:
        return f"({self.a}, {self.b})"


def make_pair(a: Iterable[int], b: Iterable[int]) -> WeakAdmissiblePair:
    """Validate two integer sequences as a weak admissible pair."""
    return WeakAdmissiblePair(tuple(int(x) for x in a), tuple(int(x) for x in b))


def normalize(p: WeakAdmissiblePair) -> WeakAdmissiblePair:
    """The equivalent pair with a_1 = 0.  Idempotent."""
    return p if p.a[0] == 0 else p.shift(-p.a[0])


def equivalent(p: WeakAdmissiblePair, q: WeakAdmissiblePair) -> bool:
    """True when the pairs differ by a common integer shift."""
    return normalize(p) == normalize(q)


@dataclass(frozen=True)
class DegreeMatrix:
    degree: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        t = len(self.entries)
        if t < 2 or any(len(row) != t for row in self.entries):
            raise ValueError("entries must form a square matrix of size >= 2")
        if any(v < 0 for row in self.entries for v in row):
            raise ValueError("entries must be nonnegative")
        if self.trace != self.degree:
            raise ValueError(
                f"trace {self.trace} does not equal the declared degree {self.degree}"
            )

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(len(self.entries)))

    def to_json(self) -> dict:
        return {"degree": self.degree, "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "DegreeMatrix":
        entries = tuple(tuple(int(v) for v in row) for row in rows)
        trace = sum(entries[i][i] for i in range(len(entries)))
        return cls(trace, entries)


def _anti_transpose(grid: tuple[tuple, ...]) -> tuple[tuple, ...]:
    # entry (i, j) -> (t+1-j, t+1-i): reflection across the antidiagonal
    t = len(grid)
    return tuple(
        tuple(grid[t - 1 - j][t - 1 - i] for j in range(t)) for i in range(t)
    )


def anti_transpose(m: DegreeMatrix) -> DegreeMatrix:
    return DegreeMatrix(m.degree, _anti_transpose(m.entries))


def degree_matrix(p: WeakAdmissiblePair) -> DegreeMatrix:
    """The matrix of clamped differences delta(a_i, b_j).

    Shift-invariant, so equivalent pairs share one matrix; the diagonal
    entries are the positive gaps b_i - a_i, hence trace = degree.
    """
    entries = tuple(tuple(delta(ai, bj) for bj in p.b) for ai in p.a)
    return DegreeMatrix(p.degree, entries)


def dual_pair(p: WeakAdmissiblePair) -> WeakAdmissiblePair:
    """The normalized pair whose degree matrix is the anti-transpose.

    Built by negating and reversing both sequences (then shifting to
    a_1 = 0); an involution up to equivalence.
    """
    a = tuple(-x for x in reversed(p.b))
    b = tuple(-x for x in reversed(p.a))
    return normalize(WeakAdmissiblePair(a, b))


@dataclass(frozen=True)
class KindSignature:
    """Entry-wise abstraction of a degree matrix.

    Cells are 0, an exact value v with 0 < v < degree, or BIG for
    entries >= degree.  Two pairs are of the same kind exactly when
    their signatures are equal.
    """

    degree: int
    cells: tuple[tuple[Cell, ...], ...]

    @property
    def length(self) -> int:
        return len(self.cells)

    @property
    def sort_key(self) -> tuple:
        key = tuple(
            tuple((1, 0) if c == BIG else (0, c) for c in row) for row in self.cells
        )
        return (self.length, key)

    def anti_transpose(self) -> "KindSignature":
        return KindSignature(self.degree, _anti_transpose(self.cells))

    def zero_positions(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, j)
            for i, row in enumerate(self.cells)
            for j, c in enumerate(row)
            if c == 0
        )

    def to_json(self) -> dict:
        return {"degree": self.degree, "cells": [list(r) for r in self.cells]}

    def render(self) -> str:
        return " / ".join(
            ",".join("B" if c == BIG else str(c) for c in row) for row in self.cells
        )


def kind_signature(m: DegreeMatrix) -> KindSignature:
    d = m.degree
    cells = tuple(
        tuple(v if v < d else BIG for v in row) for row in m.entries
    )
    return KindSignature(d, cells)


def pair_signature(p: WeakAdmissiblePair) -> KindSignature:
    return kind_signature(degree_matrix(p))


def is_reducible_type(m: DegreeMatrix) -> bool:
    """True when some entry immediately below the diagonal is zero.

    A zero at (i+1, i) forces a full zero block below it, so every
    determinant realizing the matrix factors and the surface splits.
    """
    return any(m.entries[i + 1][i] == 0 for i in range(m.n - 1))
