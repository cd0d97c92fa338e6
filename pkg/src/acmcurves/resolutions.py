"""Twist tables of codimension-two ACM resolutions and their invariants.

A resolution 0 -> (+) O(-b_j) -> (+) O(-a_i) -> I -> 0 is recorded by
its two twist multisets: ``gens`` (the a_i, one more of them) and
``syz`` (the b_j).  Twists are stored positive, matching the O(-a)
convention everywhere.  For curves in P^3,

    degree = (sum b^2 - sum a^2) / 2
    genus  = 1 + (sum b^3 - sum a^3) / 6 - 2 * degree.

The two constructors below realize the resolution shapes of the main
classification: keeping the surface equation among the generators
(case ii, with a free shift k) or dropping it (case iii, pivoting on
one syzygy twist).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .pairs import WeakAdmissiblePair


class InvalidTableError(ValueError):
    """A twist table with no curve behind it (bad degree or genus)."""


@dataclass(frozen=True)
class BettiTable:
    gens: tuple[int, ...]
    syz: tuple[int, ...]
    ambient_dim: int = 3

    def __post_init__(self) -> None:
        object.__setattr__(self, "gens", tuple(sorted(self.gens)))
        object.__setattr__(self, "syz", tuple(sorted(self.syz)))
        if any(x <= 0 for x in self.gens + self.syz):
            raise InvalidTableError("nonpositive twist")
        if self.ambient_dim < 3:
            raise InvalidTableError("ambient dimension must be at least 3")

    def to_json(self) -> dict:
        doc = {"gens": list(self.gens), "syz": list(self.syz)}
        if self.ambient_dim != 3:
            doc["ambient_dim"] = self.ambient_dim
        return doc


@dataclass(frozen=True)
class CurveInvariants:
    degree: int
    genus: int

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")

    def to_json(self) -> dict:
        return {"degree": self.degree, "genus": self.genus}


class ResolutionCase(enum.Enum):
    CI = "ci"
    MINIMAL_F = "ii"
    NONMINIMAL_F = "iii"


@dataclass(frozen=True)
class ResolutionFamily:
    """A table together with how it was built."""

    pair: WeakAdmissiblePair | None
    case: ResolutionCase
    surface_degree: int
    shift: int | None = None  # case ii
    pivot: int | None = None  # case iii, 1-based index into b

    def __post_init__(self) -> None:
        if self.case is ResolutionCase.NONMINIMAL_F:
            if self.pair is None or self.pivot is None:
                raise ValueError("case iii needs a pair and a pivot index")
            if not 1 <= self.pivot <= self.pair.length:
                raise ValueError("pivot index out of range")


def _square_sum(xs: Iterable[int]) -> int:
    return sum(x * x for x in xs)


def _cube_sum(xs: Iterable[int]) -> int:
    return sum(x * x * x for x in xs)


def _require_p3(t: BettiTable) -> None:
    if t.ambient_dim != 3:
        raise InvalidTableError(
            "degree/genus formulas apply to curves in P^3 only"
        )


def degree_from_betti(t: BettiTable) -> int:
    """(sum syz^2 - sum gens^2) / 2; must come out a positive integer."""
    _require_p3(t)
    twice = _square_sum(t.syz) - _square_sum(t.gens)
    if twice % 2 != 0:
        raise InvalidTableError(f"degree is not an integer: {twice}/2")
    if twice <= 0:
        raise InvalidTableError(f"degree must be positive, got {twice // 2}")
    return twice // 2


def genus_from_betti(t: BettiTable) -> int:
    """1 + (sum syz^3 - sum gens^3) / 6 - 2 * degree."""
    _require_p3(t)
    d = degree_from_betti(t)
    six = _cube_sum(t.syz) - _cube_sum(t.gens)
    if six % 6 != 0:
        raise InvalidTableError(f"genus is not an integer: 1 + {six}/6 - {2 * d}")
    return 1 + six // 6 - 2 * d


def invariants_from_betti(t: BettiTable) -> CurveInvariants:
    return CurveInvariants(degree_from_betti(t), genus_from_betti(t))


def ci_table(f: int, g: int) -> BettiTable:
    """The complete intersection of surfaces of degrees f and g."""
    if f < 1 or g < 1:
        raise ValueError("complete intersection degrees must be positive")
    return BettiTable(gens=(f, g), syz=(f + g,))


def surface_generator_table(p: WeakAdmissiblePair, k: int, d: int, ambient_dim: int = 3) -> BettiTable:
    """Resolution keeping the degree-d surface equation as a generator.

    gens = {a_i + k} + {d},  syz = {b_j + k}.  The twist-sum balance
    holds exactly because the pair has degree d.
    """
    if p.degree != d:
        raise ValueError(f"pair has degree {p.degree}, surface degree {d}")
    if p.a[0] + k <= 0:
        raise InvalidTableError(f"nonpositive twist: shift {k} is too negative")
    gens = tuple(a + k for a in p.a) + (d,)
    syz = tuple(b + k for b in p.b)
    return BettiTable(gens, syz, ambient_dim)


def pivot_syzygy_table(p: WeakAdmissiblePair, j0: int, d: int, ambient_dim: int = 3) -> BettiTable:
    """Resolution when the surface equation is not a minimal generator.

    The pivot syzygy b_{j0} (1-based index into the sorted b-sequence)
    is consumed: gens = {d - b_{j0} + a_i}, syz = {d - b_{j0} + b_i}
    for i != j0, leaving one fewer syzygy than generators.
    """
    if p.degree != d:
        raise ValueError(f"pair has degree {p.degree}, surface degree {d}")
    if not 1 <= j0 <= p.length:
        raise ValueError(f"pivot index {j0} out of range 1..{p.length}")
    shift = d - p.b[j0 - 1]
    gens = tuple(shift + a for a in p.a)
    if gens[0] <= 0:
        raise InvalidTableError(f"nonpositive twist: pivot {j0} shifts below 1")
    syz = tuple(shift + b for i, b in enumerate(p.b) if i != j0 - 1)
    return BettiTable(gens, syz, ambient_dim)


def pivot_for_value(p: WeakAdmissiblePair, b_value: int) -> int:
    """1-based index of the first syzygy twist equal to b_value."""
    return p.b.index(b_value) + 1


def is_f_minimal(p: WeakAdmissiblePair, k: int, d: int) -> bool:
    """Whether the surface equation stays a minimal generator at shift k.

    It degenerates exactly when k = d - b_j for some syzygy twist b_j.
    """
    if p.degree != d:
        raise ValueError(f"pair has degree {p.degree}, surface degree {d}")
    return all(k != d - b for b in p.b)


def validate(t: BettiTable) -> list[str]:
    """Diagnostics for a twist table; empty means valid."""
    problems = []
    if len(t.gens) != len(t.syz) + 1:
        problems.append(
            f"shape: expected one more generator than syzygies, got {len(t.gens)} vs {len(t.syz)}"
        )
    if sum(t.gens) != sum(t.syz):
        problems.append(
            f"twist sums differ: gens {sum(t.gens)} vs syz {sum(t.syz)}"
        )
    if t.ambient_dim == 3:
        try:
            degree_from_betti(t)
        except InvalidTableError as err:
            problems.append(str(err))
        else:
            try:
                genus_from_betti(t)
            except InvalidTableError as err:
                problems.append(str(err))
    return problems
