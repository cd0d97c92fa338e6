"""Rank-2 Picard lattice arithmetic and exact Diophantine class solving.

A lattice is the Gram matrix [[h2, hc], [hc, c2]] in the basis
(hyperplane H, special curve C).  Both h2 and c2 are even and the
determinant is negative, so for any fixed value of D.H the classes
with a prescribed self-intersection form a finite set which can be
solved exactly: parametrize the line h2*a + hc*b = dh by the extended
gcd, substitute into the quadratic form, and test the discriminant of
the resulting one-variable quadratic for a perfect square.  Its leading
coefficient is 4*det/gcd^2 < 0, so no search bound is ever needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class PicardLattice:
    h2: int
    hc: int
    c2: int

    def __post_init__(self) -> None:
        if self.h2 % 2 or self.c2 % 2:
            raise ValueError("h2 and c2 must be even (even lattice)")
        if self.det >= 0:
            raise ValueError(
                f"determinant {self.det} must be negative (signature (1,1))"
            )

    @property
    def det(self) -> int:
        return self.h2 * self.c2 - self.hc * self.hc

    def to_json(self) -> dict:
        return {"h2": self.h2, "hc": self.hc, "c2": self.c2}


@dataclass(frozen=True, order=True)
class DivisorClass:
    a: int
    b: int

    def to_json(self) -> list[int]:
        return [self.a, self.b]

    def __repr__(self) -> str:
        return f"({self.a}, {self.b})"


H = DivisorClass(1, 0)


def quartic_lattice(d_i: int, g_i: int) -> PicardLattice:
    """The lattice of a quartic with a degree-d_i genus-g_i generator curve."""
    return PicardLattice(4, d_i, 2 * g_i - 2)


def dot(l: PicardLattice, x: DivisorClass, y: DivisorClass) -> int:
    """Bilinear extension of the Gram matrix."""
    return (
        l.h2 * x.a * y.a + l.hc * (x.a * y.b + x.b * y.a) + l.c2 * x.b * y.b
    )


def adjunction_genus(l: PicardLattice, x: DivisorClass) -> int:
    """Genus of a curve class on a smooth quartic: D^2/2 + 1."""
    return dot(l, x, x) // 2 + 1


def _ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    if y == 0:
        return (x, 1, 0) if x >= 0 else (-x, -1, 0)
    g, u, v = _ext_gcd(y, x % y)
    return g, v, u - (x // y) * v


def solve_classes(
    l: PicardLattice, self_int: int, dh_min: int, dh_max: int
) -> set[DivisorClass]:
    """All integer classes x with x.x = self_int and dh_min <= x.H <= dh_max."""
    if dh_min > dh_max:
        raise ValueError("empty degree range")
    g, u, _v = _ext_gcd(l.h2, l.hc)
    # direction vector of the solution line of h2*a + hc*b = dh
    da, db = l.hc // g, -l.h2 // g
    q2 = dot(l, DivisorClass(da, db), DivisorClass(da, db))  # = 4*det/g^2 < 0
    solutions: set[DivisorClass] = set()
    for dh in range(dh_min, dh_max + 1):
        if dh % g:
            continue
        a0 = u * (dh // g)
        b0 = (dh - l.h2 * a0) // l.hc if l.hc else 0
        base = DivisorClass(a0, b0)
        q1 = 2 * (
            l.h2 * a0 * da + l.hc * (a0 * db + b0 * da) + l.c2 * b0 * db
        )
        q0 = dot(l, base, base) - self_int
        disc = q1 * q1 - 4 * q2 * q0
        if disc < 0:
            continue
        root = math.isqrt(disc)
        if root * root != disc:
            continue
        for num in (-q1 + root, -q1 - root):
            if num % (2 * q2) == 0:
                s = num // (2 * q2)
                solutions.add(DivisorClass(a0 + s * da, b0 + s * db))
    return solutions


@dataclass(frozen=True)
class WatanabeCase:
    """One numerical case of the rigid-class search on a quartic."""

    label: str
    self_int: int
    dh_min: int
    dh_max: int
    classes: frozenset[DivisorClass]
    side_condition: str | None = None

    def to_json(self) -> dict:
        doc = {
            "label": self.label,
            "self_int": self.self_int,
            "dh": [self.dh_min, self.dh_max],
            "classes": [c.to_json() for c in sorted(self.classes)],
        }
        if self.side_condition:
            doc["side_condition"] = self.side_condition
        return doc


_WATANABE_PARAMS = (
    ("D2=-2, 1<=D.H<=3", -2, 1, 3, None),
    ("D2=0, 3<=D.H<=4", 0, 3, 4, None),
    ("D2=2, D.H=5", 2, 5, 5, None),
    ("D2=4, D.H=6", 4, 6, 6, "requires |D-H| and |2H-D| empty"),
)


def watanabe_candidates(l: PicardLattice) -> list[WatanabeCase]:
    """The four numerical case families for rigid ACM classes.

    The last case carries a linear-system side condition that is not
    decidable from the lattice; callers supply that as exclusion data.
    """
    return [
        WatanabeCase(
            label, self_int, lo, hi,
            frozenset(solve_classes(l, self_int, lo, hi)), side
        )
        for label, self_int, lo, hi, side in _WATANABE_PARAMS
    ]


def plane_curve_classes(l: PicardLattice, dh_max: int) -> set[DivisorClass]:
    """Classes whose adjunction genus matches a plane curve of their degree.

    A plane curve of degree e has genus (e-1)(e-2)/2; on the lattice the
    genus is D^2/2 + 1, so for each degree e up to dh_max this solves
    D^2 = (e-1)(e-2) - 2 on the slice D.H = e.
    """
    if dh_max < 1:
        raise ValueError("dh_max must be at least 1")
    found: set[DivisorClass] = set()
    for e in range(1, dh_max + 1):
        found |= solve_classes(l, (e - 1) * (e - 2) - 2, e, e)
    return found
