"""Degree/genus transfer under direct linkage in a complete intersection.

Two curves linked by surfaces of degrees s and s' satisfy

    d' = s*s' - d,        g' = g + (d' - d)(s + s' - 4) / 2,

a symmetric formula, so double linkage is the identity.  The division
is always exact: s*s' odd forces s + s' even.
"""

from __future__ import annotations

from dataclasses import dataclass

from .resolutions import CurveInvariants


class LinkageError(ValueError):
    """Linkage data with no residual curve behind it."""


@dataclass(frozen=True)
class CiProfile:
    s: int
    s_prime: int

    def __post_init__(self) -> None:
        if self.s < 1 or self.s_prime < 1:
            raise ValueError("linking surface degrees must be positive")

    @property
    def total_degree(self) -> int:
        return self.s * self.s_prime

    def to_json(self) -> dict:
        return {"s": self.s, "s_prime": self.s_prime}


def residual_invariants(c: CurveInvariants, ci: CiProfile) -> CurveInvariants:
    """Invariants of the curve residual to c in the complete intersection."""
    degree = ci.total_degree - c.degree
    if degree <= 0:
        raise LinkageError(
            f"residual degree {degree} is not positive: a degree-{c.degree} curve "
            f"does not fit in a ({ci.s},{ci.s_prime}) complete intersection"
        )
    product = (degree - c.degree) * (ci.s + ci.s_prime - 4)
    if product % 2:
        raise LinkageError("genus transfer is not an integer")
    return CurveInvariants(degree, c.genus + product // 2)


def link_is_involution_check(c: CurveInvariants, ci: CiProfile) -> bool:
    """Linking twice through the same complete intersection returns c."""
    return residual_invariants(residual_invariants(c, ci), ci) == c
