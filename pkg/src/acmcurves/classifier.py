"""Classification of ACM curve classes on the five special quartics.

Each of the five divisor families of determinantal quartics carries a
rank-2 Picard lattice and one or two attached weak admissible pairs of
degree 4.  Classifying the ACM classes combines four mechanisms:

* RIGID classes from the four numerical rigidity cases, minus explicit
  per-divisor exclusion data (geometric facts this library does not
  derive, kept as configuration so the arithmetic stays honest);
* FAMILY_II classes, one per shift k >= 3 of an attached pair, whose
  class is solved exactly from degree and self-intersection;
* the shifts k = 0, 1, 2 of those families, which are either impossible
  (nonpositive degree or negative genus), coincide with a rigid class,
  or are RESIDUAL to a smaller curve in a complete intersection;
* COMPLETE_INTERSECTION classes d*H.

Every emitted entry carries a twist table and must pass the
lattice/resolution cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .liaison import CiProfile, residual_invariants
from .picard import (
    DivisorClass,
    H,
    PicardLattice,
    adjunction_genus,
    dot,
    quartic_lattice,
    solve_classes,
    watanabe_candidates,
)
from .resolutions import (
    BettiTable,
    CurveInvariants,
    ResolutionCase,
    ResolutionFamily,
    ci_table,
    degree_from_betti,
    genus_from_betti,
    is_f_minimal,
    pivot_for_value,
    surface_generator_table,
    pivot_syzygy_table,
)
from .pairs import WeakAdmissiblePair, make_pair

SURFACE_DEGREE = 4

RIGID = "RIGID"
FAMILY_II = "FAMILY_II"
FAMILY_III = "FAMILY_III"
RESIDUAL = "RESIDUAL"
COMPLETE_INTERSECTION = "COMPLETE_INTERSECTION"


class ClassificationError(RuntimeError):
    """A computed entry contradicts the configured classification."""


@dataclass(frozen=True)
class QuarticDivisor:
    label: str
    curve: CurveInvariants
    lattice: PicardLattice
    pairs: tuple[WeakAdmissiblePair, ...]
    exclusions: tuple[tuple[DivisorClass, str], ...]


@dataclass(frozen=True)
class ClassificationEntry:
    divisor: str
    cls: DivisorClass
    invariants: CurveInvariants
    provenance: str
    description: str
    resolution: BettiTable
    family: ResolutionFamily | None = None
    minimal: bool = True

    def to_json(self) -> dict:
        doc = {
            "divisor": self.divisor,
            "class": self.cls.to_json(),
            "degree": self.invariants.degree,
            "genus": self.invariants.genus,
            "provenance": self.provenance,
            "description": self.description,
            "resolution": self.resolution.to_json(),
            "minimal": self.minimal,
        }
        if self.family is not None and self.family.shift is not None:
            doc["k"] = self.family.shift
        if self.family is not None and self.family.pivot is not None:
            doc["pivot"] = self.family.pivot
        return doc


@dataclass(frozen=True)
class _Rigid:
    cls: DivisorClass
    description: str
    resolution: tuple[int, int]  # (pair index, pivot b-value)


@dataclass(frozen=True)
class _LowK:
    pair: int
    k: int
    action: str  # "rigid" | "residual" | "skip"
    classes: tuple[DivisorClass, ...] = ()
    partner: CurveInvariants | None = None
    ci: CiProfile | None = None
    description: str = ""
    reason: str = ""


@dataclass(frozen=True)
class _CaseIII:
    pair: int
    pivot_b: int
    classes: tuple[DivisorClass, ...]
    description: str


@dataclass(frozen=True)
class _DivisorConfig:
    divisor: QuarticDivisor
    rigid: tuple[_Rigid, ...]
    low_k: tuple[_LowK, ...]
    case_iii: tuple[_CaseIII, ...]


def _cfg() -> dict[str, _DivisorConfig]:
    c = DivisorClass
    f1 = QuarticDivisor(
        "F1", CurveInvariants(6, 3), quartic_lattice(6, 3),
        (make_pair((1, 1, 1, 1), (2, 2, 2, 2)),), (),
    )
    f2 = QuarticDivisor(
        "F2", CurveInvariants(3, 0), quartic_lattice(3, 0),
        (make_pair((1, 1, 1), (2, 2, 3)), make_pair((1, 2, 2), (3, 3, 3))), (),
    )
    f3 = QuarticDivisor(
        "F3", CurveInvariants(4, 1), quartic_lattice(4, 1),
        (make_pair((1, 1), (3, 3)),), (),
    )
    f4 = QuarticDivisor(
        "F4", CurveInvariants(1, 0), quartic_lattice(1, 0),
        (make_pair((1, 1), (2, 4)), make_pair((1, 3), (4, 4))),
        ((c(1, -1), "a degree-3 genus-0 class would be a twisted cubic, which a "
                    "very general member of the line family does not carry"),),
    )
    f5 = QuarticDivisor(
        "F5", CurveInvariants(2, 0), quartic_lattice(2, 0),
        (make_pair((1, 2), (3, 4)),), (),
    )
    return {
        "F1": _DivisorConfig(
            f1,
            rigid=(
                _Rigid(c(0, 1), "a degree-6 genus-3 ACM curve, the generator class", (0, 2)),
                _Rigid(c(3, -1), "a degree-6 genus-3 ACM curve, complementary to the generator", (0, 2)),
            ),
            low_k=(
                _LowK(0, 0, "skip", reason="degree would be -2"),
                _LowK(0, 1, "skip", reason="a union of four planes, not a curve"),
                _LowK(0, 2, "rigid", classes=(c(0, 1), c(3, -1))),
            ),
            case_iii=(),
        ),
        "F2": _DivisorConfig(
            f2,
            rigid=(
                _Rigid(c(0, 1), "a twisted cubic, the generator class", (0, 3)),
                _Rigid(c(2, -1), "a degree-5 genus-2 curve, residual to the twisted "
                                 "cubic in the intersection with a quadric", (1, 3)),
            ),
            low_k=(
                _LowK(0, 0, "skip", reason="a union of three planes, not a curve"),
                _LowK(0, 1, "rigid", classes=(c(0, 1),)),
                _LowK(0, 2, "residual", classes=(c(1, 1),),
                      partner=CurveInvariants(5, 2), ci=CiProfile(4, 3),
                      description="residual to the degree-5 genus-2 curve in the "
                                  "intersection with a cubic"),
                _LowK(1, 0, "skip", reason="degree 1 with genus -1: no such curve"),
                _LowK(1, 1, "rigid", classes=(c(2, -1),)),
                _LowK(1, 2, "residual", classes=(c(3, -1),),
                      partner=CurveInvariants(3, 0), ci=CiProfile(4, 3),
                      description="residual to the twisted cubic in the "
                                  "intersection with a cubic"),
            ),
            case_iii=(
                _CaseIII(0, 2, (c(1, 1),),
                         "quartic not among the minimal generators; same class as "
                         "the degree-7 residual curve"),
            ),
        ),
        "F3": _DivisorConfig(
            f3,
            rigid=(
                _Rigid(c(0, 1), "an elliptic quartic (intersection of two quadrics), "
                                "the generator class", (0, 3)),
                _Rigid(c(2, -1), "an elliptic quartic, complementary to the generator", (0, 3)),
            ),
            low_k=(
                _LowK(0, 0, "skip", reason="degree would be 0"),
                _LowK(0, 1, "rigid", classes=(c(0, 1), c(2, -1))),
                _LowK(0, 2, "residual", classes=(c(1, 1), c(3, -1)),
                      partner=CurveInvariants(4, 1), ci=CiProfile(4, 3),
                      description="residual to the elliptic quartic in the "
                                  "intersection with a cubic"),
            ),
            case_iii=(),
        ),
        "F4": _DivisorConfig(
            f4,
            rigid=(
                _Rigid(c(0, 1), "the line; the unique curve in its class", (0, 4)),
            ),
            low_k=(
                _LowK(0, 0, "rigid", classes=(c(0, 1),)),
                _LowK(0, 1, "residual", classes=(c(1, 1),),
                      partner=CurveInvariants(3, 1), ci=CiProfile(4, 2),
                      description="residual to a plane cubic in the intersection "
                                  "with a quadric"),
                _LowK(0, 2, "residual", classes=(c(2, 1),),
                      partner=CurveInvariants(3, 1), ci=CiProfile(4, 3),
                      description="residual to a plane cubic in the intersection "
                                  "with a cubic"),
                _LowK(1, 0, "residual", classes=(c(1, -1),),
                      partner=CurveInvariants(1, 0), ci=CiProfile(4, 1),
                      description="a plane cubic, residual to the line in a plane "
                                  "section"),
                _LowK(1, 1, "residual", classes=(c(2, -1),),
                      partner=CurveInvariants(1, 0), ci=CiProfile(4, 2),
                      description="residual to the line in the intersection with "
                                  "a quadric"),
                _LowK(1, 2, "residual", classes=(c(3, -1),),
                      partner=CurveInvariants(1, 0), ci=CiProfile(4, 3),
                      description="residual to the line in the intersection with "
                                  "a cubic"),
            ),
            case_iii=(
                _CaseIII(0, 2, (c(2, 1),),
                         "quartic not among the minimal generators; same class as "
                         "the degree-9 residual curve"),
                _CaseIII(1, 4, (c(1, -1),),
                         "quartic not among the minimal generators; the plane cubic"),
            ),
        ),
        "F5": _DivisorConfig(
            f5,
            rigid=(
                _Rigid(c(0, 1), "a conic, the generator class", (0, 4)),
                _Rigid(c(1, -1), "a conic, complementary to the generator", (0, 4)),
            ),
            low_k=(
                _LowK(0, 0, "rigid", classes=(c(0, 1), c(1, -1))),
                _LowK(0, 1, "residual", classes=(c(1, 1), c(2, -1)),
                      partner=CurveInvariants(2, 0), ci=CiProfile(4, 2),
                      description="residual to the conic in the intersection with "
                                  "a quadric"),
                _LowK(0, 2, "residual", classes=(c(2, 1), c(3, -1)),
                      partner=CurveInvariants(2, 0), ci=CiProfile(4, 3),
                      description="residual to the conic in the intersection with "
                                  "a cubic"),
            ),
            case_iii=(
                _CaseIII(0, 3, (c(1, 1), c(2, -1)),
                         "quartic not among the minimal generators; same classes "
                         "as the degree-6 residual curve"),
            ),
        ),
    }


_CONFIG = _cfg()

DIVISOR_LABELS = tuple(sorted(_CONFIG))


def known_divisors() -> list[QuarticDivisor]:
    """The five divisor families of determinantal quartics."""
    return [_CONFIG[label].divisor for label in DIVISOR_LABELS]


def divisor(label: str) -> QuarticDivisor:
    try:
        return _CONFIG[label].divisor
    except KeyError:
        raise KeyError(f"unknown divisor {label!r}; expected one of {DIVISOR_LABELS}")


def cross_check(entry: ClassificationEntry, lattice: PicardLattice) -> bool:
    """Resolution invariants must equal the lattice invariants of the class."""
    try:
        d = degree_from_betti(entry.resolution)
        g = genus_from_betti(entry.resolution)
    except ValueError:
        return False
    return d == dot(lattice, entry.cls, H) and g == adjunction_genus(lattice, entry.cls)


def _lattice_invariants(lattice: PicardLattice, cls: DivisorClass) -> CurveInvariants:
    return CurveInvariants(dot(lattice, cls, H), adjunction_genus(lattice, cls))


def _raw_table_invariants(t: BettiTable) -> tuple[int, int]:
    # unvalidated Betti sums, defined even for degenerate shifts
    twice = sum(b * b for b in t.syz) - sum(a * a for a in t.gens)
    six = sum(b ** 3 for b in t.syz) - sum(a ** 3 for a in t.gens)
    return twice // 2, 1 + six // 6 - twice


def _solved_classes(
    lattice: PicardLattice, inv: CurveInvariants
) -> set[DivisorClass]:
    return solve_classes(lattice, 2 * inv.genus - 2, inv.degree, inv.degree)


def rigid_classes(div: QuarticDivisor) -> set[DivisorClass]:
    """Numerical rigid candidates minus the divisor's exclusion data."""
    excluded = {cls for cls, _ in div.exclusions}
    found: set[DivisorClass] = set()
    for case in watanabe_candidates(div.lattice):
        found |= case.classes
    return found - excluded


def classify_quartic(div: QuarticDivisor, k_max: int = 6) -> list[ClassificationEntry]:
    """All ACM classes on a very general member, up to shift k_max."""
    if k_max < 3:
        raise ValueError("k_max must be at least 3 to reach the stable family range")
    cfg = _CONFIG[div.label]
    lattice = div.lattice
    entries: list[ClassificationEntry] = []

    computed_rigid = rigid_classes(div)
    configured_rigid = {r.cls for r in cfg.rigid}
    if computed_rigid != configured_rigid:
        raise ClassificationError(
            f"{div.label}: rigid classes {sorted(computed_rigid)} do not match "
            f"the configured set {sorted(configured_rigid)}"
        )
    for row in cfg.rigid:
        pair_idx, pivot_b = row.resolution
        pair = div.pairs[pair_idx]
        pivot = pivot_for_value(pair, pivot_b)
        table = pivot_syzygy_table(pair, pivot, SURFACE_DEGREE)
        entries.append(
            ClassificationEntry(
                div.label, row.cls, _lattice_invariants(lattice, row.cls),
                RIGID, row.description, table,
                ResolutionFamily(pair, ResolutionCase.NONMINIMAL_F, SURFACE_DEGREE, pivot=pivot),
            )
        )

    for row in cfg.low_k:
        pair = div.pairs[row.pair]
        table = surface_generator_table(pair, row.k, SURFACE_DEGREE)
        raw_d, raw_g = _raw_table_invariants(table)
        if row.action == "skip":
            if raw_d > 0 and raw_g >= 0:
                raise ClassificationError(
                    f"{div.label}: shift {row.k} marked impossible but yields "
                    f"degree {raw_d}, genus {raw_g}"
                )
            continue
        inv = CurveInvariants(raw_d, raw_g)
        solved = _solved_classes(lattice, inv)
        if solved != set(row.classes):
            raise ClassificationError(
                f"{div.label}: shift {row.k} classes {sorted(solved)} do not "
                f"match configured {sorted(row.classes)}"
            )
        if row.action == "rigid":
            if not set(row.classes) <= configured_rigid:
                raise ClassificationError(
                    f"{div.label}: shift {row.k} routed to rigid classes "
                    f"{sorted(row.classes)} not in the rigid set"
                )
            continue  # the rigid entries already cover these classes
        residual = residual_invariants(row.partner, row.ci)
        if residual != inv:
            raise ClassificationError(
                f"{div.label}: linkage gives {residual}, table gives {inv}"
            )
        for cls in row.classes:
            entries.append(
                ClassificationEntry(
                    div.label, cls, inv, RESIDUAL, row.description, table,
                    ResolutionFamily(pair, ResolutionCase.MINIMAL_F, SURFACE_DEGREE, shift=row.k),
                    minimal=is_f_minimal(pair, row.k, SURFACE_DEGREE),
                )
            )

    for pair in div.pairs:
        for k in range(3, k_max + 1):
            table = surface_generator_table(pair, k, SURFACE_DEGREE)
            inv = CurveInvariants(degree_from_betti(table), genus_from_betti(table))
            solved = _solved_classes(lattice, inv)
            if not solved:
                raise ClassificationError(
                    f"{div.label}: no integer class of degree {inv.degree}, "
                    f"genus {inv.genus} at shift {k}"
                )
            for cls in sorted(solved):
                entries.append(
                    ClassificationEntry(
                        div.label, cls, inv, FAMILY_II,
                        f"resolution family with the quartic among the minimal "
                        f"generators, shift k={k}",
                        table,
                        ResolutionFamily(pair, ResolutionCase.MINIMAL_F, SURFACE_DEGREE, shift=k),
                    )
                )

    for row in cfg.case_iii:
        pair = div.pairs[row.pair]
        pivot = pivot_for_value(pair, row.pivot_b)
        table = pivot_syzygy_table(pair, pivot, SURFACE_DEGREE)
        inv = CurveInvariants(degree_from_betti(table), genus_from_betti(table))
        for cls in row.classes:
            entries.append(
                ClassificationEntry(
                    div.label, cls, inv, FAMILY_III, row.description, table,
                    ResolutionFamily(pair, ResolutionCase.NONMINIMAL_F, SURFACE_DEGREE, pivot=pivot),
                )
            )

    for dd in range(2, k_max + 1):
        table = ci_table(SURFACE_DEGREE, dd)
        inv = CurveInvariants(degree_from_betti(table), genus_from_betti(table))
        entries.append(
            ClassificationEntry(
                div.label, DivisorClass(dd, 0), inv, COMPLETE_INTERSECTION,
                f"complete intersection with a degree-{dd} surface",
                table,
                ResolutionFamily(None, ResolutionCase.CI, SURFACE_DEGREE),
            )
        )

    for entry in entries:
        if not cross_check(entry, lattice):
            raise ClassificationError(
                f"cross-check failed for {entry.divisor} class {entry.cls} "
                f"({entry.provenance}): table {entry.resolution.to_json()}"
            )
    return entries


LOW_DEGREE_TAGS = {
    (2, "smooth"),
    (2, "reducible"),
    (3, "2x2"),
    (3, "3x3"),
}


@dataclass(frozen=True)
class LowDegreeFamily:
    """One resolution family of the degree-2/3 classifications."""

    surface_degree: int
    type_tag: str
    case_label: str
    pair: WeakAdmissiblePair
    k_min: int
    n: int | None = None
    note: str = ""

    def table(self, k: int) -> BettiTable:
        return surface_generator_table(self.pair, k, self.surface_degree)

    def to_json(self) -> dict:
        doc = {
            "surface_degree": self.surface_degree,
            "type": self.type_tag,
            "case": self.case_label,
            "pair": self.pair.to_json(),
            "k_min": self.k_min,
        }
        if self.n is not None:
            doc["n"] = self.n
        if self.note:
            doc["note"] = self.note
        return doc


def classify_low_degree(
    surface_degree: int, type_tag: str, n_max: int = 3
) -> list[LowDegreeFamily]:
    """Resolution families (besides complete intersections) on a degree-2
    or degree-3 surface of the named type."""
    key = (surface_degree, type_tag)
    if key not in LOW_DEGREE_TAGS:
        raise KeyError(
            f"unknown type {surface_degree}/{type_tag}; expected one of "
            + ", ".join(f"{d}/{t}" for d, t in sorted(LOW_DEGREE_TAGS))
        )
    if key == (2, "smooth"):
        return [LowDegreeFamily(2, type_tag, "main", make_pair((1, 1), (2, 2)), 1)]
    if key == (2, "reducible"):
        # one family per splitting type n of the quadric
        return [
            LowDegreeFamily(
                2, type_tag, f"n={n}", make_pair((1, 1 + n), (2, 2 + n)), 1, n=n,
                note="tables generated by the surface-generator constructor",
            )
            for n in range(1, n_max + 1)
        ]
    if key == (3, "2x2"):
        return [
            LowDegreeFamily(3, type_tag, "A", make_pair((1, 1), (2, 3)), 0),
            LowDegreeFamily(3, type_tag, "B", make_pair((1, 2), (3, 3)), 0),
        ]
    return [LowDegreeFamily(3, type_tag, "main", make_pair((1, 1, 1), (2, 2, 2)), 1)]
