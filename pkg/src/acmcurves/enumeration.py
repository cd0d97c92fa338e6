"""Exhaustive enumeration of normalized weak admissible pairs.

A normalized pair of degree d has a_1 = 0, diagonal gaps b_i - a_i >= 1
summing to d (so the length t is between 2 and d), and nondecreasing
a and b.  Bounding b_t makes the set finite; the kind catalog stops
changing once the bound reaches ``stable_cap(d)``: the last kind to
appear is the all-BIG staircase of length d, whose smallest
representative is ((0, d-1, 2(d-1), ...), (1, d, ...)) with
b_t = (d-1)^2 + 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import PairFamily
from .pairs import (
    DegreeMatrix,
    KindSignature,
    WeakAdmissiblePair,
    kind_signature,
    pair_signature,
)


def stable_cap(degree: int) -> int:
    """Smallest default bound at which the kind catalog is complete."""
    return max(2 * degree, (degree - 1) ** 2 + 1)


@dataclass(frozen=True)
class EnumerationConfig:
    degree: int
    b_cap: int | None = None

    def __post_init__(self) -> None:
        if self.degree < 2:
            raise ValueError("degree must be at least 2")
        if self.b_cap is None:
            object.__setattr__(self, "b_cap", stable_cap(self.degree))
        if self.b_cap < self.degree:
            raise ValueError("b_cap below the degree misses kinds with BIG entries")


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """Ordered tuples of `parts` positive integers summing to `total`."""
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def enumerate_pairs(cfg: EnumerationConfig) -> list[WeakAdmissiblePair]:
    """All normalized pairs of the configured degree with b_t <= b_cap.

    Generation picks the diagonal gaps (a composition of the degree),
    then extends the a-sequence left to right; monotonicity of b prunes
    early.  Output is sorted by (length, a, b).
    """
    cap = cfg.b_cap
    found: list[WeakAdmissiblePair] = []
    for t in range(2, cfg.degree + 1):
        for gaps in _compositions(cfg.degree, t):
            if gaps[0] > cap:
                continue
            stack = [(0,)]
            while stack:
                a = stack.pop()
                i = len(a)
                if i == t:
                    b = tuple(a[j] + gaps[j] for j in range(t))
                    found.append(WeakAdmissiblePair(a, b))
                    continue
                prev_b = a[i - 1] + gaps[i - 1]
                lo = max(a[i - 1], prev_b - gaps[i])
                hi = cap - gaps[i]
                for ai in range(lo, hi + 1):
                    stack.append(a + (ai,))
    return sorted(found, key=lambda p: p.sort_key)


@dataclass(frozen=True)
class KindEntry:
    signature: KindSignature
    representative: WeakAdmissiblePair
    count: int

    def to_json(self) -> dict:
        return {
            "signature": self.signature.to_json(),
            "representative": self.representative.to_json(),
            "count": self.count,
        }


@dataclass(frozen=True)
class KindCatalog:
    degree: int
    b_cap: int
    entries: tuple[KindEntry, ...]

    def signatures(self) -> set[KindSignature]:
        return {e.signature for e in self.entries}

    def __len__(self) -> int:
        return len(self.entries)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "b_cap": self.b_cap,
            "kinds": [e.to_json() for e in self.entries],
        }


def enumerate_kinds(cfg: EnumerationConfig) -> KindCatalog:
    """Group the enumerated pairs by kind signature.

    The representative of each kind is its lexicographically least
    normalized pair, so output is stable across runs.
    """
    groups: dict[KindSignature, list[WeakAdmissiblePair]] = {}
    for p in enumerate_pairs(cfg):
        groups.setdefault(pair_signature(p), []).append(p)
    entries = [
        KindEntry(sig, min(pairs, key=lambda p: p.sort_key), len(pairs))
        for sig, pairs in groups.items()
    ]
    entries.sort(key=lambda e: e.representative.sort_key)
    return KindCatalog(cfg.degree, cfg.b_cap, tuple(entries))


@dataclass(frozen=True)
class MatchReport:
    """Outcome of checking expected degree matrices against a catalog."""

    matched: tuple[tuple[int, bool], ...]  # (expected index, signature found?)
    unmatched_signatures: tuple[KindSignature, ...]

    @property
    def all_matched(self) -> bool:
        return all(ok for _, ok in self.matched)


def match_catalog(catalog: KindCatalog, expected: list[DegreeMatrix]) -> MatchReport:
    """Check which expected matrices occur in the catalog, by kind.

    Also reports catalog signatures hit by no expected matrix.
    """
    for m in expected:
        if m.degree != catalog.degree:
            raise ValueError(
                f"expected matrix of degree {m.degree} against a degree-{catalog.degree} catalog"
            )
    sigs = catalog.signatures()
    expected_sigs = [kind_signature(m) for m in expected]
    matched = tuple((i, s in sigs) for i, s in enumerate(expected_sigs))
    hit = set(expected_sigs)
    unmatched = tuple(
        e.signature for e in catalog.entries if e.signature not in hit
    )
    return MatchReport(matched, unmatched)


@dataclass(frozen=True)
class FamilyMatchReport:
    """Family-aware matching: a parametrized family can straddle several
    kinds (entries cross the BIG threshold as parameters grow), so the
    catalog is compared against every instance within the bound."""

    matched: tuple[tuple[str, bool], ...]  # (family name, min instance found?)
    unmatched_signatures: tuple[KindSignature, ...]

    @property
    def all_matched(self) -> bool:
        return all(ok for _, ok in self.matched)

    @property
    def complete(self) -> bool:
        return self.all_matched and not self.unmatched_signatures


def match_families(
    catalog: KindCatalog, families: tuple[PairFamily, ...]
) -> FamilyMatchReport:
    sigs = catalog.signatures()
    matched = []
    generated: set[KindSignature] = set()
    for fam in families:
        if fam.degree != catalog.degree:
            raise ValueError(
                f"family {fam.name} has degree {fam.degree}, catalog degree {catalog.degree}"
            )
        matched.append((fam.name, pair_signature(fam.min_instance()) in sigs))
        generated |= fam.signatures(catalog.b_cap)
    unmatched = tuple(
        e.signature for e in catalog.entries if e.signature not in generated
    )
    return FamilyMatchReport(tuple(matched), unmatched)
