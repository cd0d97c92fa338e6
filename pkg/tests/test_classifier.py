import pytest

from acmcurves import (
    BettiTable,
    ClassificationEntry,
    CurveInvariants,
    DivisorClass,
    classify_low_degree,
    classify_quartic,
    cross_check,
    divisor,
    known_divisors,
    make_pair,
)
from acmcurves.classifier import (
    COMPLETE_INTERSECTION,
    FAMILY_II,
    FAMILY_III,
    RESIDUAL,
    RIGID,
    rigid_classes,
)
from acmcurves.resolutions import ResolutionCase, ResolutionFamily, surface_generator_table


def cls(a, b):
    return DivisorClass(a, b)


def by_provenance(entries, tag):
    return [e for e in entries if e.provenance == tag]


class TestKnownDivisors:
    def test_five_records(self):
        divisors = known_divisors()
        assert [d.label for d in divisors] == ["F1", "F2", "F3", "F4", "F5"]

    def test_lattices(self):
        assert divisor("F4").lattice.to_json() == {"h2": 4, "hc": 1, "c2": -2}
        assert divisor("F1").lattice.to_json() == {"h2": 4, "hc": 6, "c2": 4}
        assert divisor("F5").lattice.to_json() == {"h2": 4, "hc": 2, "c2": -2}

    def test_attached_pairs(self):
        assert divisor("F5").pairs == (make_pair((1, 2), (3, 4)),)
        assert divisor("F1").pairs == (make_pair((1, 1, 1, 1), (2, 2, 2, 2)),)
        assert divisor("F4").pairs == (
            make_pair((1, 1), (2, 4)),
            make_pair((1, 3), (4, 4)),
        )
        assert divisor("F2").pairs == (
            make_pair((1, 1, 1), (2, 2, 3)),
            make_pair((1, 2, 2), (3, 3, 3)),
        )

    def test_unknown_label(self):
        with pytest.raises(KeyError):
            divisor("F6")


EXPECTED_RIGID = {
    "F1": {cls(0, 1), cls(3, -1)},
    "F2": {cls(0, 1), cls(2, -1)},
    "F3": {cls(0, 1), cls(2, -1)},
    "F4": {cls(0, 1)},
    "F5": {cls(0, 1), cls(1, -1)},
}


@pytest.mark.parametrize("label", sorted(EXPECTED_RIGID))
def test_rigid_sets(label):
    assert rigid_classes(divisor(label)) == EXPECTED_RIGID[label]


class TestClassifyQuartic:
    def test_f4_k3_contains_spec_rows(self):
        entries = classify_quartic(divisor("F4"), k_max=3)
        rigid = {(e.cls, e.invariants.degree, e.invariants.genus)
                 for e in by_provenance(entries, RIGID)}
        assert rigid == {(cls(0, 1), 1, 0)}
        fam = {(e.cls, e.invariants.degree, e.invariants.genus)
               for e in by_provenance(entries, FAMILY_II)}
        assert (cls(3, 1), 13, 21) in fam
        assert (cls(4, -1), 15, 28) in fam
        res = {(e.cls, e.invariants.degree, e.invariants.genus)
               for e in by_provenance(entries, RESIDUAL)}
        assert (cls(2, -1), 7, 6) in res
        assert (cls(1, -1), 3, 1) in res

    def test_f5_k3(self):
        entries = classify_quartic(divisor("F5"), k_max=3)
        assert {e.cls for e in by_provenance(entries, RIGID)} == {cls(0, 1), cls(1, -1)}
        res = {(e.cls, e.invariants.degree, e.invariants.genus)
               for e in by_provenance(entries, RESIDUAL)}
        assert (cls(1, 1), 6, 4) in res and (cls(2, -1), 6, 4) in res

    def test_f1_k3(self):
        entries = classify_quartic(divisor("F1"), k_max=3)
        assert {e.cls for e in by_provenance(entries, RIGID)} == {cls(0, 1), cls(3, -1)}
        fam = {(e.cls, e.invariants.degree, e.invariants.genus)
               for e in by_provenance(entries, FAMILY_II)}
        assert fam == {(cls(1, 1), 10, 11), (cls(4, -1), 10, 11)}
        assert not by_provenance(entries, RESIDUAL)

    FAMILY_FORMS = {
        "F1": [lambda k: (4 * k - 2, 2 * k * k - 2 * k - 1)],
        "F2": [
            lambda k: (4 * k - 1, 2 * k * k - k - 1),
            lambda k: (4 * k + 1, 2 * k * k + k - 1),
        ],
        "F3": [lambda k: (4 * k, 2 * k * k - 1)],
        "F4": [
            lambda k: (4 * k + 1, 2 * k * k + k),
            lambda k: (4 * k + 3, 2 * k * k + 3 * k + 1),
        ],
        "F5": [lambda k: (4 * k + 2, 2 * k * k + 2 * k)],
    }

    @pytest.mark.parametrize("label", sorted(FAMILY_FORMS))
    def test_family_closed_forms(self, label):
        div = divisor(label)
        entries = classify_quartic(div, k_max=8)
        emitted = {}
        for e in by_provenance(entries, FAMILY_II):
            emitted.setdefault((e.family.pair, e.family.shift), set()).add(
                (e.invariants.degree, e.invariants.genus)
            )
        for pair, form in zip(div.pairs, self.FAMILY_FORMS[label]):
            for k in range(3, 9):
                assert emitted[(pair, k)] == {form(k)}

    @pytest.mark.parametrize("label", ["F1", "F2", "F3", "F4", "F5"])
    def test_all_entries_cross_check(self, label):
        div = divisor(label)
        for e in classify_quartic(div, k_max=10):
            assert cross_check(e, div.lattice)

    @pytest.mark.parametrize("label", ["F1", "F2", "F3", "F4", "F5"])
    def test_complete_intersection_entries(self, label):
        entries = classify_quartic(divisor(label), k_max=6)
        ci = {
            e.cls: (e.invariants.degree, e.invariants.genus)
            for e in by_provenance(entries, COMPLETE_INTERSECTION)
        }
        assert ci == {cls(d, 0): (4 * d, 2 * d * d + 1) for d in range(2, 7)}

    def test_family_iii_entries_reuse_known_classes(self):
        entries = classify_quartic(divisor("F4"), k_max=3)
        third = {(e.cls, e.invariants.degree, e.invariants.genus)
                 for e in by_provenance(entries, FAMILY_III)}
        assert third == {(cls(2, 1), 9, 10), (cls(1, -1), 3, 1)}

    def test_low_shift_tables_marked_nonminimal(self):
        entries = classify_quartic(divisor("F4"), k_max=3)
        flags = {
            (e.cls, e.family.shift): e.minimal
            for e in by_provenance(entries, RESIDUAL)
        }
        # k = 2 = 4 - 2 degenerates on the pair ((1,1),(2,4)); k = 0 = 4 - 4
        # degenerates on the dual pair
        assert flags[(cls(2, 1), 2)] is False
        assert flags[(cls(1, -1), 0)] is False
        assert flags[(cls(1, 1), 1)] is True

    def test_k_max_floor(self):
        with pytest.raises(ValueError):
            classify_quartic(divisor("F4"), k_max=2)


class TestCrossCheck:
    def test_true_on_proposition_row(self):
        lattice = divisor("F4").lattice
        entry = ClassificationEntry(
            "F4", cls(3, 1), CurveInvariants(13, 21), FAMILY_II, "",
            BettiTable((4, 4, 4), (5, 7)),
        )
        assert cross_check(entry, lattice)

    def test_true_on_twisted_cubic_family_row(self):
        lattice = divisor("F2").lattice
        entry = ClassificationEntry(
            "F2", cls(2, 1), CurveInvariants(11, 14), FAMILY_II, "",
            BettiTable((4, 4, 4, 4), (5, 5, 6)),
        )
        assert cross_check(entry, lattice)

    def test_false_on_corrupted_table(self):
        lattice = divisor("F4").lattice
        entry = ClassificationEntry(
            "F4", cls(3, 1), CurveInvariants(13, 21), FAMILY_II, "",
            BettiTable((4, 4, 4), (5, 8)),
        )
        assert not cross_check(entry, lattice)


class TestLowDegree:
    def test_smooth_quadric(self):
        fams = classify_low_degree(2, "smooth")
        assert len(fams) == 1 and fams[0].k_min == 1
        t = fams[0].table(2)
        assert (t.gens, t.syz) == ((2, 3, 3), (4, 4))

    def test_smooth_cubic_determinantal(self):
        (fam,) = classify_low_degree(3, "3x3")
        assert fam.k_min == 1
        t = fam.table(1)
        assert (t.gens, t.syz) == ((2, 2, 2, 3), (3, 3, 3))

    def test_smooth_cubic_two_by_two(self):
        fams = {f.case_label: f for f in classify_low_degree(3, "2x2")}
        ta = fams["A"].table(0)
        assert (ta.gens, ta.syz) == ((1, 1, 3), (2, 3))
        tb = fams["B"].table(0)
        assert (tb.gens, tb.syz) == ((1, 2, 3), (3, 3))

    def test_split_quadric_families(self):
        fams = classify_low_degree(2, "reducible", n_max=2)
        assert [f.n for f in fams] == [1, 2]
        t = fams[0].table(1)
        assert (t.gens, t.syz) == ((2, 2, 3), (3, 4))
        assert fams[0].note

    def test_unknown_tag(self):
        with pytest.raises(KeyError, match="unknown type"):
            classify_low_degree(3, "4x4")

    def test_tables_come_from_the_main_constructor(self):
        for fam in classify_low_degree(3, "2x2"):
            for k in range(fam.k_min, fam.k_min + 4):
                assert fam.table(k) == surface_generator_table(fam.pair, k, 3)


def test_resolution_family_validation():
    pair = make_pair((1, 1), (2, 4))
    with pytest.raises(ValueError, match="pivot"):
        ResolutionFamily(pair, ResolutionCase.NONMINIMAL_F, 4, pivot=5)


def test_classification_is_deterministic():
    for label in ("F2", "F4"):
        div = divisor(label)
        first = classify_quartic(div, k_max=5)
        second = classify_quartic(div, k_max=5)
        assert first == second


def test_family_ii_branch_counts():
    # autodual pairs solve to a +- pair of classes per shift, dual-distinct
    # pairs to a single class each
    expected_sizes = {"F1": {2}, "F2": {1}, "F3": {2}, "F4": {1}, "F5": {2}}
    for label, sizes in expected_sizes.items():
        div = divisor(label)
        per_pair_k = {}
        for e in classify_quartic(div, k_max=6):
            if e.provenance == FAMILY_II:
                per_pair_k.setdefault((e.family.pair, e.family.shift), set()).add(e.cls)
        assert {len(v) for v in per_pair_k.values()} == sizes
