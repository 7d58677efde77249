"""Ring classification, W-rings, the covering condition, uniform exponents,
and the verification suite."""

import random

import pytest

from primspec.classify import (
    a_conditions,
    analyze_ring,
    closure_identity_check,
    is_w_ring,
    star_condition,
    verify_theorems,
)
from primspec.ideals import mask_of


def test_classify_examples():
    cls = analyze_ring("Zn(8)").classification
    assert cls.is_local and not cls.is_p_ring and not cls.is_field
    cls = analyze_ring("Zn(6)").classification
    assert not cls.is_local and cls.is_p_ring
    cls = analyze_ring("GF(7)").classification
    assert cls.is_field and cls.is_local and cls.is_p_ring


def test_classification_invariants():
    for text in ("Zn(8)", "Zn(30)", "GF(7)", "Prod(Zn(4), Zn(9))"):
        cls = analyze_ring(text).classification
        if cls.is_field:
            assert cls.is_local
        assert set(cls.maximal_ideals) <= set(cls.prime_ideals)
        assert set(cls.prime_ideals) <= set(cls.primary_ideals)
        assert cls.krull_dimension == 0
        assert cls.is_zero_dimensional


def test_p_ring_flag_matches_definition():
    a = analyze_ring("Zn(8)")
    lat = a.lattice
    primary_not_maximal = [
        i for i in a.classification.primary_ideals if not lat.maximal[i]
    ]
    assert not a.classification.is_p_ring
    assert sorted(lat.render(i) for i in primary_not_maximal) == ["(0)", "(4)"]


@pytest.mark.parametrize("text", ["Zn(12)", "Zn(8)", "Zn(36)"])
def test_w_ring_examples(text):
    a = analyze_ring(text)
    verdict, witness = is_w_ring(a.lattice)
    assert verdict is True, witness


def test_w_ring_counterexample():
    a = analyze_ring("Quot(Zn(4), x^2)")
    verdict, witness = is_w_ring(a.lattice)
    assert verdict is False
    assert "(2x)" in witness


def test_w_ring_unknown_above_cap():
    a = analyze_ring("Zn(8)")
    verdict, witness = is_w_ring(a.lattice, max_prim=2)
    assert verdict is None
    assert "exhaustive scan" in witness


def test_star_condition_examples():
    a30 = analyze_ring("Zn(30)")
    verdict, witness = star_condition(a30.lattice, a30.prim)
    assert verdict is False and witness is not None
    a12 = analyze_ring("Zn(12)")
    assert star_condition(a12.lattice, a12.prim) == (True, None)
    a7 = analyze_ring("GF(7)")
    assert star_condition(a7.lattice, a7.prim) == (True, None)


def test_star_condition_matches_prime_count():
    for text in (
        "Zn(8)",
        "Zn(12)",
        "Zn(30)",
        "Zn(36)",
        "GF(7)",
        "Prod(GF(2), GF(2))",
        "Prod(Zn(4), Zn(9))",
    ):
        a = analyze_ring(text)
        nonzero_primes = [
            i for i in a.classification.prime_ideals if a.lattice.mask(i) != 1
        ]
        verdict, _ = star_condition(a.lattice, a.prim)
        assert verdict == (len(nonzero_primes) <= 2), text


def test_a_conditions_examples():
    a8 = analyze_ring("Zn(8)")
    ids = list(range(len(a8.lattice)))
    for mode in ("A2_original", "A2_radical_form"):
        res = a_conditions(a8.lattice, ids, mode)
        assert res.a1 and res.a2
    a6 = analyze_ring("Zn(6)")
    fam = [
        a6.lattice.id_by_mask[mask_of([0, 2, 4])],
        a6.lattice.id_by_mask[mask_of([0, 3])],
    ]
    res = a_conditions(a6.lattice, fam, "A2_original")
    assert res.a1 and res.a2
    res = a_conditions(a6.lattice, [a6.lattice.zero_id], "A2_radical_form")
    assert res.a2 and res.a1
    res = a_conditions(a6.lattice, [a6.lattice.unit_id], "A2_original")
    assert res.a2 and not res.a1
    with pytest.raises(ValueError):
        a_conditions(a6.lattice, [], "A2_original")
    with pytest.raises(ValueError):
        a_conditions(a6.lattice, fam, "A2_both")


def test_a2_modes_agree_on_random_families():
    rng = random.Random(3)
    for text in ("Zn(12)", "Zn(72)", "Quot(GF(2), x^3)", "Prod(Zn(4), Zn(9))"):
        lat = analyze_ring(text).lattice
        ids = list(range(len(lat)))
        families = [ids] + [
            sorted(rng.sample(ids, rng.randint(1, len(ids)))) for _ in range(15)
        ]
        for fam in families:
            orig = a_conditions(lat, fam, "A2_original")
            radf = a_conditions(lat, fam, "A2_radical_form")
            assert orig.a2 == radf.a2
            assert orig.a1 == radf.a1


def test_closure_identity_sampled_branch():
    a = analyze_ring("Zn(12)")
    ok, witness = closure_identity_check(a.prim, exhaustive_limit=1, samples=60, seed=5)
    assert ok, witness


def test_verify_theorems_z8():
    report = verify_theorems("Zn(8)")
    assert report.all_passed
    assert report.entry("irreducible-iff-nilradical-primary").lhs is True
    assert report.entry("irreducible-iff-nilradical-primary").rhs is True
    assert report.entry("local-iff-supercompact").lhs is True
    assert report.entry("p-ring-iff-t0").lhs is False
    assert report.entry("t0-iff-sober").applicable


def test_verify_theorems_z6():
    report = verify_theorems("Zn(6)")
    assert report.all_passed
    assert report.entry("p-ring-iff-t0").lhs is True
    assert report.entry("irreducible-iff-nilradical-primary").lhs is False
    assert report.entry("local-iff-supercompact").lhs is False


def test_verify_theorems_chain_ring():
    a = analyze_ring("Quot(GF(2), x^3)")
    report = verify_theorems(a)
    assert report.all_passed
    assert len(a.prim.points) == 3
    for i in range(len(a.lattice)):
        if a.lattice.proper[i]:
            assert a.prim.variety(i) == a.prim.all_points()


def test_verify_theorems_not_applicable_for_non_w_ring():
    report = verify_theorems("Quot(Zn(4), x^2)")
    assert report.all_passed
    entry = report.entry("t0-iff-sober")
    assert not entry.applicable
    assert entry.lhs is None and entry.rhs is None
    assert report.entry("spectral-iff-t0").applicable is False


def test_verify_theorems_skipped_on_cap():
    report = verify_theorems("Zn(30)", max_ideals=3)
    assert report.all_passed
    assert all(not e.applicable for e in report.entries)
    assert all(e.witness and e.witness.startswith("skipped") for e in report.entries)
    report = verify_theorems("Zn(2000)")
    assert all(not e.applicable for e in report.entries)


def test_verify_theorems_deterministic():
    r1 = verify_theorems("Zn(30)", seed=9)
    r2 = verify_theorems("Zn(30)", seed=9)
    assert [(e.entry_id, e.lhs, e.rhs, e.passed, e.witness) for e in r1.entries] == [
        (e.entry_id, e.lhs, e.rhs, e.passed, e.witness) for e in r2.entries
    ]


def test_report_entry_shape():
    from primspec.classify import THEOREM_CLAIMS

    report = verify_theorems("Zn(12)")
    ids = [e.entry_id for e in report.entries]
    assert ids == list(THEOREM_CLAIMS)
    for e in report.entries:
        if e.applicable:
            assert e.passed == (e.lhs == e.rhs)
        else:
            assert e.passed
    with pytest.raises(KeyError):
        report.entry("no-such-entry")
