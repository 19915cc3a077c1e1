from fractions import Fraction

import pytest

import polyom as pm
from polyom.catalog import Catalog, from_enumeration
from polyom.realizability import REFERENCE_REALIZABLE, trial_seed


def catalog(n, k):
    return from_enumeration(pm.enumerate_chirotopes(n, k))


def test_minimal_case_realized_in_one_trial():
    tagged, stats = pm.realize_random(catalog(4, 2), trials=1, seed=0)
    assert stats.realizable == 1 and stats.unknown == 0
    assert tagged.witnesses[0] is not None
    assert pm.verify_catalog_witnesses(tagged) == ()


def test_zero_trials_is_a_no_op():
    tagged, stats = pm.realize_random(catalog(5, 2), trials=0, seed=3)
    assert stats.realizable == 0 and stats.unknown == 5
    assert stats.summary() == "realizable=0 unknown=5 trials=0 seed=3"
    assert tagged.witnesses == (None,) * 5


def test_deterministic():
    a, sa = pm.realize_random(catalog(5, 2), trials=40, seed=11)
    b, sb = pm.realize_random(catalog(5, 2), trials=40, seed=11)
    assert sa == sb
    assert a == b


def test_coverage_monotone_and_prefix_stable():
    cat = catalog(5, 2)
    short, _ = pm.realize_random(cat, trials=10, seed=2)
    longer, _ = pm.realize_random(cat, trials=60, seed=2)
    for i, wit in enumerate(short.witnesses):
        if wit is not None:
            # a witness found in the first 10 trials is found again
            assert longer.witnesses[i] == wit


def test_small_catalog_fully_covered():
    tagged, stats = pm.realize_random(catalog(5, 2), trials=200, seed=0)
    assert stats.realizable == 5
    assert pm.verify_catalog_witnesses(tagged) == ()


def test_resume_from_tagged_catalog():
    cat = catalog(5, 2)
    first, s1 = pm.realize_random(cat, trials=10, seed=2)
    resumed, s2 = pm.realize_random(first, trials=10, seed=99)
    assert resumed.realizable_count() >= first.realizable_count()
    # existing witnesses are kept, not overwritten
    for i, wit in enumerate(first.witnesses):
        if wit is not None:
            assert resumed.witnesses[i] == wit


def test_missing_record_raises_soundness_error():
    full = catalog(6, 2)
    # drop one record; the search eventually draws exactly that object
    records = tuple(r for i, r in enumerate(full.records) if i != 3)
    holed = Catalog(6, 2, records)
    with pytest.raises(pm.SoundnessError):
        pm.realize_random(holed, trials=1300, seed=7)


def test_verify_witness():
    cfg = pm.PointConfig([(0, 0), (1, 1), (2, 8), (3, 27)])
    assert pm.verify_witness("+", cfg, 2)
    assert not pm.verify_witness("-", cfg, 2)
    assert not pm.verify_witness("", cfg, 2)


def test_verify_catalog_flags_perturbed_witness():
    tagged, _ = pm.realize_random(catalog(5, 2), trials=200, seed=0)
    wit = tagged.witnesses[2]
    pts = list(wit.points)
    x, y = pts[3]
    pts[3] = (x, y + 10**13)
    bent = list(tagged.witnesses)
    bent[2] = pm.PointConfig(pts)
    broken = tagged.with_witnesses(bent)
    assert pm.verify_catalog_witnesses(broken) == (2,)


def test_trial_seed_injective_across_trials():
    seen = {trial_seed(5, t) for t in range(1000)}
    assert len(seen) == 1000
    assert trial_seed(5, 0) != trial_seed(6, 0)


def test_witness_coordinates_within_range():
    tagged, _ = pm.realize_random(
        catalog(4, 2), trials=6, seed=1, ranges=(8,)
    )
    wit = tagged.witnesses[0]
    assert wit is not None
    for x, y in wit.points:
        assert abs(x) <= 8 and abs(y) <= 8
        assert x.denominator == 1 and y.denominator == 1


def test_coverage_report_known_reference():
    tagged, _ = pm.realize_random(catalog(5, 2), trials=200, seed=0)
    rep = pm.coverage_report(tagged)
    assert rep.realizable == 5 and rep.reference == 5
    assert rep.summary() == "realizable=5 unknown=0 total=5 reference=5"


def test_coverage_report_bounds_and_unknown_reference():
    rep = pm.coverage_report(Catalog(8, 2, ()))
    assert rep.reference == (830850, 838204)
    assert "reference_low=830850" in rep.summary()
    none = pm.coverage_report(Catalog(9, 2, ()))
    assert none.reference is None
    assert none.summary() == "realizable=0 unknown=0 total=0"


def test_reference_table_consistent_with_enumeration():
    for (n, k), ref in REFERENCE_REALIZABLE.items():
        if isinstance(ref, tuple):
            continue
        assert pm.enumerate_chirotopes(n, k).count == ref, (n, k)
