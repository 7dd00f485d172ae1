import json

import pytest

from fuchs import verifier
from fuchs.errors import SizeLimitError
from fuchs.unitgroup import AbelianGroupStructure
from fuchs.verifier import combine_cyclic_orders, enumerate_rings, invariant_factors_from_orders


def test_invariant_factors_from_orders():
    # C_2 x C_4: element orders 1,2,2,2,4,4,4,4
    g = invariant_factors_from_orders([1, 2, 2, 2, 4, 4, 4, 4])
    assert g.invariant_factors == (2, 4)
    # C_6: orders 1,2,3,3,6,6
    assert invariant_factors_from_orders([1, 2, 3, 3, 6, 6]).invariant_factors == (6,)
    assert invariant_factors_from_orders([1]).invariant_factors == ()


def test_combine_cyclic_orders():
    assert combine_cyclic_orders([2, 3]).invariant_factors == (6,)
    assert combine_cyclic_orders([2, 2, 8]).invariant_factors == (2, 2, 8)
    assert combine_cyclic_orders([1, 7, 7]).invariant_factors == (7, 7)
    assert combine_cyclic_orders([]).invariant_factors == ()


def test_census_z4_is_unique():
    entries = enumerate_rings((4,))
    assert len(entries) == 1
    assert entries[0].unit_structure.invariant_factors == (2,)


def test_census_4_2_contains_the_C4_witness():
    entries = enumerate_rings((4, 2))
    assert len(entries) == 4
    structures = sorted(e.unit_structure.invariant_factors for e in entries)
    assert (4,) in structures  # Z4[x]/(x^2-2, 2x)
    assert all(e.ring.validation_failure() is None for e in entries)


def test_census_2_2_includes_f4():
    entries = enumerate_rings((2, 2))
    structures = [e.unit_structure.invariant_factors for e in entries]
    assert (3,) in structures  # the field F4


def test_census_unit_structures_match_independent_path():
    from fuchs import unitgroup

    for typ in [(4, 2), (2, 2, 2), (3, 3)]:
        for entry in enumerate_rings(typ):
            direct = unitgroup.group_structure(entry.ring)
            assert direct.invariant_factors == entry.unit_structure.invariant_factors


def test_census_deterministic_across_workers():
    for typ in [(4, 2), (2, 2, 2)]:
        blobs = []
        for workers in (1, 2, 3):
            entries = enumerate_rings(typ, workers=workers)
            blobs.append(json.dumps([e.to_json() for e in entries],
                                    sort_keys=True, separators=(",", ":")))
        assert blobs[0] == blobs[1] == blobs[2]


def test_census_dedupe_reduces_presentations():
    full = enumerate_rings((2, 2, 2))
    deduped = enumerate_rings((2, 2, 2), dedupe=True)
    assert len(deduped) < len(full)
    assert {e.signature() for e in deduped} == {e.signature() for e in full}


def test_census_rejects_bad_types():
    with pytest.raises(ValueError):
        enumerate_rings((2, 4))  # first order must be the lcm
    with pytest.raises(SizeLimitError):
        enumerate_rings((2,) * 13)  # order 8192 > limit 4096


def test_additive_types_enumeration():
    types = list(verifier.additive_types(16, characteristic=4))
    assert set(types) == {(4,), (4, 2), (4, 4), (4, 2, 2)}
    all_types = list(verifier.additive_types(8))
    assert (8,) in all_types and (2, 2, 2) in all_types and (6,) in all_types
    assert (4, 3) not in all_types


def test_suite_lemmas():
    report = verifier.verify_lemma_power_equations()
    assert report.passed
    assert report.cases[0]["solutions_found"] >= 5


def test_suite_char0():
    assert verifier.verify_char0_obstruction().passed


def test_suite_char2():
    report = verifier.verify_char2_quotients()
    assert report.passed and len(report.cases) == 8


def test_suite_specialization():
    assert verifier.verify_specialization().passed


def test_suite_cyclotomic():
    report = verifier.verify_cyclotomic_cases()
    assert report.passed and len(report.cases) == 8


def test_report_json_shape():
    report = verifier.verify_char0_obstruction()
    blob = report.to_json()
    assert blob["check"] == "char0" and blob["passed"] is True
    assert all("case" in c and "passed" in c for c in blob["cases"])


def test_cyclotomic_ring_builder():
    ring = verifier.cyclotomic_quotient_ring(2, 7, 1)
    assert ring.order == 2**7
    from fuchs import unitgroup
    assert unitgroup.group_structure(ring).invariant_factors == (7, 7)


def test_element_order_profile_is_isomorphism_invariant_sample():
    from fuchs.finring import mk_finite_field, mk_zn

    f4 = [e for e in enumerate_rings((2, 2)) if e.unit_structure.invariant_factors == (3,)]
    assert len(f4) >= 1
    profile = verifier._element_order_profile(f4[0].ring)
    assert profile == verifier._element_order_profile(mk_finite_field(2, 2))
    assert profile != verifier._element_order_profile(mk_zn(4))
