import pytest

from fuchs import classify, ordgroup
from fuchs.classify import GroupKind, cyclic, decide, quasi_cyclic, torsion_free
from fuchs.errors import FuchsError, NoWitnessError


def test_cyclic_descriptor_kinds():
    assert cyclic(8).kind is GroupKind.CYCLIC_PRIME_POWER
    assert cyclic(6).kind is GroupKind.FINITE_ABELIAN
    assert cyclic(1).factors == ()


def test_realizable_prime_powers_complete_below_16():
    # orders whose cyclic group arises as a unit group
    good = {1, 2, 3, 4, 7, 8}
    for m in range(2, 16):
        from fuchs.numtheory import factorize
        fac = factorize(m)
        if len(fac) != 1:
            continue
        ((p, n),) = fac.items()
        verdict = classify.realizable_cyclic(p, n)
        assert verdict.realizable == (m in good), m


def test_known_verdicts_with_witnesses():
    v = classify.realizable_cyclic(2, 3)  # C_8
    assert v.realizable and v.witness.ring.label == "F9"
    assert set(v.characteristics) == {3, 6}

    v = classify.realizable_cyclic(2, 8)  # C_256 via Fermat prime 257
    assert v.realizable and v.witness.ring.label == "F257"

    v = classify.realizable_cyclic(2, 7)  # C_128: 129 = 3 * 43
    assert not v.realizable

    v = classify.realizable_cyclic(31, 1)  # Mersenne
    assert v.realizable and v.witness.ring.label == "F32"
    assert v.characteristics == (2,)

    v = classify.realizable_cyclic(5, 1)
    assert not v.realizable


def test_quasi_cyclic_never_realizable():
    for p in (2, 3, 5, 7):
        assert not classify.realizable_cyclic(p, "inf").realizable
        assert not decide(quasi_cyclic(p)).realizable


def test_torsion_free_realizable_only_at_char_2():
    d = torsion_free(ordgroup.integer_lattice(2))
    v2 = classify.realizable_with_char(d, 2)
    assert v2.realizable and v2.witness.symbol == "F2[G]"
    for c in (0, 3, 4, 5):
        assert not classify.realizable_with_char(d, c).realizable


def test_realizable_with_char_table_rows():
    assert classify.realizable_with_char(cyclic(2), 0).witness.symbol == "Z"
    assert classify.realizable_with_char(cyclic(4), 0).witness.symbol == "Z[i]"
    assert not classify.realizable_with_char(cyclic(8), 0).realizable
    assert classify.realizable_with_char(cyclic(4), 4).realizable
    assert not classify.realizable_with_char(cyclic(8), 4).realizable
    assert classify.realizable_with_char(cyclic(8), 3).realizable
    assert classify.realizable_with_char(cyclic(8), 6).realizable
    assert classify.realizable_with_char(cyclic(256), 257).realizable
    assert classify.realizable_with_char(cyclic(127), 2).realizable
    assert not classify.realizable_with_char(cyclic(127), 4).realizable


def test_admissible_characteristics():
    assert classify.admissible_characteristics(cyclic(7), 100) == {2}
    cs = classify.admissible_characteristics(cyclic(4), 50)
    assert cs == {0, 2, 4, 3, 6, 5, 10, 17, 34}


def test_witness_raises_when_unrealizable():
    with pytest.raises(NoWitnessError):
        classify.witness(cyclic(8), 2)


def test_decide_composite_cyclic():
    v = decide(cyclic(10))
    assert v.realizable and v.witness.ring.label == "F11"
    with pytest.raises(FuchsError):
        decide(cyclic(14))  # 15 not prime; no complete criterion


def test_decide_rejects_multi_factor_groups():
    d = classify.GroupDescriptor(
        kind=GroupKind.FINITE_ABELIAN, factors=(2, 4))
    with pytest.raises(FuchsError):
        decide(d)


def test_specialization_counterexamples():
    pairs = classify.specialization_counterexamples(256)
    assert (256, 128) in pairs
    assert (10, 5) in pairs
    assert classify.specialization_counterexamples(4) == []


def test_verdict_json_shape():
    d = cyclic(8)
    v = classify.realizable_cyclic(2, 3)
    out = classify.verdict_json(d, None, v)
    assert out["group"] == "C_8" and out["realizable"] is True
    assert out["witness"] == "F9"
    assert out["characteristics"] == [3, 6]
