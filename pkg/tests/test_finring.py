import pytest

from fuchs.errors import InvalidPresentationError, SizeLimitError
from fuchs.finring import (
    TableRing,
    mk_finite_field,
    mk_poly_quotient,
    mk_product,
    mk_zn,
    quotient_by_ideal,
    validate_axioms,
)


def test_mk_zn_basics():
    R = mk_zn(6)
    assert R.order == 6 and R.characteristic == 6 and R.label == "Z6"
    x = R.from_int(5)
    assert (x * x) == R.one()
    assert (x + R.one()).coeffs == (0,)


def test_prime_modulus_labeled_as_field():
    assert mk_zn(7).label == "F7"


def test_finite_field_construction():
    F8 = mk_finite_field(2, 3)
    assert F8.order == 8 and F8.characteristic == 2
    F9 = mk_finite_field(3, 2)
    assert F9.order == 9
    # multiplicative group: every nonzero element has an inverse
    for el in F9.elements():
        if el == F9.element((0, 0)):
            continue
        assert any((el * other) == F9.one() for other in F9.elements())


def test_finite_field_cached():
    assert mk_finite_field(2, 3) is mk_finite_field(2, 3)


def test_field_size_guard():
    with pytest.raises(SizeLimitError):
        mk_finite_field(2, 17)


def test_poly_quotient_known_ring():
    # additive group Z4 + Z2, x^2 = 2, 2x = 0
    R = mk_poly_quotient(4, (4, 2), (2, 0))
    assert R.label == "Z4[x]/(x^2-2,2x)"
    assert R.order == 8 and R.characteristic == 4
    x = R.element((0, 1))
    assert (x * x).coeffs == (2, 0)
    assert (x + x).coeffs == (0, 0)
    assert validate_axioms(R)


def test_poly_quotient_rejects_incompatible_orders():
    # order of x must stay compatible with multiplication by x
    with pytest.raises(InvalidPresentationError):
        mk_poly_quotient(4, (4, 3), (0, 0))


def test_product_regroups_unity():
    R = mk_product(mk_finite_field(3, 1), mk_finite_field(2, 1))
    assert R.characteristic == 6 and R.order == 6
    assert validate_axioms(R)
    # the product of coprime-characteristic rings is Z6 in disguise:
    # unity generates everything
    one = R.one()
    seen = {one.coeffs}
    acc = one
    for _ in range(5):
        acc = acc + one
        seen.add(acc.coeffs)
    assert len(seen) == 6


def test_product_with_common_factor():
    R = mk_product(mk_zn(4), mk_zn(2))
    assert R.characteristic == 4 and R.order == 8
    assert validate_axioms(R)


def test_element_operations():
    R = mk_finite_field(3, 2)
    el = R.element((1, 1))
    assert el**8 == R.one()  # unit group has order 8
    assert el**4 != R.one() or el**2 != R.one()
    assert (-el) + el == R.element((0, 0))
    assert el.additive_order() == 3


def test_validation_catches_broken_table():
    # tamper with associativity: Z2[x]/(x^2) with x*x = x is not associative
    # with unity e0 unless it happens to be a valid idempotent table; build
    # a genuinely broken table where e1*e1 = e1 but e1*(e1*e1) mismatch is
    # impossible -- instead break commutativity
    broken = TableRing(
        characteristic=2,
        orders=(2, 2),
        products=(((1, 0), (0, 1)), ((1, 1), (0, 0))),
        label="broken",
    )
    assert broken.validation_failure() is not None
    assert not validate_axioms(broken)


def test_quotient_by_ideal_z6_mod_2():
    R = mk_zn(6)
    Q, qmap = quotient_by_ideal(R, [R.from_int(2)])
    assert Q.order == 2 and Q.characteristic == 2
    assert qmap(R.from_int(3)) == Q.one()


def test_quotient_preserves_ring_laws():
    R = mk_poly_quotient(4, (4, 4), (2, 0))  # Z4[x]/(x^2-2)
    x = R.element((0, 1))
    two_x = x + x
    Q, qmap = quotient_by_ideal(R, [two_x])
    assert Q.order == 8
    assert validate_axioms(Q)
    # the map is a ring homomorphism on a sample of pairs
    els = list(R.elements())[:8]
    for a in els:
        for b in els:
            assert qmap(a * b) == qmap(a) * qmap(b)
            assert qmap(a + b) == qmap(a) + qmap(b)


def test_ring_order_env_guard(monkeypatch):
    R = mk_poly_quotient(5, (5, 5, 5), (0, 0, 0))  # order 125
    monkeypatch.setenv("FUCHS_MAX_RING_ORDER", "100")
    with pytest.raises(SizeLimitError):
        list(R.elements())
