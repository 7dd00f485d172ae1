import pytest

from fuchs import polyfield
from fuchs.polyfield import (
    HypothesisViolationError,
    Quad2,
    cyclotomic_decomposition,
    factor,
    is_irreducible,
    least_irreducible,
    poly,
    poly_gcd,
    x_pow_minus_one,
)


def test_arithmetic_and_divmod():
    f = poly(5, [1, 0, 1])  # 1 + x^2
    g = poly(5, [2, 1])     # 2 + x
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


def test_gcd_is_monic_common_divisor():
    h = poly(3, [1, 1])
    f = h * poly(3, [2, 0, 1])
    g = h * poly(3, [1, 2])
    d = poly_gcd(f, g)
    assert d.coeffs[-1] == 1
    assert divmod(f, d)[1].is_zero() and divmod(g, d)[1].is_zero()


def test_irreducibility_small_cases():
    assert is_irreducible(poly(2, [1, 1, 1]))          # x^2 + x + 1
    assert not is_irreducible(poly(2, [1, 0, 1]))      # (x+1)^2
    assert is_irreducible(poly(3, [1, 0, 1]))          # x^2 + 1 over F3
    assert not is_irreducible(poly(5, [1, 0, 1]))      # (x+2)(x+3) over F5


def test_least_irreducible_is_canonical():
    # lexicographically least monic irreducible, constant term most minor
    assert least_irreducible(2, 2).coeffs == (1, 1, 1)
    assert least_irreducible(2, 3).coeffs == (1, 1, 0, 1)
    assert least_irreducible(3, 2).coeffs == (1, 0, 1)


def test_factor_x7_minus_1_over_F2():
    fs = factor(x_pow_minus_one(2, 7))
    assert [(g.coeffs, m) for g, m in fs] == [
        ((1, 1), 1),
        ((1, 0, 1, 1), 1),
        ((1, 1, 0, 1), 1),
    ]
    prod = poly(2, [1])
    for g, m in fs:
        for _ in range(m):
            prod = prod * g
    assert prod == x_pow_minus_one(2, 7)


def test_factor_with_multiplicity():
    fs = factor(x_pow_minus_one(3, 9))  # x^9 - 1 = (x - 1)^9 over F3
    assert len(fs) == 1
    g, m = fs[0]
    assert m == 9 and g.degree == 1


def test_cyclotomic_decompositions_table():
    # (q, p, k) -> factor degrees of x^(p^k) - 1 over F_q
    expected = {
        (2, 7, 1): (1, 3, 3),
        (2, 3, 1): (1, 2),
        (2, 3, 2): (1, 2, 6),
        (3, 2, 1): (1, 1),
        (3, 2, 2): (1, 1, 2),
        (3, 2, 3): (1, 1, 2, 2, 2),
        (5, 2, 1): (1, 1),
        (5, 3, 1): (1, 2),
    }
    for (q, p, k), degrees in expected.items():
        decomp = cyclotomic_decomposition(q, p, k)
        assert decomp.degrees == degrees
        assert decomp.unit_group_orders == tuple(q**d - 1 for d in degrees)


def test_cyclotomic_rejects_equal_primes():
    with pytest.raises(HypothesisViolationError):
        cyclotomic_decomposition(3, 3, 1)


def test_char0_identity_and_zeta8_norm():
    assert polyfield.char0_inverse_identity()
    assert polyfield.zeta8_unit_circle_check() == (3, 2)


def test_quad2_exact_arithmetic():
    sqrt2 = Quad2(0, 1)
    assert sqrt2 * sqrt2 == Quad2(2)
    i = Quad2(0, 0, 1)
    assert i * i == Quad2(-1)
    z = Quad2(1, 2, 3, 4)
    norm = z * z.conj()
    assert norm.c == 0 and norm.d == 0  # |z|^2 is real


def test_modulus_mismatch_guard():
    with pytest.raises(ValueError):
        poly(2, [1, 1]) + poly(3, [1, 1])
