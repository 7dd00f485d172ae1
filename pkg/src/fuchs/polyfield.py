"""Polynomial arithmetic and factorization over prime fields.

Polynomials are coefficient tuples, low degree first, no trailing zeros.
Factorization is exhaustive trial division against monic irreducibles
enumerated in increasing degree: deterministic and verifiable at desk
scale, which is all this package needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .numtheory import is_prime


class ModulusMismatchError(ValueError):
    pass


class SizeLimitError(ValueError):
    pass


_FACTOR_DEG_LIMIT = 16
_FACTOR_MOD_LIMIT = 257
_FACTOR_SEARCH_LIMIT = 1 << 20


@dataclass(frozen=True)
class PrimeFieldPoly:
    """Polynomial over the prime field with `modulus` elements."""

    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.modulus):
            raise ValueError(f"modulus must be prime, got {self.modulus}")
        c = tuple(x % self.modulus for x in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check(self, other: "PrimeFieldPoly") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatchError(
                f"moduli differ: {self.modulus} vs {other.modulus}"
            )

    def __add__(self, other: "PrimeFieldPoly") -> "PrimeFieldPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a += (0,) * (n - len(a))
        b += (0,) * (n - len(b))
        return PrimeFieldPoly(self.modulus, tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "PrimeFieldPoly":
        return PrimeFieldPoly(self.modulus, tuple(-x for x in self.coeffs))

    def __sub__(self, other: "PrimeFieldPoly") -> "PrimeFieldPoly":
        return self + (-other)

    def __mul__(self, other: "PrimeFieldPoly") -> "PrimeFieldPoly":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return PrimeFieldPoly(self.modulus, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PrimeFieldPoly(self.modulus, tuple(out))

    def __divmod__(self, other: "PrimeFieldPoly") -> tuple["PrimeFieldPoly", "PrimeFieldPoly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q_mod = self.modulus
        rem = list(self.coeffs)
        d = other.degree
        lead_inv = pow(other.coeffs[-1], -1, q_mod)
        quo = [0] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] % q_mod
            if c:
                f = c * lead_inv % q_mod
                quo[i - d] = f
                for j, b in enumerate(other.coeffs):
                    rem[i - d + j] = (rem[i - d + j] - f * b) % q_mod
        return (
            PrimeFieldPoly(q_mod, tuple(quo)),
            PrimeFieldPoly(q_mod, tuple(rem[:d] if d > 0 else ())),
        )

    def __mod__(self, other: "PrimeFieldPoly") -> "PrimeFieldPoly":
        return divmod(self, other)[1]

    def monic(self) -> "PrimeFieldPoly":
        if self.is_zero():
            return self
        inv = pow(self.coeffs[-1], -1, self.modulus)
        return PrimeFieldPoly(self.modulus, tuple(c * inv for c in self.coeffs))

    def derivative(self) -> "PrimeFieldPoly":
        return PrimeFieldPoly(
            self.modulus, tuple(i * c for i, c in enumerate(self.coeffs))[1:]
        )

    def __str__(self) -> str:
        if self.is_zero():
            return f"0 (mod {self.modulus})"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("x" if c == 1 else f"{c}*x")
            else:
                parts.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
        return " + ".join(parts) + f" (mod {self.modulus})"


def poly(modulus: int, coeffs) -> PrimeFieldPoly:
    return PrimeFieldPoly(modulus, tuple(coeffs))


def x_pow_minus_one(modulus: int, n: int) -> PrimeFieldPoly:
    """x^n - 1 over the given prime field."""
    return PrimeFieldPoly(modulus, (-1,) + (0,) * (n - 1) + (1,))


def poly_gcd(f: PrimeFieldPoly, g: PrimeFieldPoly) -> PrimeFieldPoly:
    """Monic gcd via the Euclidean algorithm."""
    f._check(g)
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _monic_polys(q: int, degree: int):
    """Yield all monic polynomials of the given degree over F_q.

    Low-degree coefficients vary fastest in lexicographic order
    (constant term first), so the first irreducible found is the
    canonical lexicographically-least one.
    """
    total = q**degree
    for code in range(total):
        coeffs = []
        c = code
        for _ in range(degree):
            coeffs.append(c % q)
            c //= q
        yield PrimeFieldPoly(q, tuple(coeffs) + (1,))


@lru_cache(maxsize=None)
def _irreducibles_upto(q: int, max_degree: int) -> tuple[PrimeFieldPoly, ...]:
    """All monic irreducibles over F_q of degree <= max_degree, by trial division."""
    found: list[PrimeFieldPoly] = []
    for d in range(1, max_degree + 1):
        for cand in _monic_polys(q, d):
            if all(
                not (cand % p).is_zero() for p in found if p.degree <= d // 2
            ):
                found.append(cand)
    return tuple(found)


def is_irreducible(f: PrimeFieldPoly) -> bool:
    """Irreducibility by exhaustive trial division."""
    if f.degree < 1:
        return False
    _guard(f)
    f = f.monic()
    return all(
        not (f % p).is_zero() for p in _irreducibles_upto(f.modulus, f.degree // 2)
    )


def least_irreducible(q: int, degree: int) -> PrimeFieldPoly:
    """Lexicographically least monic irreducible of the given degree over F_q."""
    if degree == 1:
        return PrimeFieldPoly(q, (0, 1))
    for cand in _monic_polys(q, degree):
        if is_irreducible(cand):
            return cand
    raise AssertionError("irreducibles exist in every degree")  # pragma: no cover


def _guard(f: PrimeFieldPoly) -> None:
    q, d = f.modulus, f.degree
    if d > _FACTOR_DEG_LIMIT or q > _FACTOR_MOD_LIMIT or q ** (d // 2) > _FACTOR_SEARCH_LIMIT:
        raise SizeLimitError(
            f"degree {d} over F_{q} exceeds the trial-division search bound"
        )


def factor(f: PrimeFieldPoly) -> list[tuple[PrimeFieldPoly, int]]:
    """Complete factorization into monic irreducibles with multiplicities.

    Trial division in increasing degree; sorted by (degree, coefficients).
    The product of the factors (times the leading coefficient) is f.
    """
    if f.degree < 1:
        raise ValueError("factor requires degree >= 1")
    _guard(f)
    rem = f.monic()
    out: list[tuple[PrimeFieldPoly, int]] = []
    for p in _irreducibles_upto(f.modulus, f.degree // 2):
        if p.degree > rem.degree:
            break
        mult = 0
        while True:
            quo, r = divmod(rem, p)
            if not r.is_zero():
                break
            rem = quo
            mult += 1
        if mult:
            out.append((p, mult))
    if rem.degree >= 1:
        out.append((rem, 1))  # remainder has no factor of degree <= deg(f)/2
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


@dataclass(frozen=True)
class CyclotomicDecomposition:
    """Degrees of the distinct irreducible factors of x^(p^k) - 1 over F_q."""

    q: int
    p: int
    k: int
    degrees: tuple[int, ...]

    @property
    def unit_group_orders(self) -> tuple[int, ...]:
        """Orders q^(m_i) - 1 of the cyclic factors of the quotient's unit group."""
        return tuple(self.q**m - 1 for m in self.degrees)


class HypothesisViolationError(ValueError):
    pass


def cyclotomic_decomposition(q: int, p: int, k: int) -> CyclotomicDecomposition:
    """Factor x^(p^k) - 1 over F_q (q != p) and collect the factor degrees.

    The quotient F_q[x]/(x^(p^k) - 1) is then a product of fields
    F_{q^(m_i)}, so its unit group is the product of C_{q^(m_i) - 1}.
    """
    if not (is_prime(q) and is_prime(p)):
        raise ValueError("q and p must be prime")
    if q == p:
        raise HypothesisViolationError(
            "q = p makes x^(p^k) - 1 inseparable; the field decomposition fails"
        )
    if k < 1:
        raise ValueError("k must be >= 1")
    n = p**k
    f = x_pow_minus_one(q, n)
    factors = factor(f)
    if any(mult != 1 for _, mult in factors):
        raise AssertionError("x^(p^k) - 1 must be squarefree for q != p")
    degrees = tuple(sorted(g.degree for g, _ in factors))
    assert sum(degrees) == n
    return CyclotomicDecomposition(q=q, p=p, k=k, degrees=degrees)


# ---------------------------------------------------------------------------
# Characteristic-zero obstruction checks, in exact arithmetic.


def _zmul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _zmod_x4_plus_1(a: list[int]) -> list[int]:
    """Reduce an integer polynomial mod x^4 + 1 (x^4 -> -1)."""
    out = [0, 0, 0, 0]
    for i, c in enumerate(a):
        q, r = divmod(i, 4)
        out[r] += c if q % 2 == 0 else -c
    return out


def char0_inverse_identity() -> bool:
    """(1 - x^2 + x^3)(1 + x + x^2) = 1 + x(x^4 + 1), so = 1 mod (x^4 + 1)."""
    u = [1, 0, -1, 1]
    v = [1, 1, 1]
    prod = _zmul(u, v)
    if prod != [1, 1, 0, 0, 0, 1]:  # 1 + x + x^5
        return False
    return _zmod_x4_plus_1(prod) == [1, 0, 0, 0]


class Quad2:
    """Exact element a + b*sqrt(2) + c*i + d*sqrt(2)*i of Q(sqrt(2), i)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)

    def __add__(self, o: "Quad2") -> "Quad2":
        return Quad2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __mul__(self, o: "Quad2") -> "Quad2":
        # (a + b r + c i + d r i)(a' + b' r + c' i + d' r i), r^2 = 2, i^2 = -1
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = o.a, o.b, o.c, o.d
        return Quad2(
            a * e + 2 * b * f - c * g - 2 * d * h,
            a * f + b * e - c * h - d * g,
            a * g + c * e + 2 * b * h + 2 * d * f,
            a * h + d * e + b * g + c * f,
        )

    def conj(self) -> "Quad2":
        """Complex conjugate: i -> -i."""
        return Quad2(self.a, self.b, -self.c, -self.d)

    def __eq__(self, o) -> bool:
        return (self.a, self.b, self.c, self.d) == (o.a, o.b, o.c, o.d)

    def __repr__(self) -> str:
        return f"Quad2({self.a}, {self.b}, {self.c}, {self.d})"


def squared_modulus_of_zeta8_sum(terms: int = 3) -> tuple[int, int]:
    """|1 + z + z^2 + ... (terms powers of z)|^2 for z = e^(i pi/4), exactly.

    z = (sqrt(2)/2)(1 + i); the result lands in Z[sqrt(2)] and is returned
    as (a, b) meaning a + b*sqrt(2).
    """
    zeta = Quad2(0, Fraction(1, 2), 0, Fraction(1, 2))
    total = Quad2(0)
    power = Quad2(1)
    for _ in range(terms):
        total = total + power
        power = power * zeta
    norm = total * total.conj()
    if norm.c != 0 or norm.d != 0:
        raise AssertionError("squared modulus must be real")
    if norm.a.denominator != 1 or norm.b.denominator != 1:
        raise AssertionError("squared modulus must be integral here")
    return (int(norm.a), int(norm.b))


def zeta8_unit_circle_check() -> tuple[int, int]:
    """|1 + zeta_8 + zeta_8^2|^2 as (a, b) = a + b*sqrt(2); equals (3, 2) != 1."""
    return squared_modulus_of_zeta8_sum(3)
