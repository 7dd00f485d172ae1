"""Exact integer predicates and solvers for prime arithmetic.

Everything here is unbounded exact integer arithmetic; no floats.  Inputs
are desk-scale, but primality must handle Mersenne candidates up to
2^64 - 1, so trial division is backed by a deterministic Miller-Rabin
witness set that is provably correct below 3.3 * 10^24.
"""

from __future__ import annotations

from dataclasses import dataclass

# Deterministic Miller-Rabin witnesses for n < 3,317,044,064,679,887,385,961,981
# (Sorenson & Webster).  Far beyond anything this package ever tests.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981

_SMALL_PRIME_LIMIT = 1_000_000


@dataclass(frozen=True)
class PrimePowerEquationSolution:
    """A solution of q^m - 1 = p^r with p prime, m, r >= 1."""

    m: int
    p: int
    r: int


def is_prime(n: int) -> bool:
    """Deterministic primality test for nonnegative n."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < _SMALL_PRIME_LIMIT:
        d = 41
        while d * d <= n:
            if n % d == 0:
                return False
            d += 2
        return True
    if n >= _MR_LIMIT:
        raise ValueError(f"primality test limited to n < {_MR_LIMIT}, got {n}")
    # Miller-Rabin with a witness set proven deterministic below _MR_LIMIT.
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def is_mersenne_prime(p: int) -> bool:
    """True iff p is prime and p + 1 is a power of 2."""
    return p >= 2 and _is_power_of_two(p + 1) and is_prime(p)


def is_fermat_prime(q: int) -> bool:
    """True iff q is prime and q - 1 = 2^k for some k >= 1."""
    return q >= 3 and _is_power_of_two(q - 1) and is_prime(q)


def fermat_primes_upto(bound: int) -> list[int]:
    """All Fermat primes <= bound (only five are known; bound keeps it finite)."""
    out = []
    k = 1
    while (1 << k) + 1 <= bound:
        q = (1 << k) + 1
        if is_prime(q):
            out.append(q)
        k += 1
    return out


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; n >= 1, desk-scale."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(n: int) -> int:
    """Count of integers in [1, n] coprime to n."""
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def has_cyclic_units_mod(c: int) -> bool:
    """True iff the multiplicative group of integers mod c is cyclic.

    Equivalently c in {1, 2, 4} or c = q^r or 2*q^r for an odd prime q.
    (c = 1 gives the zero ring, whose trivial unit group counts as cyclic.)
    """
    if c < 1:
        raise ValueError("has_cyclic_units_mod requires c >= 1")
    if c in (1, 2, 4):
        return True
    if c % 2 == 0:
        c //= 2
        if c % 2 == 0:
            return False
    factors = factorize(c)
    return len(factors) == 1 and next(iter(factors)) % 2 == 1


def integer_nth_root(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0, exact integer arithmetic."""
    if n < 0 or k < 1:
        raise ValueError("integer_nth_root requires n >= 0, k >= 1")
    if n < 2 or k == 1:
        return n
    hi = 1 << (n.bit_length() // k + 1)
    lo = 0
    while lo < hi - 1:
        mid = (lo + hi) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid
    return lo


def as_prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, r) with n = p^r and p prime, or None.

    Avoids factoring n: tests exact r-th roots for every r up to log2(n)
    and checks primality of the root only.
    """
    if n < 2:
        return None
    for r in range(n.bit_length(), 0, -1):
        p = integer_nth_root(n, r)
        if p**r == n and is_prime(p):
            return (p, r)
    return None


def solve_power_equation(q: int, m_bound: int) -> list[PrimePowerEquationSolution]:
    """All (m, p, r) with m <= m_bound, p prime, r >= 1 and q^m - 1 = p^r."""
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if not 1 <= m_bound <= 64:
        raise ValueError("m_bound must be in [1, 64]")
    solutions = []
    for m in range(1, m_bound + 1):
        n = q**m - 1
        pp = as_prime_power(n)
        if pp is not None:
            solutions.append(PrimePowerEquationSolution(m=m, p=pp[0], r=pp[1]))
    return solutions
