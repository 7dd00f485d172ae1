"""Unit-group enumeration and abelian structure recovery.

Units are found by a direct scan: for each candidate inverse v, multiply
every element by v at once (a small matrix product over the structure
constants) and collect the rows that land on 1.  Invariant factors are
recovered from order statistics: counting solutions of u^(l^j) = 1 per
prime l pins down each primary partition exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SizeLimitError
from .finring import RingElement, TableRing, max_ring_order
from .numtheory import factorize


@dataclass(frozen=True)
class AbelianGroupStructure:
    """Invariant factors m_1 | m_2 | ... | m_s, all >= 2; () is trivial."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        fs = self.invariant_factors
        if any(m < 2 for m in fs):
            raise ValueError("invariant factors must be >= 2")
        for a, b in zip(fs, fs[1:]):
            if b % a != 0:
                raise ValueError(f"divisibility chain broken: {a} does not divide {b}")

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def render(self) -> str:
        if not self.invariant_factors:
            return "C_1"
        return " x ".join(f"C_{m}" for m in self.invariant_factors)


def is_cyclic(g: AbelianGroupStructure) -> bool:
    return len(g.invariant_factors) <= 1


def is_indecomposable(g: AbelianGroupStructure) -> bool:
    """Trivial, or cyclic of prime-power order."""
    fs = g.invariant_factors
    if not fs:
        return True
    if len(fs) > 1:
        return False
    return len(factorize(fs[0])) == 1


def _ring_arrays(R: TableRing):
    """(elements, structure tensor, moduli) as numpy arrays."""
    n, k = R.order, R.rank
    if n > max_ring_order():
        raise SizeLimitError(f"ring order {n} exceeds guardrail {max_ring_order()}")
    mods = np.array(R.orders, dtype=np.int64)
    table = np.array(R.products, dtype=np.int64)  # (k, k, k)
    # mixed-radix decode of all element indices
    elems = np.zeros((n, k), dtype=np.int64)
    idx = np.arange(n)
    for pos in range(k - 1, -1, -1):
        elems[:, pos] = idx % R.orders[pos]
        idx //= R.orders[pos]
    return elems, table, mods


def _mul_rows(a: np.ndarray, b: np.ndarray, table: np.ndarray, mods: np.ndarray):
    """Rowwise products of paired element arrays (n, k) x (n, k)."""
    out = np.einsum("ni,nj,ijl->nl", a, b, table)
    return out % mods


def units(R: TableRing) -> list[RingElement]:
    """All invertible elements, sorted by coefficient vector."""
    U = _unit_array(R)
    return [R.element(tuple(int(c) for c in row)) for row in U]


_UNIT_CACHE: dict[TableRing, np.ndarray] = {}


def _unit_array(R: TableRing) -> np.ndarray:
    cached = _UNIT_CACHE.get(R)
    if cached is not None:
        return cached
    elems, table, mods = _ring_arrays(R)
    n, k = elems.shape
    one = np.zeros(k, dtype=np.int64)
    one[0] = 1 % R.orders[0]
    unit_mask = np.zeros(n, dtype=bool)
    for v in range(n):
        M = np.tensordot(elems[v], table, axes=(0, 0))
        prods = (elems @ M) % mods
        unit_mask |= np.all(prods == one, axis=1)
    result = elems[unit_mask]
    if len(_UNIT_CACHE) < 64:
        _UNIT_CACHE[R] = result
    return result


def _pow_rows(base: np.ndarray, e: int, table: np.ndarray, mods: np.ndarray):
    """Rowwise e-th powers of an (n, k) element array, square-and-multiply."""
    n, k = base.shape
    result = np.zeros((n, k), dtype=np.int64)
    result[:, 0] = 1 % mods[0]
    acc = base.copy()
    while e:
        if e & 1:
            result = _mul_rows(result, acc, table, mods)
        e >>= 1
        if e:
            acc = _mul_rows(acc, acc, table, mods)
    return result


def group_structure(R: TableRing) -> AbelianGroupStructure:
    """Invariant factors of the unit group of R."""
    elems, table, mods = _ring_arrays(R)
    U = _unit_array(R)
    n_units = U.shape[0]
    if n_units == 1:
        return AbelianGroupStructure(())
    one = np.zeros(R.rank, dtype=np.int64)
    one[0] = 1 % R.orders[0]

    # Per prime l dividing |U|: project onto the l-primary component via
    # u -> u^(|U| / l^a) (a cofactor-to-one surjection), then read the
    # primary partition off the counts #{x : x^(l^j) = 1} = l^(sum min(lam_i, j)).
    partitions: dict[int, list[int]] = {}
    for ell, a in sorted(factorize(n_units).items()):
        cofactor = n_units // ell**a
        primary = _pow_rows(U, cofactor, table, mods)
        s = [0]  # s[j] = sum_i min(lam_i, j)
        for j in range(1, a + 1):
            solved = int(
                np.all(_pow_rows(primary, ell**j, table, mods) == one, axis=1).sum()
            )
            count, rem = divmod(solved, cofactor)
            assert rem == 0
            sj = count.bit_length() - 1 if ell == 2 else round(math.log(count, ell))
            assert ell**sj == count, "solution count must be an l-power"
            s.append(sj)
        conj = [s[j] - s[j - 1] for j in range(1, a + 1)]  # #{i : lam_i >= j}
        partition = []
        for exp in range(a, 0, -1):
            cnt = conj[exp - 1] - (conj[exp] if exp < a else 0)
            partition.extend([exp] * cnt)
        partitions[ell] = sorted(partition, reverse=True)

    n_factors = max(len(p) for p in partitions.values())
    invariants = []
    for slot in range(n_factors):
        m = 1
        for ell, partition in partitions.items():
            if slot < len(partition):
                m *= ell ** partition[slot]
        invariants.append(m)
    invariants.reverse()  # ascending divisibility chain
    result = AbelianGroupStructure(tuple(invariants))
    assert result.order == n_units
    return result


def unit_count(R: TableRing) -> int:
    return _unit_array(R).shape[0]


def element_order(u: RingElement, group_order: int) -> int:
    """Multiplicative order of a unit, given any multiple of it."""
    order = group_order
    for p in factorize(group_order):
        while order % p == 0 and (u ** (order // p)).is_one():
            order //= p
    return order
