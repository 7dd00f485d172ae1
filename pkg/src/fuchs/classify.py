"""Decide which indecomposable abelian groups arise as unit groups of rings.

The finite answer: C_{p^n} is realizable iff p^n = 8, or p^n = q - 1 for
a Fermat prime q, or n = 1 and p is a Mersenne prime.  Quasi-cyclic
groups are never realizable.  Torsion-free groups are always realizable,
in characteristic 2 only, via the group algebra F_2[G].  Each realizable
finite case gets a concrete witness ring whose unit group is recomputed
and checked before the verdict is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import finring, unitgroup
from .errors import FuchsError, NoWitnessError
from .finring import TableRing
from .numtheory import (
    factorize,
    fermat_primes_upto,
    is_fermat_prime,
    is_mersenne_prime,
    is_prime,
)
from .ordgroup import OrderedGroupSpec
from .unitgroup import AbelianGroupStructure

INFINITY = "inf"


class GroupKind(Enum):
    CYCLIC_PRIME_POWER = "cyclic-prime-power"
    QUASI_CYCLIC = "quasi-cyclic"
    FINITE_ABELIAN = "finite-abelian"
    TORSION_FREE_ORDERED = "torsion-free-ordered"


@dataclass(frozen=True)
class GroupDescriptor:
    kind: GroupKind
    p: int | None = None
    n: int | None = None
    factors: tuple[int, ...] | None = None
    ordered_group: OrderedGroupSpec | None = None

    def __post_init__(self):
        if self.kind in (GroupKind.CYCLIC_PRIME_POWER, GroupKind.QUASI_CYCLIC):
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"p must be prime, got {self.p}")
            if self.kind is GroupKind.CYCLIC_PRIME_POWER and (self.n is None or self.n < 1):
                raise ValueError("cyclic prime power needs n >= 1")
        elif self.kind is GroupKind.FINITE_ABELIAN:
            if self.factors is None:
                raise ValueError("finite abelian descriptor needs invariant factors")
            AbelianGroupStructure(self.factors)  # validates the chain
        elif self.ordered_group is None:
            raise ValueError("torsion-free descriptor needs an ordered-group spec")

    def render(self) -> str:
        if self.kind is GroupKind.CYCLIC_PRIME_POWER:
            return f"C_{self.p ** self.n}"
        if self.kind is GroupKind.QUASI_CYCLIC:
            return f"C_{self.p}^inf"
        if self.kind is GroupKind.FINITE_ABELIAN:
            return AbelianGroupStructure(self.factors).render()
        return self.ordered_group.describe()


def cyclic(m: int) -> GroupDescriptor:
    """Descriptor for C_m: prime-power kind when possible, else invariant factors."""
    if m < 1:
        raise ValueError("cyclic group order must be >= 1")
    if m == 1:
        return GroupDescriptor(kind=GroupKind.FINITE_ABELIAN, factors=())
    fac = factorize(m)
    if len(fac) == 1:
        ((p, n),) = fac.items()
        return GroupDescriptor(kind=GroupKind.CYCLIC_PRIME_POWER, p=p, n=n)
    return GroupDescriptor(kind=GroupKind.FINITE_ABELIAN, factors=(m,))


def quasi_cyclic(p: int) -> GroupDescriptor:
    return GroupDescriptor(kind=GroupKind.QUASI_CYCLIC, p=p)


def torsion_free(spec: OrderedGroupSpec) -> GroupDescriptor:
    return GroupDescriptor(kind=GroupKind.TORSION_FREE_ORDERED, ordered_group=spec)


@dataclass(frozen=True)
class WitnessDescriptor:
    kind: str  # "table-ring" | "symbolic"
    ring: TableRing | None = None
    symbol: str | None = None  # "Z", "Z[i]", "F2[G]"

    def render(self) -> str:
        return self.symbol if self.kind == "symbolic" else self.ring.label


@dataclass(frozen=True)
class RealizabilityVerdict:
    realizable: bool
    characteristics: tuple[int, ...]  # admissible characteristics (within bound)
    witness: WitnessDescriptor | None
    reason: str  # governing-rule tag

    def witness_label(self) -> str | None:
        return self.witness.render() if self.witness else None


# Governing-rule tags used in verdicts and reports.
REASON_CHAR_RESTRICTION = "characteristic-restriction"
REASON_CHAR0 = "char-0-classification"
REASON_CHAR2 = "char-2-classification"
REASON_CHAR4 = "char-4-classification"
REASON_FERMAT_CHAR = "fermat-characteristic"
REASON_CHAR_2Q = "char-2q-reduction"
REASON_SUMMARY = "cyclic-summary"
REASON_QUASI_CYCLIC = "quasi-cyclic-excluded"
REASON_TORSION_FREE = "torsion-free-group-algebra"


def admissible_characteristics(d: GroupDescriptor, char_bound: int) -> set[int]:
    """Candidate ring characteristics for a (quasi-)cyclic p-group unit group.

    Always a subset of {0, 2, 4} union {q, 2q : q Fermat prime}; when the
    characteristic is not 2 the prime p must be 2, so odd p leaves {2}.
    """
    if d.kind not in (GroupKind.CYCLIC_PRIME_POWER, GroupKind.QUASI_CYCLIC):
        raise ValueError("admissible_characteristics applies to (quasi-)cyclic p-groups")
    if d.p != 2:
        return {2}
    out = {0, 2, 4}
    for q in fermat_primes_upto(char_bound):
        out.add(q)
        if 2 * q <= char_bound:
            out.add(2 * q)
    return {c for c in out if c <= char_bound}


def _verified_table_witness(ring: TableRing, expected: tuple[int, ...],
                            expected_char: int) -> WitnessDescriptor:
    assert ring.characteristic == expected_char, (ring.label, expected_char)
    structure = unitgroup.group_structure(ring)
    assert structure.invariant_factors == expected, (
        ring.label, structure.invariant_factors, expected)
    return WitnessDescriptor(kind="table-ring", ring=ring)


def _symbolic(symbol: str) -> WitnessDescriptor:
    return WitnessDescriptor(kind="symbolic", symbol=symbol)


def realizable_cyclic(p: int, n) -> RealizabilityVerdict:
    """Is C_{p^n} (n = "inf" for quasi-cyclic) the unit group of some ring?"""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if n == INFINITY:
        return RealizabilityVerdict(
            realizable=False,
            characteristics=(),
            witness=None,
            reason=REASON_QUASI_CYCLIC,
        )
    if n < 1:
        raise ValueError("n must be >= 1 or 'inf'")
    size = p**n
    if size == 8:
        return RealizabilityVerdict(
            True, (3, 6), _verified_table_witness(finring.mk_finite_field(3, 2), (8,), 3),
            REASON_SUMMARY)
    if p == 2 and is_fermat_prime(size + 1):
        q = size + 1
        chars = (0, 2, 4, q, 2 * q) if size in (2, 4) else (q, 2 * q)
        witness = _verified_table_witness(finring.mk_finite_field(q, 1), (size,), q)
        return RealizabilityVerdict(True, chars, witness, REASON_SUMMARY)
    if n == 1 and is_mersenne_prime(p):
        witness = _verified_table_witness(finring.mk_finite_field(2, (p + 1).bit_length() - 1),
                                          (p,), 2)
        return RealizabilityVerdict(True, (2,), witness, REASON_SUMMARY)
    return RealizabilityVerdict(False, (), None, REASON_SUMMARY)


def _table_rows_for_char(c: int) -> dict[tuple[int, ...], "WitnessBuilder"]:
    """Realizable invariant factors -> witness builder, per characteristic."""
    rows: dict[tuple[int, ...], WitnessBuilder] = {}
    if c == 0:
        rows[(2,)] = WitnessBuilder(symbolic="Z")
        rows[(4,)] = WitnessBuilder(symbolic="Z[i]")
    elif c == 2:
        rows[()] = WitnessBuilder(lambda: finring.mk_finite_field(2, 1))
        rows[(2,)] = WitnessBuilder(lambda: finring.mk_poly_quotient(2, (2, 2), (0, 0)))
        rows[(4,)] = WitnessBuilder(lambda: finring.mk_poly_quotient(2, (2, 2, 2), (0, 0, 0)))
        # C_p for Mersenne p is handled separately (infinitely many rows)
    elif c == 4:
        rows[(2,)] = WitnessBuilder(lambda: finring.mk_zn(4))
        rows[(4,)] = WitnessBuilder(lambda: finring.mk_poly_quotient(4, (4, 2), (2, 0)))
    elif c == 3:
        rows[(2,)] = WitnessBuilder(lambda: finring.mk_finite_field(3, 1))
        rows[(8,)] = WitnessBuilder(lambda: finring.mk_finite_field(3, 2))
    elif c == 6:
        rows[(2,)] = WitnessBuilder(
            lambda: finring.mk_product(finring.mk_finite_field(3, 1), finring.mk_finite_field(2, 1)))
        rows[(8,)] = WitnessBuilder(
            lambda: finring.mk_product(finring.mk_finite_field(3, 2), finring.mk_finite_field(2, 1)))
    elif c > 3 and is_fermat_prime(c):
        rows[(c - 1,)] = WitnessBuilder(lambda: finring.mk_finite_field(c, 1))
    elif c % 2 == 0 and c // 2 > 3 and is_fermat_prime(c // 2):
        q = c // 2
        rows[(q - 1,)] = WitnessBuilder(
            lambda: finring.mk_product(finring.mk_finite_field(q, 1), finring.mk_finite_field(2, 1)))
    return rows


@dataclass
class WitnessBuilder:
    build: object = None
    symbolic: str | None = None

    def make(self) -> WitnessDescriptor:
        if self.symbolic is not None:
            return _symbolic(self.symbolic)
        return WitnessDescriptor(kind="table-ring", ring=self.build())


def _reason_for_char(c: int) -> str:
    if c == 0:
        return REASON_CHAR0
    if c == 2:
        return REASON_CHAR2
    if c == 4:
        return REASON_CHAR4
    if c % 2 == 1:
        return REASON_FERMAT_CHAR
    return REASON_CHAR_2Q


def _descriptor_invariants(d: GroupDescriptor) -> tuple[int, ...] | None:
    """Invariant factors of a finite descriptor, or None for infinite kinds."""
    if d.kind is GroupKind.CYCLIC_PRIME_POWER:
        return (d.p**d.n,)
    if d.kind is GroupKind.FINITE_ABELIAN:
        return d.factors
    return None


def realizable_with_char(d: GroupDescriptor, c: int) -> RealizabilityVerdict:
    """Table row lookup: is d the unit group of a ring of characteristic c?

    Finite witnesses are concrete table rings; their unit groups are
    recomputed and compared to d before the verdict is returned.
    """
    if c < 0:
        raise ValueError("characteristic must be 0 or positive")
    reason = _reason_for_char(c)
    if d.kind is GroupKind.QUASI_CYCLIC:
        return RealizabilityVerdict(False, (), None, REASON_QUASI_CYCLIC)
    if d.kind is GroupKind.TORSION_FREE_ORDERED:
        if c == 2:
            return RealizabilityVerdict(
                True, (2,), _symbolic("F2[G]"), REASON_TORSION_FREE)
        # -1 would be a unit of order 2 in any other characteristic
        return RealizabilityVerdict(False, (), None, REASON_TORSION_FREE)

    invariants = _descriptor_invariants(d)
    rows = _table_rows_for_char(c)
    if invariants in rows:
        builder = rows[invariants]
        witness = builder.make()
        if witness.kind == "table-ring":
            witness = _verified_table_witness(witness.ring, invariants, c)
        return RealizabilityVerdict(True, (c,), witness, reason)
    # the infinite family in characteristic 2: C_p for p Mersenne
    if (c == 2 and len(invariants) == 1 and is_mersenne_prime(invariants[0])):
        p = invariants[0]
        k = (p + 1).bit_length() - 1
        witness = _verified_table_witness(finring.mk_finite_field(2, k), (p,), 2)
        return RealizabilityVerdict(True, (2,), witness, reason)
    return RealizabilityVerdict(False, (), None, reason)


def decide(d: GroupDescriptor, char_bound: int = 600) -> RealizabilityVerdict:
    """Realizability of d over all characteristics at once.

    Complete for (quasi-)cyclic p-groups and torsion-free ordered groups.
    For other cyclic orders m only the sufficient criterion (m + 1 prime)
    is applied; remaining finite abelian groups raise, since no complete
    criterion is implemented for them.
    """
    if d.kind is GroupKind.QUASI_CYCLIC:
        return realizable_cyclic(d.p, INFINITY)
    if d.kind is GroupKind.CYCLIC_PRIME_POWER:
        return realizable_cyclic(d.p, d.n)
    if d.kind is GroupKind.TORSION_FREE_ORDERED:
        return realizable_with_char(d, 2)
    if d.factors == ():
        return realizable_with_char(d, 2)
    if len(d.factors) == 1:
        m = d.factors[0]
        if is_prime(m + 1):
            witness = _verified_table_witness(
                finring.mk_finite_field(m + 1, 1), (m,), m + 1)
            return RealizabilityVerdict(True, (m + 1,), witness, REASON_SUMMARY)
        raise FuchsError(
            f"no complete criterion for C_{m} (composite order, {m} + 1 not prime)"
        )
    raise FuchsError(
        f"no complete criterion for non-cyclic group {d.render()}"
    )


def witness(d: GroupDescriptor, c: int) -> WitnessDescriptor:
    """The witness ring for a realizable (group, characteristic) pair."""
    verdict = realizable_with_char(d, c)
    if not verdict.realizable:
        raise NoWitnessError(
            f"{d.render()} is not realizable in characteristic {c}",
            reason=verdict.reason,
        )
    return verdict.witness


def _cyclic_realizable(m: int) -> bool:
    """Realizability of C_m by the criteria this package implements.

    Prime-power orders are decided completely; other orders only via the
    finite-field sufficient condition (m + 1 prime), which covers the
    specialization examples.
    """
    if m == 1:
        return True
    if len(factorize(m)) == 1:
        ((p, n),) = factorize(m).items()
        return realizable_cyclic(p, n).realizable
    return is_prime(m + 1)


def specialization_counterexamples(bound: int) -> list[tuple[int, int]]:
    """Pairs (m, d): C_m realizable, C_d a subgroup that is not realizable.

    Scans cyclic groups of order <= bound.  Non-realizability is asserted
    only for prime-power d, where the classification is complete.
    """
    if bound < 1 or bound > 1 << 16:
        raise ValueError("bound must be in [1, 65536]")
    pairs = []
    for m in range(2, bound + 1):
        if not _cyclic_realizable(m):
            continue
        for d in sorted(_divisors(m)):
            if d == m or d == 1:
                continue
            if len(factorize(d)) != 1:
                continue  # complete criterion only for prime powers
            ((p, n),) = factorize(d).items()
            if not realizable_cyclic(p, n).realizable:
                pairs.append((m, d))
    return pairs


def _divisors(m: int) -> list[int]:
    divs = [1]
    for p, a in factorize(m).items():
        divs = [d * p**e for d in divs for e in range(a + 1)]
    return sorted(divs)


def verdict_json(d: GroupDescriptor, c: int | None,
                 verdict: RealizabilityVerdict) -> dict:
    """Stable JSON form of a verdict."""
    return {
        "group": d.render(),
        "char": c,
        "realizable": verdict.realizable,
        "witness": verdict.witness_label(),
        "reason": verdict.reason,
        "characteristics": sorted(verdict.characteristics),
    }
