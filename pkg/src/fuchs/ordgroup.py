"""Linearly ordered torsion-free abelian groups and the group algebra F_2[G].

Two concrete families cover the package's needs: integer lattices Z^r
under lexicographic order, and subgroups of Q whose denominators are
products of a fixed finite prime set (Z, Z[1/2], ... ) under numeric
order.  Group algebra elements are finite mod-2 support sets; the
extremal-term argument makes every unit a single group element.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import SpecMismatchError
from .numtheory import factorize, is_prime

LT, EQ, GT = -1, 0, 1


@dataclass(frozen=True)
class OrderedGroupSpec:
    """Either an integer lattice of some rank, or a rational subgroup."""

    kind: str  # "lattice" | "rational"
    rank: int = 1
    denominator_primes: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.kind not in ("lattice", "rational"):
            raise ValueError(f"unknown ordered-group kind {self.kind!r}")
        if self.kind == "lattice" and self.rank < 1:
            raise ValueError("lattice rank must be >= 1")
        if self.kind == "rational":
            for p in self.denominator_primes:
                if not is_prime(p):
                    raise ValueError(f"denominator set must contain primes, got {p}")

    def identity(self):
        return (0,) * self.rank if self.kind == "lattice" else Fraction(0)

    def validate_element(self, g) -> None:
        if self.kind == "lattice":
            if not (isinstance(g, tuple) and len(g) == self.rank
                    and all(isinstance(c, int) for c in g)):
                raise ValueError(f"not a rank-{self.rank} lattice vector: {g!r}")
        else:
            if not isinstance(g, Fraction):
                raise ValueError(f"rational-group elements must be Fraction, got {g!r}")
            denom = g.denominator
            if denom > 1:
                bad = set(factorize(denom)) - self.denominator_primes
                if bad:
                    raise ValueError(
                        f"denominator primes {sorted(bad)} not allowed in this group"
                    )

    def add(self, a, b):
        if self.kind == "lattice":
            return tuple(x + y for x, y in zip(a, b))
        return a + b

    def neg(self, a):
        if self.kind == "lattice":
            return tuple(-x for x in a)
        return -a

    def describe(self) -> str:
        if self.kind == "lattice":
            return "Z" if self.rank == 1 else f"Z^{self.rank}"
        if not self.denominator_primes:
            return "Z"
        inv = ",".join(f"1/{p}" for p in sorted(self.denominator_primes))
        return f"Z[{inv}]"


def integer_lattice(rank: int = 1) -> OrderedGroupSpec:
    return OrderedGroupSpec(kind="lattice", rank=rank)


def rational_subgroup(denominator_primes) -> OrderedGroupSpec:
    return OrderedGroupSpec(
        kind="rational", denominator_primes=frozenset(denominator_primes)
    )


def _check_spec(spec: OrderedGroupSpec, other: OrderedGroupSpec) -> None:
    if spec != other:
        raise SpecMismatchError(
            f"group specs differ: {spec.describe()} vs {other.describe()}"
        )


def compare(spec: OrderedGroupSpec, a, b) -> int:
    """Total translation-invariant order: lex on lattices, numeric on rationals."""
    spec.validate_element(a)
    spec.validate_element(b)
    if a == b:
        return EQ
    return LT if a < b else GT


def ordered_product_inequality_check(spec: OrderedGroupSpec, a, b, c, d) -> bool:
    """Strict monotonicity of the group operation: a < b and c <= d give a+c < b+d."""
    if not (compare(spec, a, b) == LT and compare(spec, c, d) in (LT, EQ)):
        raise ValueError("precondition violated: need a < b and c <= d")
    return compare(spec, spec.add(a, c), spec.add(b, d)) == LT


@dataclass(frozen=True)
class GroupAlgebraElement:
    """Element of F_2[G]: a finite (sorted, duplicate-free) support set."""

    spec: OrderedGroupSpec
    support: tuple

    def __post_init__(self):
        for g in self.support:
            self.spec.validate_element(g)
        object.__setattr__(self, "support", tuple(sorted(set(self.support))))

    def is_zero(self) -> bool:
        return not self.support

    def __str__(self) -> str:
        inner = ", ".join(str(g) for g in self.support)
        return "{" + inner + "}"


def ga_element(spec: OrderedGroupSpec, support) -> GroupAlgebraElement:
    return GroupAlgebraElement(spec, tuple(support))


def ga_zero(spec: OrderedGroupSpec) -> GroupAlgebraElement:
    return GroupAlgebraElement(spec, ())


def ga_one(spec: OrderedGroupSpec) -> GroupAlgebraElement:
    return GroupAlgebraElement(spec, (spec.identity(),))


def ga_add(f: GroupAlgebraElement, g: GroupAlgebraElement) -> GroupAlgebraElement:
    """Sum in characteristic 2: symmetric difference of supports."""
    _check_spec(f.spec, g.spec)
    return GroupAlgebraElement(f.spec, tuple(set(f.support) ^ set(g.support)))


def ga_mul(f: GroupAlgebraElement, g: GroupAlgebraElement) -> GroupAlgebraElement:
    """Convolution: pairwise sums of supports, kept when multiplicity is odd."""
    _check_spec(f.spec, g.spec)
    counts: dict = {}
    add = f.spec.add
    for a in f.support:
        for b in g.support:
            s = add(a, b)
            counts[s] = counts.get(s, 0) + 1
    return GroupAlgebraElement(
        f.spec, tuple(s for s, c in counts.items() if c % 2 == 1)
    )


def ga_is_unit(f: GroupAlgebraElement) -> bool:
    """Units of F_2[G] over an ordered G are exactly the single group elements."""
    return len(f.support) == 1


def ga_inverse(f: GroupAlgebraElement) -> GroupAlgebraElement:
    if not ga_is_unit(f):
        raise ValueError(f"{f} is not a unit of F_2[{f.spec.describe()}]")
    return GroupAlgebraElement(f.spec, (f.spec.neg(f.support[0]),))


def extremal_terms_survive(f: GroupAlgebraElement, g: GroupAlgebraElement) -> bool:
    """min(f)+min(g) and max(f)+max(g) both survive in the product.

    This is what forces all units to be trivial: the extreme pairwise
    sums are achieved exactly once, so they cannot cancel mod 2.
    """
    _check_spec(f.spec, g.spec)
    if f.is_zero() or g.is_zero():
        raise ValueError("extremal terms need nonempty supports")
    prod = set(ga_mul(f, g).support)
    lo = f.spec.add(f.support[0], g.support[0])
    hi = f.spec.add(f.support[-1], g.support[-1])
    return lo in prod and hi in prod


# ---------------------------------------------------------------------------
# Seeded random sampling for the property suites


def random_element(spec: OrderedGroupSpec, rng: random.Random,
                   coord_bound: int = 50, max_denom_exp: int = 5):
    if spec.kind == "lattice":
        return tuple(rng.randint(-coord_bound, coord_bound) for _ in range(spec.rank))
    num = rng.randint(-coord_bound, coord_bound)
    denom = 1
    for p in sorted(spec.denominator_primes):
        denom *= p ** rng.randint(0, max_denom_exp)
    return Fraction(num, denom)


def random_ga_element(spec: OrderedGroupSpec, rng: random.Random,
                      min_support: int, max_support: int) -> GroupAlgebraElement:
    target = rng.randint(min_support, max_support)
    support = set()
    while len(support) < target:
        support.add(random_element(spec, rng))
    return GroupAlgebraElement(spec, tuple(support))
