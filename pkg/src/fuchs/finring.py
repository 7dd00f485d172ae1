"""Finite commutative unital rings presented by tables.

A TableRing is an additive group Z_{d_0} x ... x Z_{d_{k-1}} (with e_0
the unity, d_0 = characteristic) plus a structure-constant table giving
each product e_i * e_j in additive normal form.  Every constructor
validates the ring axioms exhaustively over the basis before returning,
so downstream code can trust any TableRing it is handed.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import (
    InvalidCharacteristicError,
    InvalidPresentationError,
    RingMismatchError,
    SizeLimitError,
)
from .numtheory import is_prime
from .polyfield import least_irreducible

DEFAULT_MAX_RING_ORDER = 1 << 20


def max_ring_order() -> int:
    """Size guardrail for element-enumerating operations (env-overridable)."""
    env = os.environ.get("FUCHS_MAX_RING_ORDER")
    return int(env) if env else DEFAULT_MAX_RING_ORDER


Coeffs = tuple[int, ...]


@dataclass(frozen=True)
class TableRing:
    """Finite commutative unital ring in additive normal form."""

    characteristic: int
    orders: Coeffs
    products: tuple[tuple[Coeffs, ...], ...]
    label: str

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    # -- elements ----------------------------------------------------------

    def normalize(self, coeffs) -> Coeffs:
        return tuple(c % d for c, d in zip(coeffs, self.orders))

    def element(self, coeffs) -> "RingElement":
        if len(coeffs) != self.rank:
            raise ValueError(f"expected {self.rank} coefficients")
        return RingElement(self, self.normalize(coeffs))

    def zero(self) -> "RingElement":
        return RingElement(self, (0,) * self.rank)

    def one(self) -> "RingElement":
        return RingElement(self, (1,) + (0,) * (self.rank - 1))

    def from_int(self, n: int) -> "RingElement":
        """The image of the integer n, i.e. n * 1."""
        return RingElement(self, self.normalize((n,) + (0,) * (self.rank - 1)))

    def index_of(self, coeffs: Coeffs) -> int:
        idx = 0
        for c, d in zip(coeffs, self.orders):
            idx = idx * d + c
        return idx

    def coeffs_at(self, index: int) -> Coeffs:
        out = []
        for d in reversed(self.orders):
            out.append(index % d)
            index //= d
        return tuple(reversed(out))

    def elements(self):
        """All elements in index order; guarded by the size limit."""
        if self.order > max_ring_order():
            raise SizeLimitError(
                f"ring order {self.order} exceeds guardrail {max_ring_order()}"
            )
        for i in range(self.order):
            yield RingElement(self, self.coeffs_at(i))

    # -- arithmetic on raw coefficient vectors ------------------------------

    def add_coeffs(self, a: Coeffs, b: Coeffs) -> Coeffs:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.orders))

    def neg_coeffs(self, a: Coeffs) -> Coeffs:
        return tuple((-x) % d for x, d in zip(a, self.orders))

    def mul_coeffs(self, a: Coeffs, b: Coeffs) -> Coeffs:
        out = [0] * self.rank
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = self.products[i]
            for j, bj in enumerate(b):
                if not bj:
                    continue
                f = ai * bj
                entry = row[j]
                for l in range(self.rank):
                    out[l] += f * entry[l]
        return tuple(x % d for x, d in zip(out, self.orders))

    # -- validation ---------------------------------------------------------

    def validation_failure(self) -> str | None:
        """None if the presentation is a genuine commutative unital ring.

        Otherwise a diagnostic naming the first failing condition/triple.
        """
        k = self.rank
        if k < 1:
            return "rank must be >= 1"
        if any(d < 1 for d in self.orders):
            return "generator orders must be positive"
        if self.orders[0] != self.characteristic:
            return "characteristic must equal the additive order of the unity"
        for i, d in enumerate(self.orders):
            if self.characteristic % d != 0:
                return f"order d_{i}={d} does not divide the characteristic"
        if len(self.products) != k or any(len(row) != k for row in self.products):
            return "products table must be rank x rank"
        for i in range(k):
            for j in range(k):
                entry = self.products[i][j]
                if len(entry) != k:
                    return f"products[{i}][{j}] has wrong length"
                if any(not 0 <= c < d for c, d in zip(entry, self.orders)):
                    return f"products[{i}][{j}] not in normal form"
                # well-definedness: gcd(d_i, d_j) annihilates e_i * e_j
                g = math.gcd(self.orders[i], self.orders[j])
                for l, c in enumerate(entry):
                    if (g * c) % self.orders[l] != 0:
                        return (
                            f"product e_{i}*e_{j} ill-defined: order {g} does not "
                            f"annihilate coefficient {c} at position {l}"
                        )
        for j in range(k):
            e_j = tuple(1 if l == j else 0 for l in range(k))
            if self.products[0][j] != e_j or self.products[j][0] != e_j:
                return f"e_0 is not a two-sided identity on e_{j}"
        for i in range(k):
            for j in range(i + 1, k):
                if self.products[i][j] != self.products[j][i]:
                    return f"commutativity fails on pair (e_{i}, e_{j})"
        basis = [tuple(1 if l == m else 0 for l in range(k)) for m in range(k)]
        for i in range(k):
            for j in range(k):
                ij = self.products[i][j]
                for l in range(k):
                    lhs = self.mul_coeffs(ij, basis[l])
                    rhs = self.mul_coeffs(basis[i], self.products[j][l])
                    if lhs != rhs:
                        return f"associativity fails on triple (e_{i}, e_{j}, e_{l})"
        return None

    def canonical_presentation(self) -> str:
        orders = ",".join(str(d) for d in self.orders)
        prods = ";".join(
            "|".join(",".join(str(c) for c in self.products[i][j]) for j in range(self.rank))
            for i in range(self.rank)
        )
        return f"char={self.characteristic}; orders={orders}; products={prods}"

    def __repr__(self) -> str:
        return f"TableRing({self.label!r}, order={self.order})"


@dataclass(frozen=True)
class RingElement:
    """An element of a TableRing, always in reduced normal form."""

    owner: TableRing
    coeffs: Coeffs

    def _check(self, other: "RingElement") -> None:
        if self.owner is not other.owner and self.owner != other.owner:
            raise RingMismatchError(
                f"operands from different rings: {self.owner.label} vs {other.owner.label}"
            )

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.owner, self.owner.add_coeffs(self.coeffs, other.coeffs))

    def __neg__(self) -> "RingElement":
        return RingElement(self.owner, self.owner.neg_coeffs(self.coeffs))

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.owner, self.owner.mul_coeffs(self.coeffs, other.coeffs))

    def __pow__(self, e: int) -> "RingElement":
        if e < 0:
            raise ValueError("negative powers not supported; use unit-group machinery")
        result = self.owner.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self == self.owner.one()

    def additive_order(self) -> int:
        n = 1
        for c, d in zip(self.coeffs, self.orders_of()):
            o = d // math.gcd(c, d) if c else 1
            n = n * o // math.gcd(n, o)
        return n

    def orders_of(self) -> Coeffs:
        return self.owner.orders

    def __repr__(self) -> str:
        return f"<{self.coeffs} in {self.owner.label}>"


# ---------------------------------------------------------------------------
# Constructors


def validate_axioms(ring: TableRing) -> bool:
    """True iff the table presents a commutative unital ring."""
    return ring.validation_failure() is None


def _validated(ring: TableRing) -> TableRing:
    failure = ring.validation_failure()
    if failure is not None:
        raise InvalidPresentationError(f"{ring.label}: {failure}")
    return ring


def mk_zn(c: int, label: str | None = None) -> TableRing:
    """The ring of integers mod c, rank 1."""
    if c < 2:
        raise InvalidCharacteristicError(f"Z_c needs c >= 2, got {c}")
    return _validated(
        TableRing(
            characteristic=c,
            orders=(c,),
            products=(((1,),),),
            label=label or (f"F{c}" if is_prime(c) else f"Z{c}"),
        )
    )


def _poly_quotient_label(c: int, orders: Coeffs, top: Coeffs) -> str:
    k = len(orders)
    base = f"F{c}" if is_prime(c) else f"Z{c}"

    def mono(i: int, coef: int) -> str:
        if i == 0:
            return str(coef)
        xs = "x" if i == 1 else f"x^{i}"
        return xs if coef == 1 else f"{coef}{xs}"

    rel = "x" if k == 1 else f"x^{k}"
    for i in range(k - 1, -1, -1):
        coef = top[i] % orders[i]
        if coef == 0:
            continue
        neg = (-coef) % orders[i]
        if neg < coef:
            rel += f"+{mono(i, neg)}"
        else:
            rel += f"-{mono(i, coef)}"
    rels = [rel]
    for i in range(1, k):
        if orders[i] != c:
            rels.append(mono(i, orders[i]))
    return f"{base}[x]/({','.join(rels)})"


def mk_poly_quotient(
    c: int, orders, top, label: str | None = None
) -> TableRing:
    """Quotient of Z_c[x] with basis 1, x, ..., x^(k-1) and x^k = top.

    orders[i] is the additive order of x^i (orders[0] = c); the relation
    orders[i] * x^i = 0 must be compatible with multiplication by x, which
    requires orders to be non-increasing in divisibility.
    """
    orders = tuple(orders)
    top = tuple(top)
    k = len(orders)
    if k < 1 or orders[0] != c:
        raise InvalidPresentationError("orders[0] must equal the characteristic")
    if len(top) != k:
        raise InvalidPresentationError("top must have one coefficient per basis power")
    if c < 2:
        raise InvalidCharacteristicError(f"characteristic must be >= 2, got {c}")
    for i, d in enumerate(orders):
        if d < 1 or c % d != 0:
            raise InvalidPresentationError(f"orders[{i}]={d} must divide {c}")
    # multiplication by x maps the x^i slot into the x^(i+1) slot, so the
    # annihilator must not shrink along powers
    for i in range(k - 1):
        if orders[i] % orders[i + 1] != 0:
            raise InvalidPresentationError(
                f"orders[{i + 1}] must divide orders[{i}] for x-multiplication "
                "to be well-defined"
            )
    top = tuple(t % d for t, d in zip(top, orders))
    # d_{k-1} * x^k = 0 must already hold in normal form
    for l, t in enumerate(top):
        if (orders[k - 1] * t) % orders[l] != 0:
            raise InvalidPresentationError(
                f"top coefficient {t} at position {l} is not annihilated by "
                f"{orders[k - 1]}; the presentation collapses"
            )

    # powers of x up to x^(2k-2), each in normal form
    powers: list[Coeffs] = []
    for m in range(2 * k - 1):
        if m < k:
            powers.append(tuple(1 if i == m else 0 for i in range(k)))
            continue
        prev = powers[m - 1]
        shifted = [0] * k
        for i in range(k - 1):
            shifted[i + 1] = prev[i]
        carry = prev[k - 1]
        if carry:
            for l in range(k):
                shifted[l] += carry * top[l]
        powers.append(tuple(s % d for s, d in zip(shifted, orders)))

    products = tuple(
        tuple(powers[i + j] for j in range(k)) for i in range(k)
    )
    ring = TableRing(
        characteristic=c,
        orders=orders,
        products=products,
        label=label or _poly_quotient_label(c, orders, top),
    )
    return _validated(ring)


_FIELD_CACHE: dict[tuple[int, int], TableRing] = {}


def mk_finite_field(p: int, k: int) -> TableRing:
    """F_{p^k} as Z_p[x]/(f), f the lexicographically least monic irreducible.

    Cached: repeated witness construction reuses the same immutable ring.
    """
    if not is_prime(p):
        raise InvalidCharacteristicError(f"p must be prime, got {p}")
    if k < 1 or p**k > 1 << 16:
        raise SizeLimitError(f"field size {p}^{k} out of range")
    key = (p, k)
    cached = _FIELD_CACHE.get(key)
    if cached is not None:
        return cached
    if k == 1:
        ring = mk_zn(p)
    else:
        f = least_irreducible(p, k)
        top = tuple((-c) % p for c in f.coeffs[:k])
        ring = mk_poly_quotient(p, (p,) * k, top, label=f"F{p ** k}")
    _FIELD_CACHE[key] = ring
    return ring


def _find_unity_complement(c1: int, c2: int) -> tuple[int, int] | None:
    """Generator (s, t) with Z_{c1} x Z_{c2} = <(1,1)> + <(s,t)>, direct.

    Returns None when <(1,1)> already spans (coprime characteristics).
    """
    l = c1 * c2 // math.gcd(c1, c2)
    m = math.gcd(c1, c2)
    if m == 1:
        return None
    if c1 % c2 == 0:
        return (0, 1)
    if c2 % c1 == 0:
        return (1, 0)
    if c1 * c2 > 1 << 12:
        raise SizeLimitError(
            f"product regrouping search too large for characteristics {c1}, {c2}"
        )
    for s in range(c1):
        for t in range(c2):
            seen = set()
            for lam in range(l):
                for mu in range(m):
                    seen.add(((lam + mu * s) % c1, (lam + mu * t) % c2))
            if len(seen) == c1 * c2:
                return (s, t)
    raise AssertionError("a complement generator always exists")  # pragma: no cover


def mk_product(R: TableRing, S: TableRing) -> TableRing:
    """Direct product ring with componentwise operations.

    The additive presentation regroups the two unity generators into a
    single unity of order lcm(char R, char S) plus (when needed) one
    complement generator of order gcd, so that e_0 is again the unity.
    """
    c1, c2 = R.characteristic, S.characteristic
    c = c1 * c2 // math.gcd(c1, c2)
    if R.order * S.order > max_ring_order():
        raise SizeLimitError(
            f"product order {R.order * S.order} exceeds guardrail {max_ring_order()}"
        )
    h = _find_unity_complement(c1, c2)
    m = math.gcd(c1, c2)

    # lookup: (a0, b0) multiples of the two unities -> (lambda, mu) coords
    lookup: dict[tuple[int, int], tuple[int, int]] = {}
    if h is None:
        for lam in range(c):
            lookup[(lam % c1, lam % c2)] = (lam, 0)
    else:
        s, t = h
        for lam in range(c):
            for mu in range(m):
                key = ((lam + mu * s) % c1, (lam + mu * t) % c2)
                if key not in lookup:
                    lookup[key] = (lam, mu)
        assert len(lookup) == c1 * c2

    extra = 0 if h is None else 1
    k1, k2 = R.rank, S.rank
    rank = 1 + extra + (k1 - 1) + (k2 - 1)
    orders = (c,) + ((m,) if extra else ()) + R.orders[1:] + S.orders[1:]

    def pair_to_coeffs(a: Coeffs, b: Coeffs) -> Coeffs:
        lam, mu = lookup[(a[0], b[0])]
        out = (lam,) + ((mu,) if extra else ()) + a[1:] + b[1:]
        return out

    # basis vectors as (R-element, S-element) coefficient pairs
    basis_pairs: list[tuple[Coeffs, Coeffs]] = []
    one_r = (1,) + (0,) * (k1 - 1)
    one_s = (1,) + (0,) * (k2 - 1)
    zero_r = (0,) * k1
    zero_s = (0,) * k2
    basis_pairs.append((one_r, one_s))
    if extra:
        s, t = h
        basis_pairs.append(
            (R.normalize(tuple(s if i == 0 else 0 for i in range(k1))),
             S.normalize(tuple(t if j == 0 else 0 for j in range(k2))))
        )
    for i in range(1, k1):
        basis_pairs.append((tuple(1 if l == i else 0 for l in range(k1)), zero_s))
    for j in range(1, k2):
        basis_pairs.append((zero_r, tuple(1 if l == j else 0 for l in range(k2))))

    products = tuple(
        tuple(
            pair_to_coeffs(
                R.mul_coeffs(basis_pairs[i][0], basis_pairs[j][0]),
                S.mul_coeffs(basis_pairs[i][1], basis_pairs[j][1]),
            )
            for j in range(rank)
        )
        for i in range(rank)
    )
    ring = TableRing(
        characteristic=c,
        orders=orders,
        products=products,
        label=f"{R.label} x {S.label}",
    )
    return _validated(ring)


# ---------------------------------------------------------------------------
# Quotients


@dataclass(frozen=True)
class QuotientMap:
    """The surjection from a TableRing onto a quotient by an ideal."""

    source: TableRing
    quotient: TableRing
    _coset_rep: dict  # source index -> source index of canonical coset rep
    _rep_coords: dict  # rep index -> quotient coefficient tuple

    def __call__(self, element: RingElement) -> RingElement:
        if element.owner != self.source:
            raise RingMismatchError("element does not belong to the quotient's source")
        rep = self._coset_rep[self.source.index_of(element.coeffs)]
        return RingElement(self.quotient, self._rep_coords[rep])


def _abelian_basis(cosets: list[int], add, one_rep: int, zero_rep: int):
    """Direct-sum generator decomposition of a finite abelian group.

    Returns (gens, orders, span) where span maps every element to its
    unique coefficient tuple.  The first generator is forced to be
    `one_rep`, whose order equals the group exponent here (c * x = 0 for
    all x when c annihilates the unity of a ring).
    """
    def elt_order(x: int) -> int:
        n, acc = 1, x
        while acc != zero_rep:
            acc = add(acc, x)
            n += 1
        return n

    gens: list[int] = []
    orders: list[int] = []
    span: dict[int, tuple[int, ...]] = {zero_rep: ()}

    def extend(gen: int, order: int) -> None:
        gens.append(gen)
        orders.append(order)
        new_span = {}
        for elem, coords in span.items():
            acc = elem
            for j in range(order):
                new_span[acc] = coords + (j,)
                acc = add(acc, gen)
        span.clear()
        span.update(new_span)

    extend(one_rep, elt_order(one_rep))
    total = len(cosets)
    while len(span) < total:
        # order of each coset of the current span subgroup
        best_order, best_elem = 0, None
        for x in cosets:
            if x in span:
                continue
            acc, j = x, 1
            while acc not in span:
                acc = add(acc, x)
                j += 1
            # j = order of x + span in the quotient group
            if j > best_order:
                best_order = j
        # a representative whose own order equals its coset order generates
        # a direct complement summand
        for x in cosets:
            if x in span:
                continue
            acc, j = x, 1
            while acc not in span:
                acc = add(acc, x)
                j += 1
            if j == best_order and elt_order(x) == best_order:
                best_elem = x
                break
        if best_elem is None:  # pragma: no cover
            raise AssertionError("no order-preserving coset representative found")
        extend(best_elem, best_order)
    return gens, orders, span


def quotient_by_ideal(
    R: TableRing, gens: list[RingElement], label: str | None = None
) -> tuple[TableRing, QuotientMap]:
    """Quotient of R by the ideal generated by gens, plus the surjection."""
    if R.order > max_ring_order():
        raise SizeLimitError(f"ring order {R.order} exceeds guardrail")
    for g in gens:
        if g.owner != R:
            raise RingMismatchError("ideal generators must belong to R")

    n = R.order
    all_coeffs = [R.coeffs_at(i) for i in range(n)]
    index = {c: i for i, c in enumerate(all_coeffs)}

    def add_idx(a: int, b: int) -> int:
        return index[R.add_coeffs(all_coeffs[a], all_coeffs[b])]

    # ideal = subgroup generated by { g * b : b in R }; each g*R is already
    # a subgroup, so the ideal is the iterated sumset of those subgroups
    ideal = {0}
    for g in gens:
        g_image = {index[R.mul_coeffs(g.coeffs, b)] for b in all_coeffs}
        ideal = {add_idx(s, m) for s in ideal for m in g_image}
    ideal = sorted(ideal)

    coset_rep: dict[int, int] = {}
    for i in range(n):
        if i in coset_rep:
            continue
        members = [add_idx(i, j) for j in ideal]
        rep = min(members)
        for mbr in members:
            coset_rep[mbr] = rep
    reps = sorted(set(coset_rep.values()))

    def q_add(a: int, b: int) -> int:
        return coset_rep[add_idx(a, b)]

    def q_mul(a: int, b: int) -> int:
        return coset_rep[index[R.mul_coeffs(all_coeffs[a], all_coeffs[b])]]

    one_rep = coset_rep[index[R.one().coeffs]]
    zero_rep = coset_rep[0]
    qgens, qorders, span = _abelian_basis(reps, q_add, one_rep, zero_rep)

    k = len(qgens)
    products = tuple(
        tuple(span[q_mul(qgens[i], qgens[j])] for j in range(k))
        for i in range(k)
    )
    gen_label = ",".join(str(g.coeffs) for g in gens)
    quotient = _validated(
        TableRing(
            characteristic=qorders[0],
            orders=tuple(qorders),
            products=products,
            label=label or f"{R.label}/({gen_label})",
        )
    )
    rep_coords = {rep: span[rep] for rep in reps}
    return quotient, QuotientMap(R, quotient, coset_rep, rep_coords)


def lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)
