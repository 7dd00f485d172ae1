"""Text presentations of rings and groups.

Rings:   Z6,  F9,  GF(9),  Z4[x]/(x^2-2, 2x),  F3 x F2,  F2[x]/(x^4) * Z9
Groups:  C8,  C_8,  C2^3,  C2^inf,  C2 x C4,  Z,  Z^2,  Z[1/2],  Z[1/2,1/3]

Both parsers report the character position of the first offending token.
Polynomial quotients are taken over Z_c: one monic relation fixes the
power basis and any remaining relations generate an ideal to quotient by.
"""

from __future__ import annotations

from . import classify, ordgroup, verifier
from .errors import InvalidPresentationError
from .finring import TableRing, mk_finite_field, mk_poly_quotient, mk_product, mk_zn, quotient_by_ideal
from .numtheory import as_prime_power, factorize, is_prime


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        where = self.pos if pos is None else pos
        return InvalidPresentationError(
            f"{message} at position {where}: {self.text!r}"
        )

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] == " ":
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, literal: str) -> bool:
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.take(literal):
            raise self.error(f"expected {literal!r}")

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


# ---------------------------------------------------------------------------
# rings


def parse_ring(text: str) -> TableRing:
    s = _Scanner(text)
    ring = _ring_atom(s)
    while True:
        s.skip_ws()
        if s.take("*") or s.take("x "):
            s.skip_ws()
            ring = mk_product(ring, _ring_atom(s))
        elif s.peek() == "x" and s.pos + 1 == len(s.text):
            raise s.error("dangling product separator")
        else:
            break
    if not s.at_end():
        raise s.error("unexpected trailing input")
    return ring


def _ring_atom(s: _Scanner) -> TableRing:
    s.skip_ws()
    start = s.pos
    if s.take("GF("):
        n = s.integer()
        s.expect(")")
        base = _field(n, s, start)
    elif s.take("F"):
        base = _field(s.integer(), s, start)
    elif s.take("Z"):
        base = mk_zn(s.integer())
    else:
        raise s.error("expected a ring atom (Zn, Fq, or GF(q))")
    if s.text.startswith("[x]/(", s.pos):
        base = _poly_quotient(s, base, start)
    return base


def _field(n: int, s: _Scanner, pos: int) -> TableRing:
    pk = as_prime_power(n)
    if pk is None:
        raise s.error(f"{n} is not a prime power", pos)
    p, k = pk
    return mk_finite_field(p, k)


def _poly_quotient(s: _Scanner, base: TableRing, start: int) -> TableRing:
    if base.rank != 1:
        raise s.error("polynomial quotients need a Z_n or prime-field base", start)
    c = base.characteristic
    s.expect("[x]/(")
    relations = [_poly_relation(s, c)]
    while True:
        s.skip_ws()
        if s.take(","):
            relations.append(_poly_relation(s, c))
        else:
            break
    s.expect(")")
    label = s.text[start:s.pos].replace(" ", "")

    monic = [r for r in relations if r and r[-1] % c == 1 % c]
    if not monic:
        raise s.error("need at least one monic relation to fix the basis", start)
    modulus = min(monic, key=len)
    k = len(modulus) - 1
    if k < 1:
        raise s.error("the monic relation must have degree >= 1", start)
    top = tuple((-a) % c for a in modulus[:-1])
    ring = mk_poly_quotient(c, (c,) * k, top)
    extras = [r for r in relations if r is not modulus]
    if not extras:
        return ring
    x = ring.element((0, 1) + (0,) * (k - 2)) if k >= 2 else ring.from_int(
        int(top[0])
    )
    gens = []
    for rel in extras:
        acc = ring.from_int(rel[0] % c)
        power = ring.one()
        for coeff in rel[1:]:
            power = power * x
            acc = acc + ring.from_int(coeff % c) * power
        gens.append(acc)
    quotient, _ = quotient_by_ideal(ring, gens, label=label)
    return quotient


def _poly_relation(s: _Scanner, c: int) -> list[int]:
    """One integer polynomial in x, as a low-degree-first coefficient list."""
    s.skip_ws()
    coeffs: dict[int, int] = {}
    sign = 1
    first = True
    while True:
        s.skip_ws()
        if s.take("+"):
            sign = 1
        elif s.take("-"):
            sign = -1
        elif not first:
            break
        s.skip_ws()
        had_digits = s.peek().isdigit()
        coeff = s.integer() if had_digits else 1
        degree = 0
        if s.take("x"):
            degree = s.integer() if s.take("^") else 1
        elif not had_digits:
            raise s.error("expected a term")
        coeffs[degree] = coeffs.get(degree, 0) + sign * coeff
        first = False
        s.skip_ws()
        if s.peek() not in "+-":
            break
    if not coeffs:
        raise s.error("empty relation")
    top = max(coeffs)
    out = [coeffs.get(d, 0) % c for d in range(top + 1)]
    while out and out[-1] == 0:
        out.pop()
    if not out:
        raise s.error("relation is zero modulo the characteristic")
    return out


# ---------------------------------------------------------------------------
# groups


def parse_group(text: str) -> classify.GroupDescriptor:
    s = _Scanner(text)
    s.skip_ws()
    if s.peek() == "Z":
        d = _torsion_free(s)
    else:
        d = _finite_or_quasi(s)
    if not s.at_end():
        raise s.error("unexpected trailing input")
    return d


def _cyclic_order(s: _Scanner) -> int | tuple[int, str]:
    s.expect("C")
    s.take("_")
    base = s.integer()
    if s.take("^"):
        if s.take("inf"):
            return (base, "inf")
        exp = s.integer()
        return base**exp
    return base


def _finite_or_quasi(s: _Scanner) -> classify.GroupDescriptor:
    start = s.pos
    first = _cyclic_order(s)
    if isinstance(first, tuple):
        p = first[0]
        if not is_prime(p):
            raise s.error(f"quasi-cyclic groups need a prime, got {p}", start)
        return classify.quasi_cyclic(p)
    orders = [first]
    while True:
        s.skip_ws()
        if s.take("x "):
            s.skip_ws()
            nxt = _cyclic_order(s)
            if isinstance(nxt, tuple):
                raise s.error("quasi-cyclic factors cannot appear in products")
            orders.append(nxt)
        else:
            break
    if len(orders) == 1:
        return classify.cyclic(orders[0])
    structure = verifier.combine_cyclic_orders(orders)
    return classify.GroupDescriptor(
        kind=classify.GroupKind.FINITE_ABELIAN,
        factors=structure.invariant_factors,
    )


def _torsion_free(s: _Scanner) -> classify.GroupDescriptor:
    s.expect("Z")
    if s.take("^"):
        rank = s.integer()
        if rank < 1:
            raise s.error("lattice rank must be >= 1")
        return classify.torsion_free(ordgroup.integer_lattice(rank))
    if s.take("["):
        primes = set()
        while True:
            s.skip_ws()
            s.expect("1/")
            p = s.integer()
            if p < 2:
                raise s.error("denominators must be >= 2")
            # inverting a composite inverts each of its prime factors
            primes.update(factorize(p))
            s.skip_ws()
            if not s.take(","):
                break
        s.expect("]")
        return classify.torsion_free(ordgroup.rational_subgroup(primes))
    return classify.torsion_free(ordgroup.integer_lattice(1))


def render_group(d: classify.GroupDescriptor) -> str:
    return d.render()
