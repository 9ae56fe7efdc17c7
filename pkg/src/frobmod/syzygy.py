"""Generating sets for left syzygies on sequences of monomials of A.

Common left multiples of two monomials ``a`` and ``b`` of A only arise in
three ways:

* both are pure x-monomials: the usual LCM syzygy;
* they have the same positive f-order and agree after the first block,
  ``a = x^v f m`` and ``b = x^u f m``: an LCM syzygy on the first blocks;
* one is a left multiple of the other, ``b = c a``: the syzygy ``c e_a - e_b``.

In addition every monomial with positive f-order is killed by
``x_i^{p - v_i}`` where ``v`` is its first block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvariantError
from .monomial import (
    FrobMonomial,
    PositionedMonomial,
    left_divide,
    mul_trunc,
    x_power,
)


@dataclass(frozen=True)
class MonomialSyzygy:
    """A syzygy ``sum coeff * cofactor * e_index`` on a monomial sequence.

    ``schreyer_degree`` is the shifted degree ``deg(cofactor) + deg(gen)``
    shared by every term.  ``schreyer_monomial`` is the common product
    ``cofactor * gen``; it is ``None`` for annihilators, whose product is
    zero.
    """

    terms: tuple  # ((coeff, cofactor, index), ...), at most two entries
    schreyer_degree: int
    schreyer_monomial: Optional[PositionedMonomial] = None

    @property
    def is_annihilator(self) -> bool:
        return len(self.terms) == 1

    def indices(self) -> tuple:
        return tuple(i for _, _, i in self.terms)

    def reindex(self, mapping) -> "MonomialSyzygy":
        terms = tuple((c, m, mapping[i]) for c, m, i in self.terms)
        return MonomialSyzygy(terms, self.schreyer_degree, self.schreyer_monomial)

    def evaluate(self, gens: Sequence[PositionedMonomial]) -> dict:
        """Apply to ``gens`` under the truncating product; ``{}`` means zero."""
        p = gens[0].mono.ctx.p
        acc = {}
        for coeff, cof, i in self.terms:
            prod = mul_trunc(cof, gens[i].mono)
            if prod is not None:
                key = PositionedMonomial(prod, gens[i].pos)
                acc[key] = (acc.get(key, 0) + coeff) % p
        return {k: v for k, v in acc.items() if v}

    def _sort_key(self):
        return tuple((i, c, m.sort_key) for c, m, i in sorted(self.terms, key=lambda t: t[2]))


def annihilator_syzygies(a: FrobMonomial, index: int = 0, shift: int = 0) -> list:
    """``x_i^{p - v_i} e_index`` for each variable, ``v`` the first block of ``a``."""
    if not a.blocks:
        return []
    ctx = a.ctx
    out = []
    for i, vi in enumerate(a.blocks[0]):
        exp = [0] * ctx.n
        exp[i] = ctx.p - vi
        cof = x_power(ctx, exp)
        out.append(MonomialSyzygy(((1, cof, index),), cof.degree + a.degree + shift))
    return out


def _binomial(ca, ia, cb, ib, a, b, pos, shift, p):
    prod = mul_trunc(ca, a)
    if prod is None or prod != mul_trunc(cb, b):
        raise InvariantError("two-term syzygy does not cancel")
    terms = ((1, ca, ia), (p - 1, cb, ib))
    return MonomialSyzygy(terms, prod.degree + shift, PositionedMonomial(prod, pos))


def binomial_syzygies(a: FrobMonomial, b: FrobMonomial, ia: int = 0, ib: int = 1,
                      pos: int = 0, shift: int = 0) -> list:
    """The two-term syzygies between ``a`` and ``b`` (same position)."""
    p = a.ctx.p
    ea, eb = a.f_order, b.f_order
    if ea == 0 and eb == 0:
        lcm = tuple(max(s, t) for s, t in zip(a.tail, b.tail))
        ca = x_power(a.ctx, [l - s for l, s in zip(lcm, a.tail)])
        cb = x_power(a.ctx, [l - t for l, t in zip(lcm, b.tail)])
        return [_binomial(ca, ia, cb, ib, a, b, pos, shift, p)]
    if ea == eb:
        if a.blocks[1:] != b.blocks[1:] or a.tail != b.tail:
            return []
        va, vb = a.blocks[0], b.blocks[0]
        lcm = tuple(max(s, t) for s, t in zip(va, vb))
        ca = x_power(a.ctx, [l - s for l, s in zip(lcm, va)])
        cb = x_power(a.ctx, [l - t for l, t in zip(lcm, vb)])
        return [_binomial(ca, ia, cb, ib, a, b, pos, shift, p)]
    # different f-orders: only a divisibility relation can give a common
    # multiple, and the larger f-order side must be the multiple
    if ea < eb:
        c = left_divide(b, a)
        if c is None:
            return []
        return [_binomial(c, ia, _one_like(b), ib, a, b, pos, shift, p)]
    c = left_divide(a, b)
    if c is None:
        return []
    return [_binomial(_one_like(a), ia, c, ib, a, b, pos, shift, p)]


def _one_like(m: FrobMonomial) -> FrobMonomial:
    return x_power(m.ctx, m.ctx.zero)


def pair_syzygies(a: FrobMonomial, b: FrobMonomial) -> list:
    """Generators of the syzygies on the pair ``(a, b)``, indices 0 and 1."""
    out = annihilator_syzygies(a, 0) + annihilator_syzygies(b, 1)
    out += binomial_syzygies(a, b, 0, 1)
    return out


def generating_syzygies(gens: Sequence[PositionedMonomial], shifts: Sequence[int] | None = None) -> list:
    """Generators of all syzygies on ``gens`` inside a free module.

    Pairs in different positions contribute nothing beyond the
    annihilators.  Output is deduplicated and sorted by Schreyer degree.
    """
    if shifts is None:
        rank = max((g.pos for g in gens), default=-1) + 1
        shifts = (0,) * rank
    out = []
    for i, g in enumerate(gens):
        out += annihilator_syzygies(g.mono, i, shifts[g.pos])
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            gi, gj = gens[i], gens[j]
            if gi.pos == gj.pos:
                out += binomial_syzygies(gi.mono, gj.mono, i, j, gi.pos, shifts[gi.pos])
    seen = set()
    unique = []
    for s in out:
        key = s._sort_key()
        if key not in seen:
            seen.add(key)
            unique.append(s)
    unique.sort(key=lambda s: (s.schreyer_degree, s._sort_key()))
    return unique
