"""Frobenius monomials in block form.

A nonzero monomial of A = F_p[x]{f}/(x_i^p f), or of the Frobenius operator
ring F = F_p[x]<F>/(x_i^p F - F x_i), is stored in its unique shortest-word
form

    x^{v_0} f x^{v_1} f ... x^{v_{e-1}} f x^{v_e}

where every *block* ``v_0 .. v_{e-1}`` has entries in ``[0, p)`` and the
*tail* ``v_e`` is unbounded.  The degree of the word (number of letters)
is the complexity of the monomial and ``e`` is its f-order.

Two products are provided: ``mul_trunc`` for A, where ``x_i^p f = 0``, and
``mul_carry`` for F, where ``x_i^p F = F x_i``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import ContextMismatch, ParseError

Exponent = tuple  # tuple[int, ...] of length n

_MAX_P = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class RingContext:
    """The characteristic ``p`` and the number ``n`` of commuting variables."""

    p: int
    n: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"p must be a prime, got {self.p!r}")
        if self.p > _MAX_P:
            raise ValueError("p must not exceed 2**31")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")

    @property
    def variable_names(self) -> tuple:
        if self.n <= 3:
            return ("x", "y", "z")[: self.n]
        return tuple(f"x{i + 1}" for i in range(self.n))

    @property
    def zero(self) -> Exponent:
        return (0,) * self.n

    def block_vectors(self) -> list:
        """All exponent vectors with entries in ``[0, p)``, i.e. N^n_{<p}."""
        return list(itertools.product(range(self.p), repeat=self.n))


def _block_key(v: Exponent) -> tuple:
    # v precedes u iff |v| > |u|, or equal weight and v < u at the last
    # coordinate where they differ.
    return (-sum(v),) + tuple(reversed(v))


class FrobMonomial:
    """A nonzero monomial in canonical block form.  Immutable."""

    __slots__ = ("blocks", "tail", "ctx", "degree", "_key", "_hash")

    def __init__(self, blocks: Sequence[Sequence[int]], tail: Sequence[int], ctx: RingContext):
        blocks = tuple(tuple(int(c) for c in b) for b in blocks)
        tail = tuple(int(c) for c in tail)
        n, p = ctx.n, ctx.p
        if len(tail) != n or any(len(b) != n for b in blocks):
            raise ValueError(f"exponent vectors must have length {n}")
        if any(c < 0 for c in tail) or any(c < 0 or c >= p for b in blocks for c in b):
            raise ValueError(f"block entries must lie in [0, {p}) and tail entries be >= 0")
        self._init(blocks, tail, ctx)

    def _init(self, blocks, tail, ctx):
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "ctx", ctx)
        deg = len(blocks) + sum(tail) + sum(sum(b) for b in blocks)
        object.__setattr__(self, "degree", deg)
        key = (deg, len(blocks))
        for b in blocks:
            key += _block_key(b)
        key += _block_key(tail)
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash((key, ctx)))

    @classmethod
    def _raw(cls, blocks, tail, ctx) -> "FrobMonomial":
        # trusted constructor: inputs already canonical tuples
        m = cls.__new__(cls)
        m._init(blocks, tail, ctx)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("FrobMonomial is immutable")

    @property
    def f_order(self) -> int:
        return len(self.blocks)

    @property
    def sort_key(self) -> tuple:
        """Tuple whose lexicographic order is the term order."""
        return self._key

    def is_one(self) -> bool:
        return not self.blocks and not any(self.tail)

    def __eq__(self, other):
        if not isinstance(other, FrobMonomial):
            return NotImplemented
        return self._key == other._key and self.ctx == other.ctx

    def __hash__(self):
        return self._hash

    def _check(self, other):
        if not isinstance(other, FrobMonomial):
            return NotImplemented
        if self.ctx != other.ctx:
            raise ContextMismatch("monomials over different rings")
        return None

    def __lt__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self._key < other._key

    def __le__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self._key <= other._key

    def __gt__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self._key > other._key

    def __ge__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self._key >= other._key

    def __repr__(self):
        return f"FrobMonomial({render(self)!r}, p={self.ctx.p}, n={self.ctx.n})"

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class PositionedMonomial:
    """The monomial ``mono`` placed at basis vector ``pos`` of a free module."""

    mono: FrobMonomial
    pos: int = 0

    def __str__(self):
        return render_positioned(self)


# -- construction ----------------------------------------------------------


def one(ctx: RingContext) -> FrobMonomial:
    return FrobMonomial._raw((), ctx.zero, ctx)


def variable(ctx: RingContext, i: int, power: int = 1) -> FrobMonomial:
    """The monomial ``x_i^power`` (0-based ``i``)."""
    if not 0 <= i < ctx.n:
        raise ValueError(f"variable index {i} out of range for n={ctx.n}")
    tail = [0] * ctx.n
    tail[i] = power
    return FrobMonomial((), tail, ctx)


def frobenius(ctx: RingContext) -> FrobMonomial:
    """The monomial ``f`` (or ``F``)."""
    return FrobMonomial._raw((ctx.zero,), ctx.zero, ctx)


def x_power(ctx: RingContext, a: Sequence[int]) -> FrobMonomial:
    return FrobMonomial((), a, ctx)


def from_closed_form(a, e: int, ctx: RingContext) -> FrobMonomial:
    """Canonical form of ``x^a F^e``.

    Writing ``a = d_0 + p d_1 + ... + p^{e-1} d_{e-1} + p^e q`` in base ``p``
    componentwise gives ``x^a F^e = x^{d_0} F x^{d_1} F ... x^{d_{e-1}} F x^q``.

    >>> ctx = RingContext(2, 1)
    >>> render(from_closed_form(5, 2, ctx))
    'xffx'
    """
    if isinstance(a, int):
        a = (a,)
    a = tuple(int(c) for c in a)
    if len(a) != ctx.n or any(c < 0 for c in a) or e < 0:
        raise ValueError("exponent vector must be natural and of length n")
    p = ctx.p
    blocks = []
    rest = list(a)
    for _ in range(e):
        blocks.append(tuple(c % p for c in rest))
        rest = [c // p for c in rest]
    return FrobMonomial._raw(tuple(blocks), tuple(rest), ctx)


def closed_form(m: FrobMonomial) -> tuple:
    """Inverse of :func:`from_closed_form`: returns ``(a, e)``."""
    p = m.ctx.p
    a = list(m.tail)
    for b in reversed(m.blocks):
        a = [bi + p * ai for ai, bi in zip(a, b)]
    return tuple(a), m.f_order


def monomials_of_degree(ctx: RingContext, d: int) -> Iterator[FrobMonomial]:
    """Every nonzero monomial of A of degree ``d`` (equivalently, every
    monomial of F of complexity exactly ``d``)."""
    blocks_by_weight = {}
    for v in ctx.block_vectors():
        blocks_by_weight.setdefault(sum(v) + 1, []).append(v)

    def tails(k):
        for c in itertools.combinations(range(k + ctx.n - 1), ctx.n - 1):
            prev = -1
            out = []
            for pos in c + (k + ctx.n - 1,):
                out.append(pos - prev - 1)
                prev = pos
            yield tuple(out)

    def rec(remaining, prefix):
        for t in tails(remaining):
            yield FrobMonomial._raw(prefix, t, ctx)
        for w, vs in blocks_by_weight.items():
            if w <= remaining:
                for v in vs:
                    yield from rec(remaining - w, prefix + (v,))

    if d >= 0:
        yield from rec(d, ())


# -- order ------------------------------------------------------------------


def compare(m1: FrobMonomial, m2: FrobMonomial) -> int:
    """Return -1, 0 or 1 as ``m1`` is less than, equal to, or greater than
    ``m2`` in the graded reverse lexicographic term order."""
    if m1.ctx != m2.ctx:
        raise ContextMismatch("monomials over different rings")
    if m1._key == m2._key:
        return 0
    return -1 if m1._key < m2._key else 1


# -- products ---------------------------------------------------------------


def mul_trunc(m1: FrobMonomial, m2: FrobMonomial) -> Optional[FrobMonomial]:
    """Product in A; ``None`` when the product is zero."""
    ctx = m1.ctx
    if ctx != m2.ctx:
        raise ContextMismatch("monomials over different rings")
    if not m2.blocks:
        tail = tuple(a + b for a, b in zip(m1.tail, m2.tail))
        return FrobMonomial._raw(m1.blocks, tail, ctx)
    merged = tuple(a + b for a, b in zip(m1.tail, m2.blocks[0]))
    p = ctx.p
    for c in merged:
        if c >= p:
            return None
    return FrobMonomial._raw(m1.blocks + (merged,) + m2.blocks[1:], m2.tail, ctx)


def mul_carry(m1: FrobMonomial, m2: FrobMonomial) -> FrobMonomial:
    """Product in F, renormalised with base-p carries.

    ``x^c F = x^{c mod p} F x^{c div p}``, so any overflow of ``tail(m1)``
    into the first block of ``m2`` is pushed rightwards through the
    remaining blocks and into the tail.
    """
    ctx = m1.ctx
    if ctx != m2.ctx:
        raise ContextMismatch("monomials over different rings")
    p = ctx.p
    blocks = list(m1.blocks)
    carry = m1.tail
    for b in m2.blocks:
        s = tuple(ci + bi for ci, bi in zip(carry, b))
        blocks.append(tuple(c % p for c in s))
        carry = tuple(c // p for c in s)
    tail = tuple(ci + ti for ci, ti in zip(carry, m2.tail))
    return FrobMonomial._raw(tuple(blocks), tail, ctx)


def left_divide(m: FrobMonomial, a: FrobMonomial) -> Optional[FrobMonomial]:
    """Return ``c`` with ``mul_trunc(c, a) == m``, or ``None``."""
    if m.ctx != a.ctx:
        raise ContextMismatch("monomials over different rings")
    d = len(a.blocks)
    if d == 0:
        rest = tuple(x - y for x, y in zip(m.tail, a.tail))
        if any(c < 0 for c in rest):
            return None
        return FrobMonomial._raw(m.blocks, rest, m.ctx)
    e = len(m.blocks)
    if e < d or m.tail != a.tail:
        return None
    if m.blocks[e - d + 1:] != a.blocks[1:]:
        return None
    head = tuple(x - y for x, y in zip(m.blocks[e - d], a.blocks[0]))
    if any(c < 0 for c in head):
        return None
    return FrobMonomial._raw(m.blocks[: e - d], head, m.ctx)


def robustness(m: FrobMonomial) -> int:
    """Least ``d`` such that every x-monomial of degree ``>= d`` kills ``m``
    into the commutative part; zero exactly for pure x-monomials."""
    if not m.blocks:
        return 0
    ctx = m.ctx
    return ctx.n * (ctx.p - 1) + 1 - sum(m.blocks[0])


# -- text -------------------------------------------------------------------


def _render_x(v, names):
    parts = []
    for name, k in zip(names, v):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return parts


def render(m: FrobMonomial, frob: str = "f") -> str:
    """Shortest-word rendering, e.g. ``xfxf`` or ``fx^2``; ``1`` for the
    identity."""
    names = m.ctx.variable_names
    sep = "" if m.ctx.n <= 3 else "*"
    parts = []
    for b in m.blocks:
        parts.extend(_render_x(b, names))
        parts.append(frob)
    parts.extend(_render_x(m.tail, names))
    if not parts:
        return "1"
    return sep.join(parts)


def render_positioned(pm: PositionedMonomial, rank: int = 2, frob: str = "f") -> str:
    word = render(pm.mono, frob)
    if rank <= 1:
        return word
    return f"{word}*e{pm.pos + 1}"


_TOKEN = re.compile(r"\s*(?:(x)(\d+)|([xyzfF])|(\^)\s*(\d+)|(\*))")


def parse_word(text: str, ctx: RingContext, truncating: bool = True) -> Optional[FrobMonomial]:
    """Parse a word such as ``x^5F^2`` or ``x*f*x``.

    Letters multiply left to right under the truncating (A) or carrying (F)
    product.  ``None`` is returned for words that vanish in A.  Both ``f``
    and ``F`` are accepted here; session parsing enforces which is allowed.
    """
    names = {name: i for i, name in enumerate(ctx.variable_names)}
    pos = 0
    text = text.strip()
    if text == "1":
        return one(ctx)
    factors = []
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            raise ParseError(f"unexpected character {text[pos]!r} in word", 1, pos + 1)
        pos = match.end()
        if match.group(1):
            idx = int(match.group(2)) - 1
            if not 0 <= idx < ctx.n:
                raise ParseError(f"unknown variable x{idx + 1}", 1, match.start() + 1)
            factors.append(variable(ctx, idx))
        elif match.group(3):
            letter = match.group(3)
            if letter in "fF":
                factors.append(frobenius(ctx))
            elif letter in names:
                factors.append(variable(ctx, names[letter]))
            else:
                raise ParseError(f"unknown variable {letter}", 1, match.start() + 1)
        elif match.group(4):
            if not factors:
                raise ParseError("'^' without a base", 1, match.start() + 1)
            k = int(match.group(5))
            base = factors.pop()
            factors.extend([base] * k)
            if k == 0:
                factors.append(one(ctx))
    if not factors:
        raise ParseError("empty word", 1, 1)
    result = one(ctx)
    for fac in factors:
        if truncating:
            result = mul_trunc(result, fac)
            if result is None:
                return None
        else:
            result = mul_carry(result, fac)
    return result
