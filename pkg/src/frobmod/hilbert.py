"""Hilbert series of monomial quotients of A^t as exact rational functions.

Every such series has the form ``a(t) / ((1-t)^d g(t))`` with
``g(t) = 1 - t (1 + t + ... + t^{p-1})^n``.  The numerator is recovered
from the structure map ``sum_v N(-|v|-1) -> N`` given by left
multiplication with ``x^v f``: its cokernel is the commutative quotient
``R/J`` (``J`` = the pure x-monomials of the ideal) and its kernel ``K``
has finite length, so

    HS_N * g = HS_{R/J} - HS_K.

Degreewise counts of standard monomials give ``HS_N`` and ``HS_K`` is read
off from the identity above; the kernel must vanish past a fixed bound,
which is checked on a window of further degrees.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import ContextMismatch, InvariantError
from .monomial import FrobMonomial, RingContext


class IntPolynomial:
    """Integer polynomial, ascending coefficients, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def one_minus_t(cls, power: int = 1) -> "IntPolynomial":
        return cls([(-1) ** k * math.comb(power, k) for k in range(power + 1)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def _coerce(self, other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``t^k`` (``k >= 0``)."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def divide_one_minus_t(self) -> "IntPolynomial":
        """Exact quotient by ``1 - t``; requires a root at 1."""
        if self(1) != 0:
            raise ValueError("not divisible by 1 - t")
        # a(t) = (1 - t) q(t)  <=>  q_k = a_0 + ... + a_k
        out = list(itertools.accumulate(self.coeffs))
        return IntPolynomial(out[:-1])

    def root_one_multiplicity(self, limit: Optional[int] = None) -> int:
        """Number of factors ``1 - t`` dividing the polynomial (at most
        ``limit``); the zero polynomial counts as infinitely divisible."""
        k = 0
        a = self
        while (limit is None or k < limit) and a.coeffs and a(1) == 0:
            a = a.divide_one_minus_t()
            k += 1
        if not a.coeffs and limit is not None:
            return limit
        return k

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def g_polynomial(ctx: RingContext) -> IntPolynomial:
    """``1 - t (1 + t + ... + t^{p-1})^n``."""
    geometric = IntPolynomial([1] * ctx.p)
    return IntPolynomial([1]) - (geometric ** ctx.n).shift(1)


def series_coefficients(num: IntPolynomial, den: IntPolynomial, count: int) -> list:
    """First ``count`` coefficients of ``num / den`` (``den(0) = ±1``)."""
    if not den.coeffs or den[0] not in (1, -1):
        raise ValueError("denominator must have constant term 1 or -1")
    d0 = den[0]
    out = []
    for i in range(count):
        acc = num[i]
        for k in range(1, min(i, den.degree) + 1):
            acc -= den[k] * out[i - k]
        out.append(acc * d0)
    return out


def verify_recurrence(prefix: Sequence[int], denom: IntPolynomial | Sequence[int], start: int) -> bool:
    """True iff the coefficients of ``denom * prefix`` vanish in every degree
    ``>= start`` that the prefix fully determines."""
    if not isinstance(denom, IntPolynomial):
        denom = IntPolynomial(denom)
    prefix = list(prefix)
    for i in range(max(start, 0), len(prefix)):
        total = sum(denom[k] * prefix[i - k] for k in range(0, min(i, max(denom.degree, 0)) + 1))
        if total:
            return False
    return True


@dataclass(frozen=True)
class HilbertRational:
    """The rational function ``numerator / ((1-t)^pole_power * g_{p,n}(t))``."""

    numerator: IntPolynomial
    pole_power: int
    ctx: RingContext

    def __post_init__(self):
        if not isinstance(self.numerator, IntPolynomial):
            object.__setattr__(self, "numerator", IntPolynomial(self.numerator))
        if self.pole_power < 0:
            raise ValueError("pole power must be nonnegative")

    @classmethod
    def of_ring(cls, ctx: RingContext) -> "HilbertRational":
        """Series of A itself, ``1 / ((1-t)^n g)``."""
        return cls(IntPolynomial([1]), ctx.n, ctx)

    def denominator(self) -> IntPolynomial:
        return IntPolynomial.one_minus_t(self.pole_power) * g_polynomial(self.ctx)

    def expand(self, terms: int) -> list:
        """The first ``terms`` series coefficients (degrees 0 .. terms-1)."""
        return series_coefficients(self.numerator, self.denominator(), terms)

    def _check(self, other):
        if not isinstance(other, HilbertRational):
            return False
        if other.ctx != self.ctx:
            raise ContextMismatch("series over different rings")
        return True

    def _lift(self, d: int) -> IntPolynomial:
        return self.numerator * IntPolynomial.one_minus_t(d - self.pole_power)

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        d = max(self.pole_power, other.pole_power)
        return HilbertRational(self._lift(d) + other._lift(d), d, self.ctx)

    def __neg__(self):
        return HilbertRational(-self.numerator, self.pole_power, self.ctx)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def shift(self, k: int) -> "HilbertRational":
        """Multiply by ``t^k``."""
        return HilbertRational(self.numerator.shift(k), self.pole_power, self.ctx)

    def scale(self, c: int) -> "HilbertRational":
        return HilbertRational(self.numerator * c, self.pole_power, self.ctx)

    def __eq__(self, other):
        # equality as rational functions, not as representations
        if not isinstance(other, HilbertRational):
            return NotImplemented
        if self.ctx != other.ctx:
            return False
        d = max(self.pole_power, other.pole_power)
        return self._lift(d) == other._lift(d)

    def __hash__(self):
        return hash((self.reduced().numerator, self.reduced().pole_power, self.ctx))

    def reduced(self) -> "HilbertRational":
        """Cancel common ``1 - t`` factors."""
        k = self.numerator.root_one_multiplicity(self.pole_power)
        num = self.numerator
        if num.is_zero():
            return HilbertRational(num, 0, self.ctx)
        for _ in range(k):
            num = num.divide_one_minus_t()
        return HilbertRational(num, self.pole_power - k, self.ctx)

    @property
    def delta(self) -> int:
        return delta(self)

    @property
    def multiplicity(self) -> Fraction:
        return multiplicity(self)

    def to_json(self) -> dict:
        return {
            "numerator": list(self.numerator.coeffs),
            "pole_power": self.pole_power,
            "p": self.ctx.p,
            "n": self.ctx.n,
        }

    @classmethod
    def from_json(cls, data: dict) -> "HilbertRational":
        return cls(IntPolynomial(data["numerator"]), int(data["pole_power"]),
                   RingContext(int(data["p"]), int(data["n"])))

    def __str__(self):
        num = str(self.numerator)
        den = str(g_polynomial(self.ctx))
        if self.pole_power == 1:
            den = f"(1 - t)({den})"
        elif self.pole_power > 1:
            den = f"(1 - t)^{self.pole_power}({den})"
        else:
            den = f"({den})"
        return f"({num}) / {den}"


def delta(hs: HilbertRational) -> int:
    """Order of the pole of ``hs`` at ``t = 1``."""
    return hs.reduced().pole_power


def multiplicity(hs: HilbertRational) -> Fraction:
    """``a*(1) / delta!`` with ``a*(t) = (1-t)^delta g(t) hs(t)``."""
    r = hs.reduced()
    if r.numerator.is_zero():
        return Fraction(0)
    return Fraction(r.numerator(1), math.factorial(r.pole_power))


# -- commutative quotients --------------------------------------------------


def _minimal_exponents(gens) -> tuple:
    gens = sorted(set(tuple(g) for g in gens), key=lambda v: (sum(v), v))
    kept = []
    for g in gens:
        if not any(all(a >= b for a, b in zip(g, k)) for k in kept):
            kept.append(g)
    return tuple(kept)


@lru_cache(maxsize=4096)
def _commutative_numerator(gens: tuple, n: int) -> IntPolynomial:
    # HS_{R/J} * (1-t)^n, via N(J + (m)) = N(J) - t^{|m|} N(J : m)
    if not gens:
        return IntPolynomial([1])
    if any(not any(g) for g in gens):
        return IntPolynomial()
    *rest, m = gens
    rest = tuple(rest)
    colon = _minimal_exponents(tuple(max(a - b, 0) for a, b in zip(g, m)) for g in rest)
    return _commutative_numerator(rest, n) - _commutative_numerator(colon, n).shift(sum(m))


def hs_commutative(gens: Iterable[Sequence[int]], ctx: RingContext) -> tuple:
    """``(c, d)`` with ``HS_{R/J} = c(t) / (1-t)^d`` and ``c(1) > 0`` when
    ``d > 0``; ``d`` is the Krull dimension of ``R/J``.  The unit ideal gives
    ``(0, 0)``."""
    gens = _minimal_exponents(gens)
    for g in gens:
        if len(g) != ctx.n:
            raise ValueError(f"exponent vectors must have length {ctx.n}")
    num = _commutative_numerator(gens, ctx.n)
    if num.is_zero():
        return IntPolynomial(), 0
    d = ctx.n
    while d > 0 and num(1) == 0:
        num = num.divide_one_minus_t()
        d -= 1
    return num, d


# -- counting standard monomials ----------------------------------------------


class StandardMonomialCounter:
    """Counts the degree-``r`` monomials of A outside a monomial left ideal.

    A monomial is built from the right: first its tail, then its blocks
    from last to first.  Generators with positive f-order stay *alive*
    while the blocks chosen so far match their own trailing blocks; when
    the block facing a generator's first block is reached, either it
    dominates (the monomial lies in the ideal) or the generator dies.
    """

    def __init__(self, gens: Iterable[FrobMonomial], ctx: RingContext):
        self.ctx = ctx
        gens = list(gens)
        self.commutative = _minimal_exponents(g.tail for g in gens if g.f_order == 0)
        self.frob = tuple(sorted({g for g in gens if g.f_order > 0}, key=lambda m: m.sort_key))
        self._blocks = [(v, sum(v) + 1) for v in ctx.block_vectors()]
        self._free = [1]
        self._memo = {}
        self._tail_groups = {}
        self._counts = {}

    def _free_count(self, r: int) -> int:
        # block sequences of total weight r, i.e. coefficients of 1/g
        free = self._free
        while len(free) <= r:
            k = len(free)
            free.append(sum(free[k - w] for _, w in self._blocks if w <= k))
        return free[r]

    def _in_commutative(self, tail) -> bool:
        return any(all(a >= b for a, b in zip(tail, g)) for g in self.commutative)

    def _tails(self, w: int) -> dict:
        """Map alive-set -> number of standard tails of weight ``w``."""
        groups = self._tail_groups.get(w)
        if groups is None:
            groups = {}
            n = self.ctx.n
            for c in itertools.combinations(range(w + n - 1), n - 1):
                prev, tail = -1, []
                for pos in c + (w + n - 1,):
                    tail.append(pos - prev - 1)
                    prev = pos
                tail = tuple(tail)
                if self._in_commutative(tail):
                    continue
                alive = frozenset(i for i, g in enumerate(self.frob) if g.tail == tail)
                groups[alive] = groups.get(alive, 0) + 1
            self._tail_groups[w] = groups
        return groups

    def _prepend(self, r: int, j: int, alive: frozenset) -> int:
        if not alive:
            return self._free_count(r)
        key = (r, j, alive)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        total = 1 if r == 0 else 0
        for v, w in self._blocks:
            if w > r:
                continue
            survivors = []
            inside = False
            for i in alive:
                g = self.frob[i]
                idx = g.f_order - 1 - j
                gv = g.blocks[idx]
                if idx > 0:
                    if v == gv:
                        survivors.append(i)
                elif all(a >= b for a, b in zip(v, gv)):
                    inside = True
                    break
            if not inside:
                total += self._prepend(r - w, j + 1, frozenset(survivors))
        self._memo[key] = total
        return total

    def count(self, r: int) -> int:
        if r < 0:
            return 0
        hit = self._counts.get(r)
        if hit is None:
            hit = 0
            for w in range(r + 1):
                for alive, mult in self._tails(w).items():
                    hit += mult * self._prepend(r - w, 0, alive)
            self._counts[r] = hit
        return hit


@lru_cache(maxsize=256)
def _counter(gens: frozenset, ctx: RingContext) -> StandardMonomialCounter:
    return StandardMonomialCounter(gens, ctx)


def count_standard_monomials(initial, d: int) -> int:
    """Number of shifted-degree-``d`` positioned monomials outside ``initial``.

    ``initial`` is an :class:`~frobmod.groebner.InitialModule`.
    """
    total = 0
    for gens, shift in zip(initial.ideals, initial.shifts):
        total += _counter(frozenset(gens), initial.ctx).count(d - shift)
    return total


def count_ring_monomials(ctx: RingContext, d: int) -> int:
    """``dim [A]_d``."""
    return _counter(frozenset(), ctx).count(d)


# -- assembling the series ----------------------------------------------------


@dataclass
class PositionDiagnostics:
    kernel: IntPolynomial  # b_j
    cokernel: IntPolynomial  # c_j
    cokernel_pole: int  # d_j
    numerator: IntPolynomial  # a_j = c_j - (1-t)^{d_j} b_j
    stabilization_bound: int  # K0
    window: int  # W
    counts: list = field(default_factory=list)  # h_0 .. h_{K0+W}


@dataclass
class GradedDiagnostics:
    """Structure-map data of the monomial model ``A^t / I``."""

    kernel_hs: IntPolynomial
    cokernel_hs: tuple  # (c, d)
    stabilization_bound: int
    window: int
    positions: list = field(default_factory=list)

    def to_json(self) -> dict:
        c, d = self.cokernel_hs
        return {
            "model": "monomial",
            "kernel_hs": list(self.kernel_hs.coeffs),
            "cokernel_hs": {"numerator": list(c.coeffs), "pole_power": d},
            "stabilization_bound": self.stabilization_bound,
            "window": self.window,
        }


def stabilization_bound(ctx: RingContext, max_degree: int) -> int:
    p, n = ctx.p, ctx.n
    return 2 * (p - 1) * n + 2 + max_degree + n * (p - 1) + 1


def verification_window(ctx: RingContext) -> int:
    return ctx.n * (ctx.p - 1) + 5


def _position_series(gens: Sequence[FrobMonomial], ctx: RingContext) -> PositionDiagnostics:
    counter = _counter(frozenset(gens), ctx)
    k0 = stabilization_bound(ctx, max((g.degree for g in gens), default=0))
    w = verification_window(ctx)
    top = k0 + w
    h = [counter.count(i) for i in range(top + 1)]
    c, d = hs_commutative([g.tail for g in gens if g.f_order == 0], ctx)
    coker = series_coefficients(c, IntPolynomial.one_minus_t(d), top + 1) if not c.is_zero() else [0] * (top + 1)
    weights = [sum(v) + 1 for v in ctx.block_vectors()]
    b = []
    for i in range(top + 1):
        image = sum(h[i - wt] for wt in weights if wt <= i)
        b.append(image + coker[i] - h[i])
    if any(x < 0 for x in b):
        raise InvariantError(f"negative kernel dimension in {b}")
    if any(b[k0 + 1:]):
        raise InvariantError(
            f"structure-map kernel does not vanish on the window ({k0}, {top}]: {b[k0 + 1:]}")
    kernel = IntPolynomial(b[: k0 + 1])
    numerator = c - IntPolynomial.one_minus_t(d) * kernel
    return PositionDiagnostics(kernel, c, d, numerator, k0, w, h)


def hs_monomial_quotient(initial) -> tuple:
    """``(HilbertRational, GradedDiagnostics)`` of ``A^t / initial``."""
    ctx = initial.ctx
    if any(s < 0 for s in initial.shifts):
        raise ValueError("negative generator shifts are not supported")
    parts = [_position_series(gens, ctx) for gens in initial.ideals]
    d = max((pd.cokernel_pole for pd in parts), default=0)
    num = IntPolynomial()
    coker = IntPolynomial()
    kernel = IntPolynomial()
    for pd, s in zip(parts, initial.shifts):
        lift = IntPolynomial.one_minus_t(d - pd.cokernel_pole)
        num = num + (lift * pd.numerator).shift(s)
        coker = coker + (lift * pd.cokernel).shift(s)
        kernel = kernel + pd.kernel.shift(s)
    diag = GradedDiagnostics(
        kernel_hs=kernel,
        cokernel_hs=(coker, d),
        stabilization_bound=max((pd.stabilization_bound + s for pd, s in zip(parts, initial.shifts)), default=0),
        window=verification_window(ctx),
        positions=parts,
    )
    return HilbertRational(num, d, ctx), diag


def expand(hs: HilbertRational, D: int) -> list:
    """Series coefficients in degrees ``0 .. D``."""
    return hs.expand(D + 1)
