"""Elements of A and F, and vectors in shifted free modules over them."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .errors import ContextMismatch
from .monomial import (
    FrobMonomial,
    PositionedMonomial,
    RingContext,
    mul_carry,
    mul_trunc,
    one,
    render,
)


class Semantics(enum.Enum):
    TRUNCATING = "A"  # graded ring A, x_i^p f = 0
    CARRYING = "F"  # Frobenius operators, x_i^p F = F x_i

    @property
    def letter(self) -> str:
        return "f" if self is Semantics.TRUNCATING else "F"


def mono_mul(m1: FrobMonomial, m2: FrobMonomial, semantics: Semantics) -> Optional[FrobMonomial]:
    if semantics is Semantics.TRUNCATING:
        return mul_trunc(m1, m2)
    return mul_carry(m1, m2)


def _format_terms(pairs, render_one):
    if not pairs:
        return "0"
    out = []
    for mono, coeff in pairs:
        word = render_one(mono)
        if coeff == 1:
            out.append(word)
        elif word == "1":
            out.append(str(coeff))
        else:
            out.append(f"{coeff}*{word}")
    return " + ".join(out)


class OperatorPoly:
    """A finite F_p-combination of monomials of A or F.

    Terms are kept sorted in descending term order, so the leading term is
    the first one.
    """

    __slots__ = ("terms", "semantics", "ctx", "_hash")

    def __init__(self, terms: Mapping[FrobMonomial, int] | Iterable, semantics: Semantics, ctx: RingContext):
        p = ctx.p
        acc = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            if mono is None:
                continue
            if mono.ctx != ctx:
                raise ContextMismatch("monomial from a different ring")
            acc[mono] = (acc.get(mono, 0) + coeff) % p
        pairs = sorted(((m, c) for m, c in acc.items() if c), key=lambda t: t[0].sort_key, reverse=True)
        object.__setattr__(self, "terms", tuple(pairs))
        object.__setattr__(self, "semantics", semantics)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("OperatorPoly is immutable")

    @classmethod
    def monomial(cls, mono: FrobMonomial, semantics: Semantics, coeff: int = 1) -> "OperatorPoly":
        return cls([(mono, coeff)], semantics, mono.ctx)

    @classmethod
    def constant(cls, c: int, semantics: Semantics, ctx: RingContext) -> "OperatorPoly":
        return cls([(one(ctx), c)], semantics, ctx)

    @classmethod
    def zero(cls, semantics: Semantics, ctx: RingContext) -> "OperatorPoly":
        return cls((), semantics, ctx)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def support(self) -> list:
        return [m for m, _ in self.terms]

    def coefficient(self, mono: FrobMonomial) -> int:
        for m, c in self.terms:
            if m == mono:
                return c
        return 0

    @property
    def degree(self) -> int:
        """Largest monomial degree in the support (complexity in F)."""
        if not self.terms:
            raise ValueError("the zero element has no degree")
        return self.terms[0][0].degree

    def is_homogeneous(self) -> bool:
        return len({m.degree for m, _ in self.terms}) <= 1

    def _compatible(self, other):
        if not isinstance(other, OperatorPoly):
            return False
        if other.semantics is not self.semantics or other.ctx != self.ctx:
            raise ContextMismatch("operands differ in ring or semantics")
        return True

    def __add__(self, other):
        if isinstance(other, int):
            other = OperatorPoly.constant(other, self.semantics, self.ctx)
        if not self._compatible(other):
            return NotImplemented
        return OperatorPoly(self.terms + other.terms, self.semantics, self.ctx)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if isinstance(other, int):
            other = OperatorPoly.constant(other, self.semantics, self.ctx)
        if not self._compatible(other):
            return NotImplemented
        return self + other.scale(-1)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "OperatorPoly":
        return OperatorPoly([(m, c * k) for m, k in self.terms], self.semantics, self.ctx)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, ModuleVector):
            return other.left_mul(self)
        if not self._compatible(other):
            return NotImplemented
        sem = self.semantics
        out = []
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                prod = mono_mul(m1, m2, sem)
                if prod is not None:
                    out.append((prod, c1 * c2))
        return OperatorPoly(out, sem, self.ctx)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        result = OperatorPoly.constant(1, self.semantics, self.ctx)
        for _ in range(k):
            result = result * self
        return result

    def leading_term(self) -> tuple:
        """``(coefficient, monomial)`` of the largest support term."""
        if not self.terms:
            raise ValueError("the zero element has no leading term")
        m, c = self.terms[0]
        return c, m

    def leading_monomial(self) -> FrobMonomial:
        return self.leading_term()[1]

    def monic(self) -> "OperatorPoly":
        c, _ = self.leading_term()
        return self.scale(pow(c, -1, self.ctx.p))

    def with_semantics(self, semantics: Semantics) -> "OperatorPoly":
        return OperatorPoly(self.terms, semantics, self.ctx)

    def __eq__(self, other):
        if not isinstance(other, OperatorPoly):
            return NotImplemented
        return self.semantics is other.semantics and self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.terms, self.semantics, self.ctx))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        letter = self.semantics.letter
        return _format_terms(self.terms, lambda m: render(m, letter))

    def __repr__(self):
        return f"OperatorPoly({str(self)!r}, {self.semantics.value}, p={self.ctx.p}, n={self.ctx.n})"

    def as_vector(self, module: "FreeModule | None" = None) -> "ModuleVector":
        if module is None:
            module = FreeModule(self.ctx, self.semantics, 1)
        return ModuleVector([(PositionedMonomial(m, 0), c) for m, c in self.terms], module)


def bernstein_symbol(g: OperatorPoly) -> OperatorPoly:
    """Highest-complexity part of an operator in F, read as an element of A."""
    if g.semantics is not Semantics.CARRYING:
        raise ContextMismatch("the symbol is taken of an element of F")
    if g.is_zero():
        raise ValueError("the zero operator has no symbol")
    top = g.degree
    return OperatorPoly([(m, c) for m, c in g.terms if m.degree == top], Semantics.TRUNCATING, g.ctx)


@dataclass(frozen=True)
class FreeModule:
    """The free module sum_j R(-d_j) e_j with ``deg(1 e_j) = shifts[j]``."""

    ctx: RingContext
    semantics: Semantics
    rank: int = 1
    shifts: tuple = field(default=())

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        shifts = tuple(int(s) for s in self.shifts) if self.shifts else (0,) * self.rank
        if len(shifts) != self.rank:
            raise ValueError("need one shift per basis vector")
        object.__setattr__(self, "shifts", shifts)

    def key(self, pm: PositionedMonomial) -> tuple:
        """Order key: shifted degree, then the term order, then position."""
        return (pm.mono.degree + self.shifts[pm.pos], pm.mono.sort_key, pm.pos)

    def degree(self, pm: PositionedMonomial) -> int:
        return pm.mono.degree + self.shifts[pm.pos]

    def with_semantics(self, semantics: Semantics) -> "FreeModule":
        return FreeModule(self.ctx, semantics, self.rank, self.shifts)

    def basis_vector(self, j: int, coeff: int = 1) -> "ModuleVector":
        return ModuleVector([(PositionedMonomial(one(self.ctx), j), coeff)], self)

    def vector(self, components: Sequence[OperatorPoly]) -> "ModuleVector":
        """Assemble a vector from one operator per position."""
        if len(components) != self.rank:
            raise ValueError(f"expected {self.rank} components")
        terms = []
        for j, comp in enumerate(components):
            if isinstance(comp, int):
                comp = OperatorPoly.constant(comp, self.semantics, self.ctx)
            if comp.semantics is not self.semantics or comp.ctx != self.ctx:
                raise ContextMismatch("component does not match the module")
            terms.extend((PositionedMonomial(m, j), c) for m, c in comp.terms)
        return ModuleVector(terms, self)


class ModuleVector:
    """A finite F_p-combination of positioned monomials, sorted descending."""

    __slots__ = ("terms", "module", "_hash")

    def __init__(self, terms, module: FreeModule):
        p = module.ctx.p
        acc = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for pm, coeff in items:
            if pm.pos >= module.rank or pm.pos < 0:
                raise ValueError(f"position {pm.pos} outside rank {module.rank}")
            acc[pm] = (acc.get(pm, 0) + coeff) % p
        key = module.key
        pairs = sorted(((pm, c) for pm, c in acc.items() if c), key=lambda t: key(t[0]), reverse=True)
        object.__setattr__(self, "terms", tuple(pairs))
        object.__setattr__(self, "module", module)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("ModuleVector is immutable")

    @property
    def semantics(self) -> Semantics:
        return self.module.semantics

    @property
    def ctx(self) -> RingContext:
        return self.module.ctx

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def support(self) -> list:
        return [pm for pm, _ in self.terms]

    @property
    def degree(self) -> int:
        """Largest shifted degree in the support."""
        if not self.terms:
            raise ValueError("the zero vector has no degree")
        return self.module.degree(self.terms[0][0])

    def is_homogeneous(self) -> bool:
        deg = self.module.degree
        return len({deg(pm) for pm, _ in self.terms}) <= 1

    def component(self, j: int) -> OperatorPoly:
        return OperatorPoly([(pm.mono, c) for pm, c in self.terms if pm.pos == j], self.semantics, self.ctx)

    def _compatible(self, other):
        if not isinstance(other, ModuleVector):
            return False
        if other.module != self.module:
            raise ContextMismatch("vectors live in different free modules")
        return True

    def __add__(self, other):
        if not self._compatible(other):
            return NotImplemented
        return ModuleVector(self.terms + other.terms, self.module)

    def __sub__(self, other):
        if not self._compatible(other):
            return NotImplemented
        return ModuleVector(self.terms + other.scale(-1).terms, self.module)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c: int) -> "ModuleVector":
        return ModuleVector([(pm, c * k) for pm, k in self.terms], self.module)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, OperatorPoly):
            return self.left_mul(other)
        return NotImplemented

    def left_mul(self, g: OperatorPoly) -> "ModuleVector":
        """The left module action ``g * self``."""
        if g.semantics is not self.semantics or g.ctx != self.ctx:
            raise ContextMismatch("operator does not act on this module")
        sem = self.semantics
        out = []
        for m1, c1 in g.terms:
            for pm, c2 in self.terms:
                prod = mono_mul(m1, pm.mono, sem)
                if prod is not None:
                    out.append((PositionedMonomial(prod, pm.pos), c1 * c2))
        return ModuleVector(out, self.module)

    def mul_monomial(self, c: FrobMonomial, coeff: int = 1) -> "ModuleVector":
        """``coeff * c * self`` for a single monomial ``c``."""
        sem = self.semantics
        out = []
        for pm, k in self.terms:
            prod = mono_mul(c, pm.mono, sem)
            if prod is not None:
                out.append((PositionedMonomial(prod, pm.pos), coeff * k))
        return ModuleVector(out, self.module)

    def leading_term(self) -> tuple:
        """``(coefficient, PositionedMonomial)`` of the largest support term."""
        if not self.terms:
            raise ValueError("the zero vector has no leading term")
        pm, c = self.terms[0]
        return c, pm

    def leading_monomial(self) -> PositionedMonomial:
        return self.terms[0][0]

    def monic(self) -> "ModuleVector":
        c, _ = self.leading_term()
        return self.scale(pow(c, -1, self.ctx.p))

    def symbol(self) -> "ModuleVector":
        """Bernstein symbol: top shifted-degree part, as a vector over A."""
        top = self.degree
        target = self.module.with_semantics(Semantics.TRUNCATING)
        deg = self.module.degree
        return ModuleVector([(pm, c) for pm, c in self.terms if deg(pm) == top], target)

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.module == other.module and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.terms, self.module))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        letter = self.semantics.letter
        rank = self.module.rank

        def word(pm):
            w = render(pm.mono, letter)
            if rank == 1:
                return w
            return f"e{pm.pos + 1}" if w == "1" else f"{w}*e{pm.pos + 1}"

        return _format_terms(self.terms, word)

    def __repr__(self):
        return f"ModuleVector({str(self)!r}, rank={self.module.rank})"
