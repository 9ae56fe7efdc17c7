"""Reduction and the Buchberger loop for left submodules of A^t and F^t.

One engine serves both rings.  Leading monomials are taken with respect to
the term order on positioned monomials, and in both rings the leading
monomial of ``c * g`` is the truncating product ``c * lead(g)`` whenever
that product is nonzero.  Hence the syzygies of module :mod:`.syzygy`
drive the S-elements for both semantics.
"""

from __future__ import annotations

import enum
import heapq
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import ContextMismatch, InvariantError
from .monomial import FrobMonomial, PositionedMonomial, RingContext, left_divide, robustness
from .operator import FreeModule, ModuleVector, OperatorPoly, Semantics, mono_mul
from .syzygy import MonomialSyzygy, annihilator_syzygies, binomial_syzygies

DEFAULT_CAP = 50


class Status(enum.Enum):
    COMPLETE = "complete"
    TRUNCATED = "truncated"


@dataclass
class GroebnerTrace:
    robustness_bound: Optional[int] = None  # the constant C, A-semantics only
    pairs_processed: int = 0
    max_degree_reached: int = 0
    elements_added: int = 0
    zero_reductions: int = 0


@dataclass(frozen=True)
class InitialModule:
    """Minimal generators of a monomial submodule of ``A^t``, per position."""

    ctx: RingContext
    shifts: tuple
    ideals: tuple  # one tuple of FrobMonomial per position
    lower_bound: bool = False  # set when taken from a truncated run
    valid_to: Optional[int] = None

    def __post_init__(self):
        if len(self.ideals) != len(self.shifts):
            raise ValueError("need one ideal per position")
        minimal = tuple(tuple(minimize(list(gens))) for gens in self.ideals)
        object.__setattr__(self, "ideals", minimal)
        object.__setattr__(self, "shifts", tuple(self.shifts))

    @classmethod
    def from_monomials(cls, ctx, gens: Iterable, rank: int = 1, shifts=None, **kw) -> "InitialModule":
        buckets = [[] for _ in range(rank)]
        for g in gens:
            if isinstance(g, FrobMonomial):
                g = PositionedMonomial(g, 0)
            buckets[g.pos].append(g.mono)
        shifts = tuple(shifts) if shifts is not None else (0,) * rank
        return cls(ctx, shifts, tuple(tuple(b) for b in buckets), **kw)

    @property
    def rank(self) -> int:
        return len(self.ideals)

    def generators(self) -> list:
        return [PositionedMonomial(m, j) for j, gens in enumerate(self.ideals) for m in gens]

    def contains(self, pm) -> bool:
        """Membership of a positioned monomial (a bare monomial means position 0)."""
        if isinstance(pm, FrobMonomial):
            pm = PositionedMonomial(pm)
        return any(left_divide(pm.mono, g) is not None for g in self.ideals[pm.pos])

    def contraction(self, j: int) -> list:
        """Exponents of the f-order-zero generators at position ``j``."""
        return [g.tail for g in self.ideals[j] if g.f_order == 0]

    def max_degree(self) -> int:
        return max((g.degree for gens in self.ideals for g in gens), default=0)

    def render(self, frob: str = "f") -> list:
        from .monomial import render

        out = []
        for j, gens in enumerate(self.ideals):
            for g in sorted(gens, key=lambda m: m.sort_key):
                word = render(g, frob)
                out.append(word if self.rank == 1 else f"{word}*e{j + 1}")
        return out

    def __eq__(self, other):
        if not isinstance(other, InitialModule):
            return NotImplemented
        return (self.ctx == other.ctx and self.shifts == other.shifts
                and [set(a) for a in self.ideals] == [set(b) for b in other.ideals])

    def __hash__(self):
        return hash((self.ctx, self.shifts, tuple(frozenset(a) for a in self.ideals)))


def minimize(monos: list) -> list:
    """Drop monomials that are left multiples of another one in the list."""
    monos = sorted(set(monos), key=lambda m: m.sort_key)
    kept = []
    for m in monos:
        if not any(left_divide(m, k) is not None for k in kept):
            kept.append(m)
    return kept


@dataclass
class GroebnerBasis:
    elements: list
    module: FreeModule
    status: Status
    cap: int
    trace: GroebnerTrace = field(default_factory=GroebnerTrace)

    @property
    def semantics(self) -> Semantics:
        return self.module.semantics

    @property
    def complete(self) -> bool:
        return self.status is Status.COMPLETE

    def leading_monomials(self) -> list:
        return [g.leading_monomial() for g in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


# -- reduction --------------------------------------------------------------


class _Desc:
    # heap entry ordering the largest term first
    __slots__ = ("key", "pm")

    def __init__(self, key, pm):
        self.key = key
        self.pm = pm

    def __lt__(self, other):
        return self.key > other.key


def _find_reducer(pm: PositionedMonomial, basis: Sequence[ModuleVector]):
    for g in basis:
        lead = g.terms[0][0]
        if lead.pos != pm.pos:
            continue
        c = left_divide(pm.mono, lead.mono)
        if c is not None:
            return c, g
    return None


def normal_form(g: ModuleVector, basis: Sequence[ModuleVector]) -> ModuleVector:
    """Fully reduce ``g`` by ``basis``.

    Terms are visited from the largest down.  A term is reducible when it is
    a left multiple ``c * lead(b)`` of a basis element's leading monomial;
    the first such ``b`` in index order is used.  Subtracting
    ``coeff * c * b`` only introduces smaller terms, so one descending pass
    suffices.
    """
    module = g.module
    for b in basis:
        if b.module != module:
            raise ContextMismatch("basis element lives in a different free module")
    basis = [b for b in basis if b.terms]
    if not basis:
        return g
    p = module.ctx.p
    sem = module.semantics
    key = module.key
    coeffs = dict(g.terms)
    heap = [_Desc(key(pm), pm) for pm in coeffs]
    heapq.heapify(heap)
    remainder = []
    while heap:
        pm = heapq.heappop(heap).pm
        coeff = coeffs.pop(pm, 0)
        if not coeff:
            continue
        found = _find_reducer(pm, basis)
        if found is None:
            remainder.append((pm, coeff))
            continue
        c, b = found
        lc = b.terms[0][1]
        factor = coeff * pow(lc, -1, p) % p
        for bpm, bc in b.terms[1:]:
            prod = mono_mul(c, bpm.mono, sem)
            if prod is None:
                continue
            q = PositionedMonomial(prod, bpm.pos)
            old = coeffs.get(q)
            if old is None:
                heapq.heappush(heap, _Desc(key(q), q))
                old = 0
            coeffs[q] = (old - factor * bc) % p
    return ModuleVector(remainder, module)


def head_reduce(g: ModuleVector, basis: Sequence[ModuleVector]) -> ModuleVector:
    """Reduce only until the leading term is irreducible (or g is zero)."""
    p = g.module.ctx.p
    while g.terms:
        pm = g.terms[0][0]
        found = _find_reducer(pm, basis)
        if found is None:
            break
        c, b = found
        factor = g.terms[0][1] * pow(b.terms[0][1], -1, p)
        g = g - b.mul_monomial(c, factor)
    return g


def interreduce(elements: Sequence[ModuleVector]) -> list:
    """Minimal, fully reduced, monic generating set of the same submodule.

    An element whose leading monomial is a left multiple of another's is
    replaced by its normal form against the rest (and dropped if that is
    zero); then every survivor is tail reduced.  Idempotent.
    """
    work = [g for g in elements if g.terms]
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(work):
            lead = g.leading_monomial()
            others = work[:i] + work[i + 1:]
            if not any(h.leading_monomial().pos == lead.pos
                       and left_divide(lead.mono, h.leading_monomial().mono) is not None
                       for h in others):
                continue
            r = normal_form(g, others)
            work = others if r.is_zero() else others[:i] + [r] + others[i:]
            changed = True
            break
    out = []
    for i, g in enumerate(work):
        others = work[:i] + work[i + 1:]
        r = normal_form(g, others) if others else g
        # the leading term is not reducible by the others, so only the tail moves
        if not r.terms or r.terms[0][0] != g.terms[0][0]:
            raise InvariantError("interreduction changed a leading monomial")
        out.append(r.monic())
    out.sort(key=lambda v: v.module.key(v.leading_monomial()))
    return out


# -- Buchberger ---------------------------------------------------------------


def element_robustness(g: ModuleVector) -> int:
    """Largest robustness over the support (zero iff g has f-order zero)."""
    return max((robustness(pm.mono) for pm, _ in g.terms), default=0)


def robustness_constant(gens: Sequence[ModuleVector]) -> int:
    """``max(rb(g) + deg(g))`` over generators with nonzero robustness."""
    return max((element_robustness(g) + g.degree for g in gens if element_robustness(g)), default=0)


def _as_vectors(gens) -> tuple:
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator to fix the ring")
    vecs = [g.as_vector() if isinstance(g, OperatorPoly) else g for g in gens]
    module = vecs[0].module
    for v in vecs:
        if v.module != module:
            raise ContextMismatch("generators live in different free modules")
    return vecs, module


def s_element(syz: MonomialSyzygy, basis: Sequence[ModuleVector]) -> ModuleVector:
    """``sum coeff * cofactor * basis[index]`` in the basis' own ring."""
    module = basis[syz.terms[0][2]].module
    out = ModuleVector((), module)
    for coeff, cof, i in syz.terms:
        out = out + basis[i].mul_monomial(cof, coeff)
    return out


def buchberger(gens, cap: int = DEFAULT_CAP, module: FreeModule | None = None,
               tail_reduce: bool = True) -> GroebnerBasis:
    """Gröbner basis of the left submodule generated by ``gens``.

    S-elements are processed in ascending Schreyer degree, FIFO within a
    degree; input generators enter the same queue at their own degree.  The
    run stops as TRUNCATED as soon as the next queued degree exceeds
    ``cap``.  With ``tail_reduce=False`` new elements are only reduced
    until their leading term is irreducible (used to cross-check).
    """
    gens = list(gens)
    if module is None:
        vecs, module = _as_vectors(gens)
    else:
        vecs = [g.as_vector(module) if isinstance(g, OperatorPoly) else g for g in gens]
    vecs = [v for v in vecs if v.terms]
    for v in vecs:
        if v.degree > cap:
            raise ValueError(f"generator degree {v.degree} exceeds cap {cap}")

    trace = GroebnerTrace()
    check_rb = module.semantics is Semantics.TRUNCATING
    if check_rb:
        trace.robustness_bound = robustness_constant(vecs)
    bound = trace.robustness_bound

    basis: list = []
    counter = itertools.count()
    queue: list = []
    for v in vecs:
        heapq.heappush(queue, (v.degree, next(counter), v, None))

    def insert(h: ModuleVector):
        if check_rb:
            rb = element_robustness(h)
            if rb and rb + h.degree > bound:
                raise InvariantError(
                    f"robustness certificate violated: rb={rb}, deg={h.degree}, bound={bound}")
        k = len(basis)
        basis.append(h)
        trace.elements_added += 1
        lead = h.leading_monomial()
        shift = module.shifts[lead.pos]
        new = annihilator_syzygies(lead.mono, k, shift)
        for j in range(k):
            other = basis[j].leading_monomial()
            if other.pos == lead.pos:
                new += binomial_syzygies(other.mono, lead.mono, j, k, lead.pos, shift)
        for syz in new:
            heapq.heappush(queue, (syz.schreyer_degree, next(counter), None, syz))

    status = Status.COMPLETE
    while queue:
        degree = queue[0][0]
        if degree > cap:
            status = Status.TRUNCATED
            break
        _, _, vec, syz = heapq.heappop(queue)
        trace.max_degree_reached = max(trace.max_degree_reached, degree)
        if syz is not None:
            trace.pairs_processed += 1
            vec = s_element(syz, basis)
        h = normal_form(vec, basis) if tail_reduce else head_reduce(vec, basis)
        if not h.terms:
            trace.zero_reductions += 1
            continue
        insert(h.monic())

    return GroebnerBasis(interreduce(basis), module, status, cap, trace)


def initial_module(gb: GroebnerBasis) -> InitialModule:
    """Minimal generators of the initial module of the span of ``gb``."""
    truncated = gb.status is Status.TRUNCATED
    return InitialModule.from_monomials(
        gb.module.ctx,
        gb.leading_monomials(),
        rank=gb.module.rank,
        shifts=gb.module.shifts,
        lower_bound=truncated,
        valid_to=gb.cap if truncated else None,
    )


def s_element_remainders(gb: GroebnerBasis) -> list:
    """Normal forms of every generating S-element of the final basis; all
    zero exactly when the basis passes the Buchberger criterion."""
    basis = gb.elements
    module = gb.module
    out = []
    for k, h in enumerate(basis):
        lead = h.leading_monomial()
        shift = module.shifts[lead.pos]
        syzs = annihilator_syzygies(lead.mono, k, shift)
        for j in range(k):
            other = basis[j].leading_monomial()
            if other.pos == lead.pos:
                syzs += binomial_syzygies(other.mono, lead.mono, j, k, lead.pos, shift)
        for syz in syzs:
            if syz.schreyer_degree <= gb.cap:
                out.append(normal_form(s_element(syz, basis), basis))
    return out


def criterion_holds(gb: GroebnerBasis) -> bool:
    return all(not r.terms for r in s_element_remainders(gb))
