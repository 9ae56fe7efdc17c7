"""Brute-force linear algebra over F_p, independent of the engine.

Nothing here uses the block-form arithmetic of :mod:`.monomial`.  A
monomial of F is kept as its closed form ``x^a F^e``; products follow
``x^a F^e x^b F^k = x^{a + p^e b} F^{e+k}``, the complexity of a monomial is
the length of its shortest word, found by breadth-first search over words,
and a product in A is the F-product when complexities add and zero
otherwise.  Ranks come from a sparse row echelon form mod p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .monomial import FrobMonomial, PositionedMonomial, RingContext
from .operator import FreeModule, ModuleVector, Semantics

Closed = tuple  # (a, e) with a a tuple of naturals


class OracleBudgetError(RuntimeError):
    """The requested enumeration or slack exceeds the configured budget."""


# -- closed-form monomials ------------------------------------------------------


def to_closed(m: FrobMonomial) -> Closed:
    p = m.ctx.p
    e = len(m.blocks)
    scale = p ** e
    a = [t * scale for t in m.tail]
    for i, b in enumerate(m.blocks):
        w = p ** i
        a = [ai + w * bi for ai, bi in zip(a, b)]
    return tuple(a), e


def from_closed(c: Closed, ctx: RingContext) -> FrobMonomial:
    a, e = c
    p = ctx.p
    blocks = []
    rest = list(a)
    for _ in range(e):
        blocks.append([r % p for r in rest])
        rest = [r // p for r in rest]
    return FrobMonomial(blocks, rest, ctx)


def complexity(c: Closed, p: int) -> int:
    """Length of the shortest word for ``x^a F^e``."""
    a, e = c
    scale = p ** e
    total = e
    for ai in a:
        low, high = ai % scale, ai // scale
        total += high
        while low:
            total += low % p
            low //= p
    return total


def f_product(c1: Closed, c2: Closed, p: int) -> Closed:
    (a1, e1), (a2, e2) = c1, c2
    scale = p ** e1
    return tuple(x + scale * y for x, y in zip(a1, a2)), e1 + e2


def a_product(c1: Closed, c2: Closed, p: int) -> Optional[Closed]:
    prod = f_product(c1, c2, p)
    if complexity(prod, p) == complexity(c1, p) + complexity(c2, p):
        return prod
    return None


class WordEnumerator:
    """Monomials of F grouped by complexity, by breadth-first search on words."""

    def __init__(self, ctx: RingContext, budget: int = 2_000_000):
        self.ctx = ctx
        self.budget = budget
        self.layers = [[((0,) * ctx.n, 0)]]
        self.seen = {self.layers[0][0]}

    def layer(self, d: int) -> list:
        if d < 0:
            return []
        p, n = self.ctx.p, self.ctx.n
        while len(self.layers) <= d:
            nxt = []
            for a, e in self.layers[-1]:
                cands = [(tuple(ai * p for ai in a), e + 1)]
                for i in range(n):
                    b = list(a)
                    b[i] += 1
                    cands.append((tuple(b), e))
                for c in cands:
                    if c not in self.seen:
                        self.seen.add(c)
                        nxt.append(c)
            if len(self.seen) > self.budget:
                raise OracleBudgetError("monomial enumeration budget exceeded")
            self.layers.append(nxt)
        return self.layers[d]


_ENUMS: dict = {}


def monomials_of_complexity(ctx: RingContext, d: int) -> list:
    enum = _ENUMS.get(ctx)
    if enum is None:
        enum = _ENUMS[ctx] = WordEnumerator(ctx)
    return enum.layer(d)


# -- sparse echelon form --------------------------------------------------------


@dataclass
class GradedMatrix:
    """Row echelon form over F_p.

    Rows are sparse dicts from column keys to coefficients; column keys are
    tuples compared lexicographically and every stored row has a distinct
    largest column (its pivot).
    """

    p: int
    pivots: dict = field(default_factory=dict)
    rows_added: int = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        p = self.p
        row = {k: v % p for k, v in row.items() if v % p}
        while row:
            lead = max(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            factor = row[lead]
            for k, v in piv.items():
                nv = (row.get(k, 0) - factor * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; True when it raised the rank."""
        self.rows_added += 1
        row = self.reduce(row)
        if not row:
            return False
        lead = max(row)
        inv = pow(row[lead], -1, self.p)
        self.pivots[lead] = {k: v * inv % self.p for k, v in row.items()}
        return True

    def pivots_at_most(self, bound) -> int:
        return sum(1 for k in self.pivots if k <= bound)


# -- helpers on engine vectors ----------------------------------------------------


def _vector_rows(v: ModuleVector) -> list:
    return [(to_closed(pm.mono), pm.pos, c) for pm, c in v.terms]


def _shifted_degree(c: Closed, pos: int, shifts, p: int) -> int:
    return complexity(c, p) + shifts[pos]


def _column(c: Closed, pos: int, shifts, p: int) -> tuple:
    return (_shifted_degree(c, pos, shifts, p), c[1], c[0], pos)


def _multiply(cof: Closed, rows, semantics: Semantics, shifts, p: int) -> dict:
    out = {}
    for c, pos, coeff in rows:
        if semantics is Semantics.TRUNCATING:
            prod = a_product(cof, c, p)
            if prod is None:
                continue
        else:
            prod = f_product(cof, c, p)
        col = _column(prod, pos, shifts, p)
        out[col] = (out.get(col, 0) + coeff) % p
    return out


def _max_degree(rows, shifts, p) -> int:
    return max(_shifted_degree(c, pos, shifts, p) for c, pos, _ in rows)


# -- public operations -------------------------------------------------------------


def free_dimension(module: FreeModule, d: int) -> int:
    """``dim [A^t]_d``: positioned monomials of shifted degree ``d``."""
    return sum(len(monomials_of_complexity(module.ctx, d - s)) for s in module.shifts)


def graded_dim_quotient(gens: Sequence[ModuleVector], d: int, module: FreeModule | None = None,
                        max_slack: int = 16) -> int:
    """``dim [A^t / N]_d`` for ``N`` spanned by ``gens`` (A semantics).

    Homogeneous generators give a graded submodule and one linear solve in
    degree ``d``.  Otherwise the answer is the degree-``d`` part of the
    associated graded (equivalently of the initial module): elements of
    ``N`` whose top degree is ``d`` are found among multiples of degree at
    most ``d + slack``, with the slack doubled until two values agree.
    """
    gens = [g for g in gens if g.terms]
    if module is None:
        if not gens:
            raise ValueError("pass the module when there are no generators")
        module = gens[0].module
    ctx, shifts, p = module.ctx, module.shifts, module.ctx.p
    if any(g.semantics is not Semantics.TRUNCATING for g in gens):
        raise ValueError("graded quotients are taken in A")
    homogeneous = all(
        len({_shifted_degree(c, pos, shifts, p) for c, pos, _ in _vector_rows(g)}) == 1 for g in gens)
    if homogeneous:
        mat = GradedMatrix(p)
        for g in gens:
            rows = _vector_rows(g)
            gd = _max_degree(rows, shifts, p)
            for cof in monomials_of_complexity(ctx, d - gd):
                row = _multiply(cof, rows, Semantics.TRUNCATING, shifts, p)
                if row:
                    mat.add(row)
        return free_dimension(module, d) - mat.rank

    def value(slack):
        mat = _span_matrix(gens, d + slack, module)
        top = sum(1 for k in mat.pivots if k[0] == d)
        return free_dimension(module, d) - top

    # a single multiple c*g with top degree d has deg(c) + deg(g) <= d + spread(g)
    spread = max(_max_degree(_vector_rows(g), shifts, p)
                 - min(_shifted_degree(c, pos, shifts, p) for c, pos, _ in _vector_rows(g)) for g in gens)
    s = max(spread, 1)
    prev, history = value(s), []
    while True:
        history.append((s, prev))
        if 2 * s > max(max_slack, 2 * spread):
            raise OracleBudgetError(f"no stabilization up to slack {max_slack}: {history}")
        s *= 2
        cur = value(s)
        if cur == prev:
            return cur
        prev = cur


def _span_matrix(gens: Sequence[ModuleVector], cap: int, module: FreeModule) -> GradedMatrix:
    ctx, shifts, p = module.ctx, module.shifts, module.ctx.p
    mat = GradedMatrix(p)
    for g in gens:
        if not g.terms:
            continue
        rows = _vector_rows(g)
        gd = _max_degree(rows, shifts, p)
        for k in range(0, cap - gd + 1):
            for cof in monomials_of_complexity(ctx, k):
                row = _multiply(cof, rows, module.semantics, shifts, p)
                if row:
                    mat.add(row)
    return mat


class SpanOracle:
    """The span of ``c * g`` over generators ``g`` and monomials ``c`` with
    ``deg(c) + deg(g) <= cap``, kept in echelon form for repeated queries."""

    def __init__(self, gens: Sequence[ModuleVector], cap: int, module: FreeModule):
        for g in gens:
            if g.module != module:
                raise ValueError("generators live in a different module")
        self.module = module
        self.cap = cap
        self.matrix = _span_matrix(gens, cap, module)

    def contains(self, h: ModuleVector) -> bool:
        if h.module != self.module:
            raise ValueError("target lives in a different module")
        p = self.module.ctx.p
        target = {}
        for c, pos, coeff in _vector_rows(h):
            target[_column(c, pos, self.module.shifts, p)] = coeff
        return not self.matrix.reduce(target)


def brute_membership(h: ModuleVector, gens: Sequence[ModuleVector], cap: int) -> bool:
    """Is ``h`` a combination of ``c * g`` with ``deg(c) + deg(g) <= cap``?"""
    if not h.terms:
        return True
    return SpanOracle(gens, cap, h.module).contains(h)


def brute_syzygies(gens: Sequence[PositionedMonomial], D: int, shifts: Sequence[int] | None = None) -> list:
    """Spanning set of all syzygies on monomials ``gens`` of Schreyer degree ``<= D``.

    Each syzygy is a :class:`ModuleVector` in the free module ``A^m`` whose
    ``i``-th basis vector has the degree of ``gens[i]``.
    """
    if not gens:
        return []
    ctx = gens[0].mono.ctx
    p = ctx.p
    if shifts is None:
        shifts = (0,) * (max(g.pos for g in gens) + 1)
    closed = [to_closed(g.mono) for g in gens]
    degs = [complexity(c, p) + shifts[g.pos] for c, g in zip(closed, gens)]
    syz_module = FreeModule(ctx, Semantics.TRUNCATING, len(gens), tuple(degs))
    out = []
    for s in range(min(degs), D + 1):
        by_image = {}
        for i, (c, g) in enumerate(zip(closed, gens)):
            for cof in monomials_of_complexity(ctx, s - degs[i]):
                prod = a_product(cof, c, p)
                unknown = (cof, i)
                if prod is None:
                    out.append(_syz_vector([(unknown, 1)], ctx, syz_module))
                else:
                    by_image.setdefault((prod, g.pos), []).append(unknown)
        for unknowns in by_image.values():
            first = unknowns[0]
            for other in unknowns[1:]:
                out.append(_syz_vector([(first, 1), (other, p - 1)], ctx, syz_module))
    return out


def _syz_vector(entries, ctx, module) -> ModuleVector:
    return ModuleVector(
        [(PositionedMonomial(from_closed(cof, ctx), i), coeff) for (cof, i), coeff in entries],
        module,
    )


def syzygy_to_vector(syz, module: FreeModule) -> ModuleVector:
    """A :class:`~frobmod.syzygy.MonomialSyzygy` as a vector of ``A^m``."""
    return ModuleVector([(PositionedMonomial(cof, i), c) for c, cof, i in syz.terms], module)


@dataclass
class FilteredDimension:
    value: int
    slack: int
    history: list


def _free_filtered_dim(ctx, shifts, i) -> int:
    return sum(len(monomials_of_complexity(ctx, k - s)) for s in shifts for k in range(0, i + 1))


def filtered_graded_dim(pres, i: int, slack: int = 1, max_slack: int = 16) -> FilteredDimension:
    """``dim Omega_i / Omega_{i-1}`` for the standard filtration of a presented module.

    ``pres`` has attributes ``ctx``, ``shifts`` and ``relations`` (vectors of
    F^t).  The relation module's intersection with the complexity-``i``
    piece is approximated by all multiples ``b * r`` of complexity at most
    ``i + slack``; the slack doubles until two consecutive values agree.
    """
    if i < 0:
        return FilteredDimension(0, 0, [])
    ctx, shifts = pres.ctx, tuple(pres.shifts)
    p = ctx.p
    rels = [r for r in pres.relations if r.terms]
    def value(s):
        mat = GradedMatrix(p)
        top = i + s
        for r in rels:
            rows = _vector_rows(r)
            rd = _max_degree(rows, shifts, p)
            for k in range(0, top - rd + 1):
                for cof in monomials_of_complexity(ctx, k):
                    row = _multiply(cof, rows, Semantics.CARRYING, shifts, p)
                    if row:
                        mat.add(row)

        def quotient(j):
            if j < 0:
                return 0
            bound = (j, float("inf"))
            return _free_filtered_dim(ctx, shifts, j) - mat.pivots_at_most(bound)

        return quotient(i) - quotient(i - 1)

    if not rels:
        v = value(0)
        return FilteredDimension(v, 0, [(0, v)])
    history = []
    s = max(slack, 1)
    prev = value(s)
    history.append((s, prev))
    while True:
        s2 = s * 2
        if s2 > max_slack:
            raise OracleBudgetError(f"no stabilization up to slack {max_slack}: {history}")
        cur = value(s2)
        history.append((s2, cur))
        if cur == prev:
            return FilteredDimension(cur, s, history)
        s, prev = s2, cur
