"""Finitely presented modules over the Frobenius operator ring F.

A presentation ``F^t / H`` with generator degrees ``shifts`` carries the
standard filtration ``Omega_i`` spanned by ``b * e_j`` with complexity of
``b`` plus ``shifts[j]`` at most ``i``.  Its associated graded module has the
same Hilbert function as the monomial quotient ``A^t / in(H)``, which is what
gets computed here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ContextMismatch, InvariantError
from .groebner import DEFAULT_CAP, GroebnerBasis, InitialModule, Status, buchberger, initial_module
from .hilbert import (
    GradedDiagnostics,
    HilbertRational,
    IntPolynomial,
    count_standard_monomials,
    delta,
    hs_monomial_quotient,
    multiplicity,
)
from .monomial import RingContext, frobenius, variable
from .operator import FreeModule, OperatorPoly, Semantics


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def to_json(self):
        return {"yes": True, "no": False, "unknown": None}[self.value]


@dataclass
class FPresentation:
    """``F^rank / (relations)`` with generator filtration degrees ``shifts``."""

    ctx: RingContext
    rank: int = 1
    shifts: tuple = ()
    relations: list = field(default_factory=list)
    name: str = ""

    def __post_init__(self):
        self.shifts = tuple(self.shifts) if self.shifts else (0,) * self.rank
        if len(self.shifts) != self.rank:
            raise ValueError("need one shift per generator")
        module = self.module
        rels = []
        for r in self.relations:
            if isinstance(r, OperatorPoly):
                if self.rank != 1:
                    raise ContextMismatch("a bare operator is a relation only in rank 1")
                r = r.as_vector(module)
            if r.module != module:
                raise ContextMismatch("relation does not live in the presented free module")
            rels.append(r)
        self.relations = rels

    @property
    def module(self) -> FreeModule:
        return FreeModule(self.ctx, Semantics.CARRYING, self.rank, self.shifts)


@dataclass
class AnalysisReport:
    presentation: FPresentation
    groebner: GroebnerBasis
    initial: InitialModule
    truncated_hilbert: list
    holonomic: Verdict
    great: Verdict
    hs: Optional[HilbertRational] = None
    delta: Optional[int] = None
    multiplicity: Optional[Fraction] = None
    diagnostics: Optional[GradedDiagnostics] = None

    @property
    def status(self) -> Status:
        return self.groebner.status

    def to_json(self) -> dict:
        ctx = self.presentation.ctx
        return {
            "name": self.presentation.name,
            "p": ctx.p,
            "n": ctx.n,
            "rank": self.presentation.rank,
            "shifts": list(self.presentation.shifts),
            "status": self.status.value,
            "cap": self.groebner.cap,
            "groebner": [str(g) for g in self.groebner.elements],
            "initial": self.initial.render(),
            "hs": self.hs.to_json() if self.hs is not None else None,
            "delta": self.delta,
            "multiplicity": str(self.multiplicity) if self.multiplicity is not None else None,
            "holonomic": self.holonomic.to_json(),
            "great": self.great.to_json(),
            "truncated_hilbert": list(self.truncated_hilbert),
            "diagnostics": self.diagnostics.to_json() if self.diagnostics is not None else None,
            "trace": {
                "robustness_bound": self.groebner.trace.robustness_bound,
                "pairs_processed": self.groebner.trace.pairs_processed,
                "max_degree_reached": self.groebner.trace.max_degree_reached,
            },
        }


def standard_filtration_gr(pres: FPresentation, cap: int = DEFAULT_CAP) -> tuple:
    """Gröbner basis of the relations and the initial module of ``gr H``."""
    gb = buchberger(pres.relations, cap=cap, module=pres.module)
    return gb, initial_module(gb)


def structure_cokernel_hs(initial: InitialModule) -> tuple:
    """``(c, d)``: Hilbert series of the cokernel of the structure map of
    ``A^t / initial``, i.e. of ``sum_j R/J_j (-shift_j)``, as ``c / (1-t)^d``."""
    _, diag = hs_monomial_quotient(initial)
    return diag.cokernel_hs


def structure_kernel_hs(initial: InitialModule) -> IntPolynomial:
    """Degreewise dimensions of the (finite length) kernel of the structure map."""
    _, diag = hs_monomial_quotient(initial)
    return diag.kernel_hs


def analyze(pres: FPresentation, cap: int = DEFAULT_CAP) -> AnalysisReport:
    gb, initial = standard_filtration_gr(pres, cap)
    prefix = [count_standard_monomials(initial, d) for d in range(0, max(cap - 1, 0))]
    if gb.status is Status.TRUNCATED:
        return AnalysisReport(pres, gb, initial, prefix, Verdict.UNKNOWN, Verdict.UNKNOWN)
    hs, diag = hs_monomial_quotient(initial)
    dlt = delta(hs)
    coker_dim = diag.cokernel_hs[1]
    if not diag.cokernel_hs[0].is_zero() and dlt != coker_dim:
        raise InvariantError(
            f"pole order {dlt} differs from the cokernel dimension {coker_dim}")
    zero_dimensional = all(
        pd.cokernel_pole == 0 for pd in diag.positions
    )
    if (dlt == 0) != zero_dimensional:
        raise InvariantError("holonomicity tests disagree")
    holonomic = Verdict.YES if dlt == 0 else Verdict.NO
    return AnalysisReport(
        pres, gb, initial, prefix, holonomic, Verdict.YES,
        hs=hs, delta=dlt, multiplicity=multiplicity(hs), diagnostics=diag,
    )


# -- the three examples over F_p[x] --------------------------------------------


def _x_power_frob(ctx: RingContext, k: int) -> OperatorPoly:
    # x^k F as an operator
    from .monomial import mul_carry

    mono = mul_carry(variable(ctx, 0, k), frobenius(ctx)) if k else frobenius(ctx)
    return OperatorPoly.monomial(mono, Semantics.CARRYING)


def ring_presentation(ctx: RingContext) -> FPresentation:
    """``R = F_p[x] = F / F(F - 1)``."""
    rel = OperatorPoly.monomial(frobenius(ctx), Semantics.CARRYING) - 1
    return FPresentation(ctx, 1, (0,), [rel], name="R")


def localization_presentation(ctx: RingContext) -> FPresentation:
    """``R_x = F / F(x^{p-1} F - 1)``, generated by ``1/x`` (one variable)."""
    if ctx.n != 1:
        raise ValueError("the localization example is in one variable")
    rel = _x_power_frob(ctx, ctx.p - 1) - 1
    return FPresentation(ctx, 1, (0,), [rel], name="R_x")


def local_cohomology_presentation(ctx: RingContext) -> FPresentation:
    """``H^1_x(R) = R_x / R = F / F(x, x^{p-1} F - 1)`` (one variable)."""
    if ctx.n != 1:
        raise ValueError("the local cohomology example is in one variable")
    x = OperatorPoly.monomial(variable(ctx, 0), Semantics.CARRYING)
    rel = _x_power_frob(ctx, ctx.p - 1) - 1
    return FPresentation(ctx, 1, (0,), [x, rel], name="H1_x")


def free_presentation(ctx: RingContext, rank: int = 1, shifts: Sequence[int] = ()) -> FPresentation:
    return FPresentation(ctx, rank, tuple(shifts), [], name="F")


def check_unit_identity(shift: int = 1, ctx: RingContext | None = None, cap: int = DEFAULT_CAP) -> bool:
    """Is ``HS(R_x) - t^shift HS(R) == HS(H^1_x)`` for the standard filtrations?

    The generator ``1/x`` of ``R_x`` has filtration degree 0 while the image
    of the generator of ``R`` is ``x * (1/x)``, one step up; hence the
    natural ``shift`` is 1.
    """
    ctx = ctx or RingContext(2, 1)
    reports = [analyze(pres, cap) for pres in (
        localization_presentation(ctx), ring_presentation(ctx), local_cohomology_presentation(ctx))]
    if any(r.hs is None for r in reports):
        return False
    rx, r, h1 = (rep.hs for rep in reports)
    return rx - r.shift(shift) == h1
