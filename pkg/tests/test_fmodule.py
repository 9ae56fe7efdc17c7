from __future__ import annotations

import pytest

from frobmod.fmodule import (
    FPresentation,
    Verdict,
    analyze,
    check_unit_identity,
    free_presentation,
    local_cohomology_presentation,
    localization_presentation,
    ring_presentation,
    standard_filtration_gr,
    structure_cokernel_hs,
    structure_kernel_hs,
)
from frobmod.errors import ContextMismatch
from frobmod.groebner import InitialModule, Status
from frobmod.hilbert import HilbertRational, IntPolynomial
from frobmod.monomial import RingContext, one, parse_word
from frobmod.operator import FreeModule, OperatorPoly, Semantics
from frobmod.oracle import filtered_graded_dim

from conftest import poly

CTX = RingContext(2, 1)
FIB_R = HilbertRational(IntPolynomial([1, 0, -1]), 0, CTX)
FIB_RX = HilbertRational(IntPolynomial([1, 1, -1, -1]), 0, CTX)


def ideal(*words, ctx=CTX):
    return InitialModule.from_monomials(ctx, [parse_word(w, ctx) for w in words], 1)


@pytest.mark.parametrize("pres,initial,hs", [
    (ring_presentation(CTX), ["f", "fx", "x^4"], FIB_R),
    (local_cohomology_presentation(CTX), ["x", "xf"], FIB_R),
    (localization_presentation(CTX), ["fx", "fx^2", "x^5", "xf"], FIB_RX),
])
def test_worked_examples(pres, initial, hs):
    gb, im = standard_filtration_gr(pres)
    assert gb.status is Status.COMPLETE
    assert sorted(im.render()) == sorted(initial)
    rep = analyze(pres)
    assert rep.hs == hs
    assert rep.delta == 0 and rep.multiplicity == 0
    assert rep.holonomic is Verdict.YES and rep.great is Verdict.YES
    assert rep.diagnostics.cokernel_hs[1] == 0
    assert rep.truncated_hilbert[:10] == hs.expand(10)


def test_free_module():
    for p, n in [(2, 1), (3, 1), (2, 2)]:
        ctx = RingContext(p, n)
        rep = analyze(free_presentation(ctx))
        assert rep.initial.render() == []
        assert rep.hs == HilbertRational.of_ring(ctx)
        assert rep.delta == n and rep.holonomic is Verdict.NO


def test_free_module_rank_two_with_shifts():
    rep = analyze(free_presentation(CTX, 2, (0, 2)))
    ring = HilbertRational.of_ring(CTX)
    assert rep.hs == ring + ring.shift(2)
    assert rep.multiplicity == 2


def test_structure_maps():
    c, d = structure_cokernel_hs(ideal("f", "fx", "x^4"))
    assert (list(c), d) == ([1, 1, 1, 1], 0)
    c, d = structure_cokernel_hs(ideal())
    assert (list(c), d) == ([1], 1)
    c, d = structure_cokernel_hs(ideal("x", "xf"))
    assert (list(c), d) == ([1], 0)
    assert structure_kernel_hs(ideal()).is_zero()
    b = structure_kernel_hs(ideal("f", "fx", "x^4"))
    assert all(x >= 0 for x in b)
    unit = InitialModule.from_monomials(CTX, [one(CTX)], 1)
    assert structure_kernel_hs(unit).is_zero()
    assert structure_cokernel_hs(unit)[0].is_zero()


def test_unit_identity():
    assert check_unit_identity()
    assert not check_unit_identity(shift=2)
    rx, r, h1 = (analyze(p).hs for p in (
        localization_presentation(CTX), ring_presentation(CTX), local_cohomology_presentation(CTX)))
    assert rx == r.shift(1) + h1
    for p in (3, 5):
        assert check_unit_identity(ctx=RingContext(p, 1))


def test_truncated_analysis_is_unknown():
    rep = analyze(localization_presentation(CTX), cap=3)
    assert rep.status is Status.TRUNCATED
    assert rep.holonomic is Verdict.UNKNOWN and rep.great is Verdict.UNKNOWN
    assert rep.hs is None and rep.delta is None
    data = rep.to_json()
    assert data["hs"] is None and data["holonomic"] is None


def test_non_holonomic_sum():
    # R + F: one copy of the ring and one free summand
    mod = FreeModule(CTX, Semantics.CARRYING, 2)
    rel = mod.vector([poly("F - 1", CTX, Semantics.CARRYING), OperatorPoly.zero(Semantics.CARRYING, CTX)])
    rep = analyze(FPresentation(CTX, 2, (0, 0), [rel]))
    assert rep.hs == FIB_R + HilbertRational.of_ring(CTX)
    assert rep.delta == 1 and rep.holonomic is Verdict.NO
    assert rep.multiplicity == 1
    assert rep.delta == rep.diagnostics.cokernel_hs[1]


def test_ring_killed_by_frobenius_is_truncated():
    # F / F(F) needs f x^k in the initial module for every k
    rel = OperatorPoly.monomial(parse_word("F", CTX, truncating=False), Semantics.CARRYING)
    rep = analyze(FPresentation(CTX, 1, (0,), [rel]), cap=12)
    assert rep.status is Status.TRUNCATED and rep.holonomic is Verdict.UNKNOWN


def test_relation_in_wrong_module():
    other = FreeModule(CTX, Semantics.CARRYING, 2)
    v = other.basis_vector(0)
    with pytest.raises(ContextMismatch):
        FPresentation(CTX, 1, (0,), [v])
    with pytest.raises(ContextMismatch):
        FPresentation(CTX, 2, (0, 0), [poly("F - 1", CTX, Semantics.CARRYING)])


@pytest.mark.parametrize("pres", [
    ring_presentation(CTX), local_cohomology_presentation(CTX), localization_presentation(CTX)])
def test_filtered_oracle_agrees(pres):
    hs = analyze(pres).hs
    assert [filtered_graded_dim(pres, i).value for i in range(9)] == hs.expand(9)
