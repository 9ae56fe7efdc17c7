from __future__ import annotations

import random

import pytest

from frobmod.errors import ContextMismatch
from frobmod.monomial import RingContext, mul_trunc, parse_word
from frobmod.operator import FreeModule, ModuleVector, OperatorPoly, Semantics, bernstein_symbol

from conftest import A, F, poly, random_monomial


def random_poly(rng, ctx, sem, max_degree=6, terms=3):
    pairs = [(random_monomial(rng, ctx, max_degree), rng.randrange(1, ctx.p)) for _ in range(terms)]
    return OperatorPoly(pairs, sem, ctx)


def test_add_char_two(r21):
    g = poly("xf + x^2", r21)
    assert (g + g).is_zero()
    assert g + OperatorPoly.zero(A, r21) == g
    assert poly("f + x", r21) + poly("f", r21) == poly("x", r21)


def test_mul_examples(r21):
    g = poly("xfxf + f + x", r21)
    assert poly("x", r21) * g == poly("xf + x^2", r21)
    h = poly("x^2", r21, F) * poly("F - 1", r21, F)
    assert str(h) == "Fx + x^2"
    assert OperatorPoly.constant(1, A, r21) * g == g


def test_mixed_semantics_rejected(r21):
    with pytest.raises(ContextMismatch):
        poly("x", r21, A) * poly("x", r21, F)
    with pytest.raises(ContextMismatch):
        poly("x", r21, A) + poly("x", RingContext(3, 1), A)


def test_leading_terms(r21):
    assert poly("xfxf + f + x", r21).leading_term() == (1, parse_word("xfxf", r21))
    assert str(poly("Fx - x^2", r21, F).leading_monomial()) == "fx"
    m = parse_word("fxf", r21)
    assert OperatorPoly.monomial(m, A, 1).leading_monomial() == m
    with pytest.raises(ValueError):
        OperatorPoly.zero(A, r21).leading_term()


def test_bernstein_symbol(r21):
    assert bernstein_symbol(poly("F - 1", r21, F)) == poly("f", r21, A)
    assert bernstein_symbol(poly("xF - 1", r21, F)) == poly("xf", r21, A)
    assert bernstein_symbol(poly("x", r21, F)) == poly("x", r21, A)
    with pytest.raises(ContextMismatch):
        bernstein_symbol(poly("x", r21, A))


def test_rendering(r21):
    assert str(poly("xfxf + f + x", r21)) == "xfxf + f + x"
    assert str(poly("2x + f", RingContext(3, 1))) == "f + 2*x"
    assert str(OperatorPoly.zero(A, r21)) == "0"


def test_ring_axioms_sampled():
    rng = random.Random(7)
    count = 0
    for p, n in [(2, 1), (3, 1), (2, 2), (3, 2)]:
        ctx = RingContext(p, n)
        for sem in (A, F):
            for _ in range(130):
                a, b, c = (random_poly(rng, ctx, sem, 6) for _ in range(3))
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c
                assert (a + b) * c == a * c + b * c
                count += 1
    assert count >= 1000


def test_symbol_multiplicative():
    rng = random.Random(8)
    for p, n in [(2, 1), (3, 1), (2, 2)]:
        ctx = RingContext(p, n)
        for _ in range(300):
            g, h = random_poly(rng, ctx, F, 4), random_poly(rng, ctx, F, 4)
            if g.is_zero() or h.is_zero():
                continue
            right = bernstein_symbol(g) * bernstein_symbol(h)
            if not right.is_zero():
                assert bernstein_symbol(g * h) == right


def test_leading_term_multiplicative():
    rng = random.Random(9)
    for p, n in [(2, 1), (3, 2)]:
        ctx = RingContext(p, n)
        for sem in (A, F):
            for _ in range(300):
                g, h = random_poly(rng, ctx, sem, 4), random_poly(rng, ctx, sem, 4)
                if g.is_zero() or h.is_zero():
                    continue
                lead = mul_trunc(g.leading_monomial(), h.leading_monomial())
                if lead is not None:
                    assert (g * h).leading_monomial() == lead


def test_free_module_vectors(r21):
    mod = FreeModule(r21, F, 2, (0, 1))
    v = mod.vector([poly("x", r21, F), poly("F - 1", r21, F)])
    # shifted degree: x*e1 has degree 1, F*e2 has degree 2
    assert v.leading_monomial().pos == 1
    assert v.degree == 2
    assert str(v) == "F*e2 + x*e1 + e2"
    w = poly("x", r21, F) * v
    assert w.component(0) == poly("x^2", r21, F)
    assert w.component(1) == poly("xF + x", r21, F)
    with pytest.raises(ValueError):
        ModuleVector([(v.leading_monomial().__class__(parse_word("x", r21), 2), 1)], mod)


def test_vector_module_mismatch(r21):
    a = FreeModule(r21, A, 2).basis_vector(0)
    b = FreeModule(r21, A, 3).basis_vector(0)
    with pytest.raises(ContextMismatch):
        a + b


def test_vector_symbol(r21):
    mod = FreeModule(r21, F, 1)
    v = poly("xF + 1", r21, F).as_vector(mod)
    s = v.symbol()
    assert s.semantics is Semantics.TRUNCATING and str(s) == "xf"
