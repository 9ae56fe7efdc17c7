from __future__ import annotations

import random

from frobmod.monomial import PositionedMonomial, RingContext, mul_trunc, parse_word
from frobmod.operator import FreeModule, Semantics
from frobmod.oracle import SpanOracle, brute_syzygies, syzygy_to_vector
from frobmod.syzygy import generating_syzygies, pair_syzygies

from conftest import random_monomial


def as_sets(syzs):
    return {tuple(sorted((i, c, str(m)) for c, m, i in s.terms)) for s in syzs}


def test_pair_x_f(r21):
    got = pair_syzygies(parse_word("x", r21), parse_word("f", r21))
    assert as_sets(got) == {((1, 1, "x^2"),)}


def test_pair_f_fx(r21):
    got = pair_syzygies(parse_word("f", r21), parse_word("fx", r21))
    assert as_sets(got) == {((0, 1, "x^2"),), ((1, 1, "x^2"),)}


def test_pair_f_fxf(r21):
    got = pair_syzygies(parse_word("f", r21), parse_word("fxf", r21))
    assert as_sets(got) == {((0, 1, "x^2"),), ((1, 1, "x^2"),), ((0, 1, "fx"), (1, 1, "1"))}


def test_generating_three_monomials(r21):
    gens = [PositionedMonomial(parse_word(s, r21)) for s in ("x^3", "xf", "xfxf")]
    got = as_sets(generating_syzygies(gens))
    assert ((1, 1, "x"),) in got
    assert ((2, 1, "x"),) in got
    assert ((1, 1, "xf"), (2, 1, "1")) in got


def test_commutative_pair(r22):
    gens = [PositionedMonomial(parse_word(s, r22)) for s in ("x^2y", "xy^3")]
    got = generating_syzygies(gens)
    assert len(got) == 1
    assert as_sets(got) == {((0, 1, "y^2"), (1, 1, "x"))}
    assert got[0].schreyer_degree == 5


def test_distinct_positions_pure_x(r21):
    gens = [PositionedMonomial(parse_word("x", r21), 0), PositionedMonomial(parse_word("x^2", r21), 1)]
    assert generating_syzygies(gens) == []


def test_soundness_and_homogeneity():
    rng = random.Random(21)
    for _ in range(200):
        p, n = rng.choice([(2, 1), (3, 1), (2, 2), (3, 2)])
        ctx = RingContext(p, n)
        rank = rng.choice([1, 2])
        shifts = tuple(rng.randrange(3) for _ in range(rank))
        gens = [PositionedMonomial(random_monomial(rng, ctx, 5), rng.randrange(rank)) for _ in range(rng.randint(1, 4))]
        for s in generating_syzygies(gens, shifts):
            assert s.evaluate(gens) == {}
            degs = {cof.degree + gens[i].mono.degree + shifts[gens[i].pos] for _, cof, i in s.terms}
            assert degs == {s.schreyer_degree}
            if s.is_annihilator:
                (_, cof, i), = s.terms
                assert mul_trunc(cof, gens[i].mono) is None
                assert s.schreyer_monomial is None


def test_completeness_against_brute_force():
    rng = random.Random(22)
    checked = 0
    for _ in range(35):
        p, n = rng.choice([(2, 1), (3, 1), (2, 2), (3, 2)])
        ctx = RingContext(p, n)
        rank = rng.choice([1, 1, 2])
        shifts = (0,) * rank
        gens = [PositionedMonomial(random_monomial(rng, ctx, 4), rng.randrange(rank)) for _ in range(rng.randint(1, 3))]
        degs = tuple(g.mono.degree for g in gens)
        mod = FreeModule(ctx, Semantics.TRUNCATING, len(gens), degs)
        span = SpanOracle([syzygy_to_vector(s, mod) for s in generating_syzygies(gens, shifts)], 8, mod)
        for b in brute_syzygies(gens, 8, shifts):
            assert span.contains(b), (p, n, [str(g) for g in gens], str(b))
            checked += 1
    assert checked > 1000
