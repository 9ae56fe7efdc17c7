from __future__ import annotations

import random

import pytest

from frobmod.monomial import RingContext, monomials_of_degree
from frobmod.operator import OperatorPoly, Semantics
from frobmod.session import parse_poly

A = Semantics.TRUNCATING
F = Semantics.CARRYING

_MONO_CACHE: dict = {}


def monos(ctx: RingContext, d: int) -> list:
    key = (ctx, d)
    if key not in _MONO_CACHE:
        _MONO_CACHE[key] = list(monomials_of_degree(ctx, d))
    return _MONO_CACHE[key]


def random_monomial(rng: random.Random, ctx: RingContext, max_degree: int):
    return rng.choice(monos(ctx, rng.randint(0, max_degree)))


def poly(text: str, ctx: RingContext, sem=A) -> OperatorPoly:
    return parse_poly(text, ctx, sem)


def vec(text: str, ctx: RingContext, sem=A):
    return poly(text, ctx, sem).as_vector()


def random_homogeneous(rng: random.Random, ctx: RingContext, max_degree: int = 4, max_terms: int = 3):
    d = rng.randint(1, max_degree)
    pool = monos(ctx, d)
    chosen = rng.sample(pool, min(len(pool), rng.randint(1, max_terms)))
    return OperatorPoly([(m, rng.randrange(1, ctx.p)) for m in chosen], A, ctx)


@pytest.fixture
def r21():
    return RingContext(2, 1)


@pytest.fixture
def r22():
    return RingContext(2, 2)


# -- acceptance reporting -------------------------------------------------------

ACCEPTANCE: dict = {}


class criterion:
    """Context manager recording PASS/FAIL for one numbered acceptance criterion."""

    def __init__(self, number: int, title: str):
        self.number, self.title = number, title

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        ACCEPTANCE[self.number] = (self.title, exc_type is None, "" if exc is None else str(exc).splitlines()[0][:160])
        line = ACCEPTANCE[self.number]
        print(f"criterion {self.number:>2}: {'PASS' if line[1] else 'FAIL'}  {self.title}")
        return False


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, why = ACCEPTANCE[number]
        tail = f"  ({why})" if why and not ok else ""
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}{tail}")
