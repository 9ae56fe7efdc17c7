"""Gröbner bases and Hilbert series for modules over Frobenius operators.

The ring ``F = F_p[x_1..x_n]<F>/(x_i^p F - F x_i)`` of Frobenius operators
carries the filtration by word length; its associated graded ring is
``A = F_p[x]{f}/(x_i^p f)``.  This package computes Gröbner bases over both,
initial modules, exact Hilbert series, Bernstein dimension and
multiplicity, and decides F-holonomicity of finitely presented modules.
"""

from .errors import ContextMismatch, InvariantError, ParseError
from .fmodule import (
    AnalysisReport,
    FPresentation,
    Verdict,
    analyze,
    check_unit_identity,
    local_cohomology_presentation,
    localization_presentation,
    ring_presentation,
    standard_filtration_gr,
    structure_cokernel_hs,
    structure_kernel_hs,
)
from .groebner import (
    GroebnerBasis,
    InitialModule,
    Status,
    buchberger,
    initial_module,
    interreduce,
    normal_form,
)
from .hilbert import (
    HilbertRational,
    IntPolynomial,
    count_standard_monomials,
    delta,
    expand,
    g_polynomial,
    hs_commutative,
    hs_monomial_quotient,
    multiplicity,
    verify_recurrence,
)
from .monomial import (
    FrobMonomial,
    PositionedMonomial,
    RingContext,
    compare,
    from_closed_form,
    left_divide,
    mul_carry,
    mul_trunc,
    parse_word,
    render,
    robustness,
)
from .operator import FreeModule, ModuleVector, OperatorPoly, Semantics, bernstein_symbol
from .session import parse_poly, parse_session
from .syzygy import MonomialSyzygy, generating_syzygies, pair_syzygies

__version__ = "0.1.0"

__all__ = [
    "ContextMismatch",
    "InvariantError",
    "ParseError",
    "AnalysisReport",
    "FPresentation",
    "Verdict",
    "analyze",
    "check_unit_identity",
    "local_cohomology_presentation",
    "localization_presentation",
    "ring_presentation",
    "standard_filtration_gr",
    "structure_cokernel_hs",
    "structure_kernel_hs",
    "GroebnerBasis",
    "InitialModule",
    "Status",
    "buchberger",
    "initial_module",
    "interreduce",
    "normal_form",
    "HilbertRational",
    "IntPolynomial",
    "count_standard_monomials",
    "delta",
    "expand",
    "g_polynomial",
    "hs_commutative",
    "hs_monomial_quotient",
    "multiplicity",
    "verify_recurrence",
    "FrobMonomial",
    "PositionedMonomial",
    "RingContext",
    "compare",
    "from_closed_form",
    "left_divide",
    "mul_carry",
    "mul_trunc",
    "parse_word",
    "render",
    "robustness",
    "FreeModule",
    "ModuleVector",
    "OperatorPoly",
    "Semantics",
    "bernstein_symbol",
    "parse_poly",
    "parse_session",
    "MonomialSyzygy",
    "generating_syzygies",
    "pair_syzygies",
]
