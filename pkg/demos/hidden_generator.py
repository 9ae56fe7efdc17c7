"""
A Gröbner basis needs more than the obvious multiples
=====================================================

Take g = xfxf + f + x in A = F_2[x]{f}/(x^2 f).  The left multiples x g
and x^2 g give leading monomials xf and x^3, and one might stop there.
But xfx * g kills the top term, so g - xfx * g = xfx^2 + f + x lies in
the ideal and its leading monomial xfx^2 is not a multiple of xfxf, xf
or x^3.
"""

from frobmod import RingContext, Semantics, buchberger, initial_module, parse_poly
from frobmod.oracle import brute_membership, graded_dim_quotient
from frobmod.hilbert import count_standard_monomials

ctx = RingContext(2, 1)
A = Semantics.TRUNCATING
g = parse_poly("xfxf + f + x", ctx, A)

# the product that does the damage
print("xfx * g =", parse_poly("xfx", ctx, A) * g)
witness = g - parse_poly("xfx", ctx, A) * g
print("g - xfx * g =", witness)

# brute-force linear algebra agrees that it is in the ideal ...
print("in A g:", brute_membership(witness.as_vector(), [g.as_vector()], 8))
# ... and that its leading monomial escapes the naive initial ideal
naive = [parse_poly(w, ctx, A).as_vector() for w in ("xfxf", "xf", "x^3")]
print("xfx^2 in A(xfxf, xf, x^3):", brute_membership(parse_poly("xfx^2", ctx, A).as_vector(), naive, 8))

# Buchberger finds it
gb = buchberger([g.as_vector()])
print("basis:", [str(e) for e in gb])
im = initial_module(gb)
print("initial ideal:", im.render())

# Hilbert function of A/Ag, two ways
print("counted:", [count_standard_monomials(im, d) for d in range(8)])
print("oracle: ", [graded_dim_quotient([g.as_vector()], d) for d in range(8)])
