"""
Counting Frobenius monomials
============================

How many monomials of complexity d are there in F_p[x_1..x_n]<F>?
"""

from frobmod import HilbertRational, IntPolynomial, RingContext, g_polynomial, verify_recurrence
from frobmod.hilbert import count_ring_monomials
from frobmod.oracle import from_closed, monomials_of_complexity

# one variable over F_2: count by the block-form counter
ctx = RingContext(2, 1)
counts = [count_ring_monomials(ctx, d) for d in range(12)]
print("p=2 n=1 counts:", counts)

# the same numbers from the rational function 1/((1-t) g(t))
hs = HilbertRational.of_ring(ctx)
print("closed form:   ", hs)
print("expansion:     ", hs.expand(12))

# and from brute force: enumerate shortest words, kept as pairs (a, e) for x^a F^e
layer = monomials_of_complexity(ctx, 4)
print(len(layer), "words of complexity 4:", sorted(str(from_closed(c, ctx)) for c in layer))

# the denominator gives a linear recurrence on the counts
denom = g_polynomial(ctx) * IntPolynomial.one_minus_t()
print("recurrence holds:", verify_recurrence(counts, denom, 1))

# a small table for other primes and more variables
for p, n in [(3, 1), (5, 1), (2, 2), (3, 2), (2, 3)]:
    ctx = RingContext(p, n)
    print(f"p={p} n={n}:", HilbertRational.of_ring(ctx).expand(8))
