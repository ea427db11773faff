"""
Products and signs in a finite Grassmann algebra
================================================

Supernumbers are sparse maps from basis blades to scalars.  Multiplying two
blades concatenates their generator lists and sorts them; every swap of two
generators flips the sign, and a repeated generator kills the product.
"""

# %%
# Generators anticommute and square to zero.
from supersmooth import Supernumber, sigma

L = 4
s1, s2, s3 = sigma(1, L), sigma(2, L), sigma(3, L)
print("s2*s1 =", s2 * s1)
print("s1*s1 =", s1 * s1)

# %%
# A general element splits into a real body and a nilpotent soul.  Even
# elements commute with everything; odd ones anticommute with each other.
x = 2 + s1 * s2 + 3 * s3 * sigma(4, L)
theta = s1 + 5 * s3
print("body:", x.body, " soul:", x.soul)
print("x*theta == theta*x:", x * theta == theta * x)
print("theta*theta:", theta * theta)

# %%
# The soul of an even element is nilpotent, so a function of ``x`` is a finite
# Taylor sum around the body.  Here ``(x - 2)^3`` vanishes at four generators.
print("(x-2)^2 =", (x - 2) ** 2)
print("(x-2)^3 =", (x - 2) ** 3)

# %%
# A degree cutoff ``D`` works in the quotient by all blades above degree ``D``.
y = Supernumber({(1,): 1, (2, 3): 1}, 4, D=2)
print("cutoff product:", y * y, "| full product:", y.with_context(4, 4) * y.with_context(4, 4))
