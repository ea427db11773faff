"""
Grassmann continuation and the Taylor formula
=============================================

A smooth function of real variables extends to even supernumbers by
expanding around the body.  Because the soul is nilpotent the expansion is a
finite sum, so for polynomials it is exact.
"""

# %%
from fractions import Fraction

from supersmooth import AnalyticPrimitive, PolyMap, Superfield, grassmann_continue, sigma
from supersmooth.superfield import taylor_superfield
from supersmooth.superspace import SuperPoint

L = 4
x = 2 + sigma(1, L) * sigma(2, L)
cube = PolyMap({(3,): 1}, 1)
print("q^3 continued at 2 + s1 s2:", grassmann_continue(cube, [x]))

# %%
# Transcendental maps continue the same way; ``exp`` of a pure soul is
# ``1 + soul`` when the soul squares to zero.
exp = AnalyticPrimitive("exp", [1])
print("exp(s1 s2) =", grassmann_continue(exp, [sigma(1, L) * sigma(2, L)]))

# %%
# A superfield is a polynomial in odd variables whose coefficients are
# continued functions.  Its Taylor sum of order N is exact once N reaches the
# total degree; one order short, the defect is the top-degree part at Y.
u = Superfield({(0,): PolyMap({(2,): 1}, 1), (1,): PolyMap.var(1, 1)}, 1, 1)
X = SuperPoint([x], [sigma(3, L)], L, L)
Y = SuperPoint([Fraction(1, 2) + sigma(2, L) * sigma(4, L)], [sigma(4, L)], L, L)
for N in range(4):
    res = taylor_superfield(u, X, Y, N)
    print(f"order {N}: exact={res.exact}  defect={res.defect}")
