"""
Cauchy-Riemann checks on superspace
===================================

A map of superpoints can be probed through its real coordinates: every
supernumber slot is a vector of blade coefficients.  Supersmooth maps tie the
derivatives along the soul coordinates to the body derivative.  Maps that see
only some of the coordinates break those relations, and the check pinpoints
where.
"""

# %%
from fractions import Fraction

from supersmooth import cr_check, equivalence_suite, sigma
from supersmooth.fixtures import NON_CR_FIXTURES, mixed_example
from supersmooth.sampling import make_rng, random_point
from supersmooth.superspace import SuperPoint

u = mixed_example()
pts = [random_point(make_rng(0), u.m, u.n, 4)]
print(equivalence_suite(u, pts).table())

# %%
# Three maps that are smooth in every real coordinate, yet not supersmooth.
L = 4
for name, make in sorted(NON_CR_FIXTURES.items()):
    F = make()
    X = SuperPoint([Fraction(3) + sigma(1, L) * sigma(2, L)], [sigma(3, L)] * F.n, L, L)
    res = cr_check(F, X)
    blades = sorted({f["I"] for f in res.witnesses["failures"]})
    print(f"{name:16s} {res.status}  residual={float(res.residual):.4g}  failing blades: {blades}")

# %%
# The same checks work in floating point, where black boxes are
# differentiated by central differences.
from supersmooth.superfield import BlackBox

box = BlackBox(u.eval, u.m, u.n, name="float")
print("float residual:", cr_check(box, pts[0].to_float()).residual)
