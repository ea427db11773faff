"""
Second-order convergence of the finite-difference route
=======================================================

Black-box maps without a declared degree are differentiated by central
differences.  The CR residual of a cubic then shrinks like ``h^2``.
"""

# %%
from fractions import Fraction

import numpy as np

from supersmooth import PolyMap, Superfield, cr_check, sigma
from supersmooth.superfield import BlackBox
from supersmooth.superspace import SuperPoint

u = Superfield({(0,): PolyMap({(3,): 1}, 1), (1,): PolyMap({(2,): 1}, 1)}, 1, 1)
box = BlackBox(u.eval, 1, 1, name="cubic")
X = SuperPoint([Fraction(3, 2) + sigma(1, 4) * sigma(2, 4)], [sigma(3, 4)], 4, 4).to_float()

steps = np.geomspace(1e-1, 1e-3, 5)
res = np.array([float(cr_check(box, X, fd_step=h, richardson=False).residual) for h in steps])
for h, r in zip(steps, res):
    print(f"h={h:.1e}  residual={r:.3e}")

# %%
# The slope of log(residual) against log(h) is the observed order.
slope = np.polyfit(np.log(steps), np.log(res), 1)[0]
print(f"observed order: {slope:.2f}")
