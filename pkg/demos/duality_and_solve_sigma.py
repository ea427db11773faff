"""
Dividing by generators and representing odd maps
================================================

Given ``A_i`` for every generator, when is there an ``F`` with
``A_i = sigma_i F``?  The compatibility condition is
``sigma_j A_i + sigma_i A_j = 0``.  When it holds, ``F`` is determined except
for the top blade.
"""

# %%
from supersmooth import Supernumber, dual_represent, sigma, solve_sigma
from supersmooth.fixtures import coefficient_swap_map, right_multiplication

L = 3
F = 1 + sigma(2, L) + 4 * sigma(1, L) * sigma(3, L)
A = [sigma(i, L) * F for i in range(1, L + 1)]
sol = solve_sigma(A, L)
print("recovered:", sol.F, "|", sol.ambiguity)

# %%
# Break the condition and the solver names the first offending pair.
A[0] = A[0] + sigma(2, L)
bad = solve_sigma(A, L)
print("feasible:", bad.feasible, "pair:", bad.witness_pair)

# %%
# An even-linear map on odd elements that is a right multiplication is
# recovered from its values on generators.
u = 1 + sigma(1, 4) * sigma(2, 4)
print(dual_represent(right_multiplication(u), 4))

# %%
# With two generators, sending ``X1 s1 + X2 s2`` to ``X1 s2`` is even-linear
# but no multiplier exists: ``s1 f(s1) = s1 s2`` is not zero.
res = dual_represent(coefficient_swap_map(), 2)
print(res.status, res.witness)
print("zero map:", dual_represent(lambda X: Supernumber.zero(2), 2).status)
