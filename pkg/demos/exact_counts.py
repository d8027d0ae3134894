"""
Exact solution counts
=====================

s_{r,v}(n) counts integer vectors (k_1, k_2, ...) with
n = 1^r |k_1|^v + 2^r |k_2|^v + ...  Three routes compute it and agree.
"""

from diophcount import CountParams, count_bruteforce, enumerate_solutions
from diophcount.series import coeffs, coeffs_direct, coeffs_prop1_v1

# the solutions of 3 = sum j |k_j| for r = v = 1, listed explicitly
p = CountParams(1, 1)
for sol in enumerate_solutions(p, 3):
    print(sol.as_dict())

# brute force and the power series agree; this row is the overpartition sequence
print([count_bruteforce(p, n) for n in range(11)])
print(coeffs(p, 10).coeffs)

# the closed product for v = 1 is much faster than the general product
fast = coeffs_prop1_v1(2, 2000)
slow = coeffs_direct(CountParams(2, 1), 2000)
print(fast.coeffs == slow.coeffs, fast[2000])

# tables export as CSV with exact decimal strings
print(coeffs(CountParams(2, 3), 6).to_csv())
