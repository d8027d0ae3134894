"""
Large-n behaviour
=================

Compare exact counts with the uniform W-integral formula and with its
leading-order reduction. Values are kept in log scale since they overflow
doubles quickly.
"""

import math

from diophcount import CountParams
from diophcount.asympt import W_quadrature, W_saddle_leading, relative_error, s_asym_leading, s_asym_theorem
from diophcount.series import coeffs

p = CountParams(1, 1)
table = coeffs(p, 3000)
print(" n      W-form error   leading error")
for n in (10, 100, 1000, 3000):
    th = relative_error(s_asym_theorem(p, n), table[n])
    ld = relative_error(s_asym_leading(p, n), table[n])
    print(f"{n:5d}  {th:13.3e}  {ld:13.3e}")

# for r = v = 1 the leading form is e^(pi sqrt n) / (8n)
n = 3000
print(table[n] * 8 * n / math.exp(math.pi * math.sqrt(n)))

# the W integral approaches its saddle-point form as lambda grows
for lam in (10, 100, 1000):
    print(lam, math.exp(W_quadrature(1, 0.5, lam) - W_saddle_leading(1, 0.5, lam)))
