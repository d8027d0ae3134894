"""
The generating function near q = 1
==================================

log G(e^-z) against its small-z approximation, and recovery of single
coefficients from a contour integral at the saddle radius.
"""

from diophcount import CountParams
from diophcount.gfeval import asym_residual_scan, cauchy_coefficient, log_G, log_G_asym
from diophcount.series import coeffs

p = CountParams(2, 1)
for z in (0.5, 0.1, 0.02, 0.1 + 0.05j):
    print(z, log_G(p, z).log, log_G_asym(p, z).log)

# the residual vanishes faster than any power of x; the scan escalates
# working precision until the residual is resolved
rep = asym_residual_scan(CountParams(1, 1), [0.5, 0.25, 0.125, 0.0625, 0.03125])
print(rep.status, rep.slope, rep.extra["dps"])

# Cauchy extraction reproduces exact coefficients
exact = coeffs(p, 50)
for n in (5, 20, 50):
    print(n, exact[n], cauchy_coefficient(p, n))
