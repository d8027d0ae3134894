"""
Minor-arc evidence
==================

Weyl sums S(y) = sum_{L < n <= 2L} e(n^r y) stay a fixed fraction below L
away from y = 0, and |G| on the circle |q| = e^-x is dominated by its value
at q = e^-x.
"""

from fractions import Fraction

from diophcount import CountParams
from diophcount.expsum import ratio_lowerbound_scan, weyl_bound_scan, weyl_sum

# exact rational arguments are supported
print(abs(weyl_sum(2, Fraction(1, 4), 1000)) / 1000)

for r in (2, 3):
    rep = weyl_bound_scan(r, 1000)
    print(r, rep.status, rep.extra["empirical_delta"], rep.extra["argmax_y"])

rep = ratio_lowerbound_scan(CountParams(2, 2), [0.2, 0.1, 0.05, 0.02])
print(rep.status, rep.statistic)
print(rep.to_json())
