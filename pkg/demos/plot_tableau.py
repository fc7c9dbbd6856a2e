"""
Walking the continued fraction of sqrt(D)
=========================================

Each line holds (P_h, Q_h, a_h).  The first constant Q_r ends the
quasi-period; the full period is 2r and the partial quotients read back
in reverse up to scalars.
"""

# %%
from pseudoelliptic import cf_detect, cf_init, convergent, parse_poly, symmetry_report

D = parse_poly("x^4+4*x^3-6*x^2+4*x+1")
e = cf_init(D)
status = cf_detect(e)
for ln in e.lines:
    print(f"{ln.h:>2}  P={ln.P!s:<14} Q={ln.Q!s:<14} a={ln.a}")
print(status)

# %%
# The convergent just before the constant line is the unit (up to scaling).
p, q = convergent(e, status.r - 1)
print("norm of the raw convergent:", p * p - D * q * q)

# %%
# Continue to 2r and compare a_h with a_{2r-h}.
rep = symmetry_report(e)
print("Q_2r = 1 and P_2r = A:", rep.period_ok)
print("ratios a_{2r-h} / a_h:", [str(c) for c in rep.ratios])
