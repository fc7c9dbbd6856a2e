"""
Torsion families and their exceptions
=====================================

D_m(x; t) has a unit of degree m for every regular t.  For even m the
Galois group is usually D4; some parametrized t give V4 or C4, or make D
split over Q.
"""

# %%
from fractions import Fraction

from pseudoelliptic import factor_over_Q, family_poly, find_unit, galois_quartic
from pseudoelliptic.families import (
    galois_exception_cell,
    m8_viergruppe_t,
    odd_linear_factor,
    predicted_factor_count,
)

for m in (4, 5, 6, 7, 8, 9, 10, 12):
    inst = family_poly(m, 2)
    cert = find_unit(inst.D)
    print(f"m={m:>2}  torsion={cert.m:>2}  k={cert.k}  group={galois_quartic(inst.D)}")

# %%
# Galois exceptions for m = 4.  s = 1 lands on t = 0, where D is not squarefree.
for s in (1, 2, 3):
    for column in ("V4", "C4"):
        t, label = galois_exception_cell(4, s, column)
        inst = family_poly(4, t)
        got = galois_quartic(inst.D) if inst.regular else "irregular"
        print(f"s={s} {column}: t={t}  listed {label}, computed {got}")

# %%
# m = 8 also has V4 instances: whenever 8t^2 - 8t + 1 is a square.
for s in (1, 2, 3):
    t = m8_viergruppe_t(s)
    print(f"t={t}: {galois_quartic(family_poly(8, t).D)}")

# %%
# Factor counts, and a t that sits in two parametrized cells at once.
for t in (-1, -4, Fraction(-9, 16)):
    f = factor_over_Q(family_poly(4, t).D)
    print(f"t={t}: predicted {predicted_factor_count(4, t)}, got {f.count()}: {f}")

# %%
# Odd m: D has a linear factor, with its sign fixed by exact division.
for m in (5, 7, 9):
    print(m, odd_linear_factor(m, 3))
