"""
Coefficient growth along the expansion
======================================

Without a unit the coefficients of Q_h blow up; with one they cycle.
The script prints both series and writes the CSV the CLI produces.
"""

# %%
import sys

from pseudoelliptic import parse_poly
from pseudoelliptic.cfrac import heights_csv, measure_heights

generic = measure_heights(parse_poly("x^4+x+1"), 15)
periodic = measure_heights(parse_poly("x^4+4*x^3-6*x^2+4*x+1"), 15)
for (h, a), (_, b) in zip(generic, periodic):
    print(f"{h:>2}  {a:>5}  {b:>3}  " + "#" * min(a, 60))

# %%
sys.stdout.write(heights_csv(generic))
