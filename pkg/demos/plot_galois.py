"""
Galois groups of quartics
=========================

The resolvent cubic and the discriminant sort most quartics; the D4 / C4
split needs one more test, factoring over Q(sqrt(disc)).
"""

# %%
from pseudoelliptic import galois_quartic, parse_poly, resolvent_cubic
from pseudoelliptic.classify import exceptionality_screen, galois_quartic_witness

for text in ["x^4+x+1", "x^4+8*x+12", "x^4-10*x^2+1", "x^4+5*x^2+5", "x^4-2", "x^4-5/2*x^2-4*x-7/16"]:
    q = parse_poly(text)
    w = galois_quartic_witness(q)
    print(f"{text:<24} {w.label!s:<10} disc={w.discriminant}  resolvent={resolvent_cubic(q)}")

# %%
# A C4 witness is an explicit factorization over the quadratic field.
w = galois_quartic_witness(parse_poly("x^4+5*x^2+5"))
print(w.label, [str(f) for f in w.quadratic_split])

# %%
# Groups that do not fit inside D4 rule out a unit in genus 1.
for text in ["x^4+x+1", "x^4+8*x+12", "x^4+4*x^3-6*x^2+4*x+1"]:
    print(text, exceptionality_screen(parse_poly(text)))
print(galois_quartic(parse_poly("x^4+4*x^3-6*x^2+4*x+1")))
