"""
An integral that comes out in elementary terms
==============================================

The integral of 6x / sqrt(x^4+4x^3-6x^2+4x+1) is a logarithm.  We find the
unit behind it, check the identity exactly, and print it three ways.
"""

# %%
from pseudoelliptic import emit_identity, find_unit, integrand, parse_poly, verify_identity

D = parse_poly("x^4+4*x^3-6*x^2+4*x+1")
cert = find_unit(D)
print("a =", cert.a)
print("b =", cert.b)
print("a^2 - D b^2 =", cert.a * cert.a - D * cert.b * cert.b)

# %%
# f = a'/b is forced to have degree g and leading coefficient m.
ident = integrand(cert)
print("f =", ident.f, " m =", cert.m)
print("identity holds:", verify_identity(ident))

# %%
print(emit_identity(ident, "text"))
print(emit_identity(ident, "latex"))
print(emit_identity(ident, "json"))

# %%
# A quadratic is always exceptional: (x+v) + sqrt(D) is a unit of norm v^2 - w.
g0 = integrand(find_unit(parse_poly("x^2+2*x")))
print(emit_identity(g0, "text"))
