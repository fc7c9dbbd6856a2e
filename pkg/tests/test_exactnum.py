from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from strategies import int_polys, polys, small_rats
from pseudoelliptic.exactnum import (
    Poly,
    X,
    discriminant,
    factor_over_Q,
    format_poly,
    is_rational_square,
    is_squarefree,
    parse_poly,
    poly_divrem,
    poly_gcd,
    poly_xgcd,
    polypart_sqrt,
    rational_roots,
    rational_sqrt,
    resultant,
    squarefree_decomposition,
    squarefree_part,
)

D1 = parse_poly("x^4+4*x^3-6*x^2+4*x+1")
xs = sympy.Symbol("x")


def to_sympy(p: Poly):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], xs)


# -- examples ---------------------------------------------------------------


def test_divrem_examples():
    q, r = poly_divrem(parse_poly("2*x^2+4*x-10"), parse_poly("24*x-24"))
    assert q == parse_poly("1/12*x+1/4") and r == Poly([-4])
    p = parse_poly("3*x^3-x+2/7")
    assert poly_divrem(p, Poly([1])) == (p, Poly())
    assert poly_divrem(X * X - 1, X - 1) == (X + 1, Poly())
    with pytest.raises(ZeroDivisionError):
        poly_divrem(p, Poly())


def test_gcd_examples():
    assert poly_gcd(X * X - 1, X * X - 2 * X + 1) == X - 1
    assert poly_gcd(D1, D1.derivative()) == Poly([1])
    p = parse_poly("3*x^2+6")
    assert poly_gcd(p, Poly()) == p.monic()


def test_squarefree_examples():
    assert is_squarefree(D1)
    assert not is_squarefree((X - 1) ** 2)
    assert is_squarefree(X * X + 2 * X)


def test_polypart_sqrt_examples():
    assert polypart_sqrt(D1) == (parse_poly("x^2+2*x-5"), parse_poly("24*x-24"))
    assert polypart_sqrt(X * X) == (X, Poly())
    v, w = Fraction(3, 2), Fraction(-7)
    A, R = polypart_sqrt(X * X + 2 * v * X + w)
    assert A == X + v and R == Poly([w - v * v])


def test_factor_examples():
    f = factor_over_Q(X * X - 1)
    assert f.factors == ((X - 1, 1), (X + 1, 1))
    f = factor_over_Q(parse_poly("x^4-5/2*x^2-4*x-7/16"))
    assert set(f.factors) == {(parse_poly("x^2+2*x+7/4"), 1), (parse_poly("x^2-2*x-1/4"), 1)}
    D3 = (X * X - 1) ** 2 + 4 * (X + 1)
    assert (X + 1, 1) in factor_over_Q(D3).factors
    assert (parse_poly("x^3-x^2-x+5"), 1) in factor_over_Q(D3).factors


def test_discriminant_examples():
    p, q = Fraction(3, 5), Fraction(-2)
    assert discriminant(X * X + p * X + q) == p * p - 4 * q
    assert discriminant(parse_poly("x^4+x+1")) == 229
    assert discriminant(parse_poly("x^3-x^2-x+15/7")) == Fraction(-3520, 49)


def test_parse_and_format():
    for text in ["x^4+4*x^3-6*x^2+4*x+1", "1/12*x+1/4", "-x", "0", "-1/3*x^2+x-7"]:
        assert format_poly(parse_poly(text)) == text
    assert parse_poly(" x^2 - 2 x + 1 ") == (X - 1) ** 2
    for bad in ["x^", "x^4+x^^", "y+1", "x^-1", ""]:
        with pytest.raises(ValueError):
            parse_poly(bad)


def test_rational_helpers():
    assert is_rational_square(Fraction(9, 4)) and not is_rational_square(Fraction(-4))
    assert rational_sqrt(Fraction(49, 16)) == Fraction(7, 4)
    assert rational_sqrt(Fraction(2)) is None
    assert squarefree_part(Fraction(1728)) == 3
    assert squarefree_part(Fraction(-8, 9)) == -2


def test_rational_roots():
    p = (X - Fraction(7, 2)) * (X + 3) * (X * X + 1)
    assert rational_roots(p) == [-3, Fraction(7, 2)]
    assert rational_roots(parse_poly("x^3-4*x-1")) == []


def test_resultant_common_root():
    assert resultant(X * X - 1, X - 1) == 0
    assert resultant(X - 2, X - 5) == -3


# -- properties -------------------------------------------------------------


@given(polys(), polys(), polys())
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p - p == Poly()


@given(polys(), polys(nonzero=True))
def test_divrem_reconstructs(n, d):
    q, r = poly_divrem(n, d)
    assert q * d + r == n
    assert not r or r.deg < d.deg


@given(polys(max_deg=4), polys(max_deg=4), polys(max_deg=3, nonzero=True))
def test_gcd_divides_and_is_greatest(p, q, common):
    P, Q = p * common, q * common
    assume(P or Q)
    g = poly_gcd(P, Q)
    assert not (P % g) and not (Q % g)
    assert not (g % common.monic())
    g2, s, t = poly_xgcd(P, Q)
    assert s * P + t * Q == g2 and g2 == g


@given(int_polys(min_deg=2, max_deg=6))
def test_polypart_sqrt_invariant(D):
    if D.deg % 2:
        D = D * X
    D = D.monic()
    A, R = polypart_sqrt(D)
    assert A * A + R == D
    assert not R or R.deg <= D.deg // 2 - 1


@given(int_polys(min_deg=2, max_deg=5))
def test_discriminant_zero_iff_not_squarefree(p):
    assert (discriminant(p) == 0) == (not is_squarefree(p))


@given(int_polys(min_deg=1, max_deg=3), int_polys(min_deg=1, max_deg=3))
def test_product_has_zero_discriminant_only_with_common_factor(p, q):
    shared = poly_gcd(p, q).deg > 0
    assert (resultant(p, q) == 0) == shared


@given(st.lists(int_polys(min_deg=1, max_deg=3, bound=6), min_size=1, max_size=4), small_rats.filter(bool))
def test_factorization_reexpands_and_matches_sympy(parts, unit):
    p = Poly([unit])
    for f in parts:
        p = p * f
    fac = factor_over_Q(p)
    assert fac.expand() == p
    assert all(f.is_monic() for f, _ in fac.factors)
    _, ref = sympy.factor_list(to_sympy(p).as_expr(), xs)
    ref_shape = sorted((sympy.degree(f, xs), e) for f, e in ref if sympy.degree(f, xs) > 0)
    assert sorted((f.deg, e) for f, e in fac.factors) == ref_shape


@given(int_polys(min_deg=1, max_deg=4), int_polys(min_deg=1, max_deg=3))
def test_squarefree_decomposition(p, q):
    f = p * q * q
    parts = squarefree_decomposition(f)
    prod = Poly([f.lc])
    for g, e in parts:
        assert is_squarefree(g)
        prod = prod * g ** e
    assert prod == f


def test_factor_harder_cases():
    # Swinnerton-Dyer style: irreducible but splits modulo every prime
    sd = parse_poly("x^4-10*x^2+1")
    assert factor_over_Q(sd).is_irreducible()
    cyclo = X ** 12 - 1
    assert factor_over_Q(cyclo).count() == 6
    big = (X ** 5 + 3 * X + 1) * (X ** 4 - 17 * X ** 2 + 1) * (X ** 3 - 2)
    assert factor_over_Q(big).degrees() == [3, 4, 5]
