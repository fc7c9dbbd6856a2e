import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pseudoelliptic.cfrac import cf_detect, cf_init, convergent
from pseudoelliptic.exactnum import Poly, X, parse_poly, poly_gcd
from pseudoelliptic.families import family_poly
from pseudoelliptic.units import (
    IntegralIdentity,
    InvalidCertificate,
    UnitCert,
    closed_form_unit,
    emit_identity,
    find_unit,
    integrand,
    torsion_order,
    verify_identity,
)

D1 = parse_poly("x^4+4*x^3-6*x^2+4*x+1")
A1 = parse_poly("x^6+12*x^5+45*x^4+44*x^3-33*x^2+43")
B1 = parse_poly("x^4+10*x^3+30*x^2+22*x-11")


def test_worked_unit():
    cert = find_unit(D1)
    assert (cert.a, cert.b, cert.m, cert.k) == (A1, B1, 6, 1728)
    # the norm at two points, computed without polynomial arithmetic
    for x0 in (0, 2):
        assert A1(x0) ** 2 - D1(x0) * B1(x0) ** 2 == 1728
    assert torsion_order(cert) == 6
    assert integrand(cert).f == 6 * X


def test_closed_form():
    v, w = Fraction(2), Fraction(3)
    D = X * X + 2 * v * X + w
    cert = find_unit(D)
    assert (cert.a, cert.b, cert.k, cert.m) == (X + v, Poly([1]), v * v - w, 1)
    assert torsion_order(cert) == 1
    ident = integrand(cert)
    assert ident.f == Poly([1])
    assert verify_identity(ident)
    assert 2 * (X + v) == D.derivative()
    with pytest.raises(ValueError):
        closed_form_unit(D1)


def test_no_unit_for_generic_quartic():
    assert find_unit(parse_poly("x^4+x+1")) is None


def test_family_four():
    cert = find_unit(family_poly(4, 2).D)
    assert torsion_order(cert) == 4 and cert.r == 3
    f = integrand(cert).f
    assert f.deg == 1 and f.lc == 4


def test_tampered_identity_fails():
    ident = integrand(find_unit(D1))
    coeffs = list(ident.b.coeffs)
    coeffs[1] += 1
    bad = IntegralIdentity(ident.D, ident.f, ident.a, Poly(coeffs))
    assert verify_identity(ident) and not verify_identity(bad)
    with pytest.raises(InvalidCertificate):
        emit_identity(bad)


def test_emit_formats():
    ident = integrand(find_unit(D1))
    tex = emit_identity(ident, "latex")
    assert r"\log" in tex and "x^{6}+12x^{5}" in tex and "x^{4}+10x^{3}" in tex
    doc = emit_identity(ident, "latex", standalone=True)
    assert doc.startswith("\\documentclass") and doc.rstrip().endswith("\\end{document}")
    g0 = integrand(find_unit(X * X + 2 * X))
    assert emit_identity(g0, "text") == "∫ 1/√(x^2+2*x) dx = log(x+1+√(x^2+2*x))"
    back = IntegralIdentity.from_dict(json.loads(emit_identity(ident, "json")))
    assert back == ident
    with pytest.raises(ValueError):
        emit_identity(ident, "html")


def test_cert_json_roundtrip():
    for D in (D1, X * X + 2 * X, family_poly(8, 2).D, family_poly(3, (1, 1)).D):
        cert = find_unit(D)
        assert UnitCert.from_json(cert.to_json()) == cert


def test_cert_check_rejects_bad_data():
    cert = find_unit(D1)
    with pytest.raises(InvalidCertificate):
        UnitCert(cert.D, cert.g, cert.a, cert.b, cert.k + 1, cert.m, cert.r, cert.kappa).check()
    with pytest.raises(InvalidCertificate):
        UnitCert(cert.D, cert.g, cert.a.scale(2), cert.b, cert.k, cert.m, cert.r, cert.kappa).check()


FAMILY_CASES = [(m, t) for m in (4, 5, 6, 7, 8, 9, 10, 12) for t in (2, 3)] + [(2, (1, 1)), (3, (2, 1))]


@pytest.mark.parametrize("m,t", FAMILY_CASES)
def test_family_certificates(m, t):
    inst = family_poly(m, t)
    cert = find_unit(inst.D)
    assert cert.a * cert.a - cert.D * cert.b * cert.b == Poly([cert.k])
    assert cert.b.deg == cert.m - cert.g - 1
    assert poly_gcd(cert.a, cert.b) == Poly([1])
    assert verify_identity(integrand(cert))
    assert torsion_order(cert) == m and cert.r == m - 1


@given(st.fractions(min_value=-50, max_value=50, max_denominator=20).filter(bool))
def test_scaling_the_convergent_changes_nothing(lam):
    e = cf_init(D1)
    cf_detect(e)
    p, q = convergent(e, e.status.r - 1)
    sp, sq = p.scale(lam), q.scale(lam)
    assert (sp.monic(), sq.monic()) == (A1, B1)
    assert sp * sp - D1 * sq * sq == (p * p - D1 * q * q).scale(lam * lam)
