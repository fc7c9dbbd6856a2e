import random
from fractions import Fraction

import pytest
import sympy
from sympy.polys.numberfields.galoisgroups import galois_group

from pseudoelliptic.classify import (
    GaloisLabel,
    classify,
    exceptionality_screen,
    galois_quartic,
    galois_quartic_witness,
    resolvent_cubic,
    norm_split_report,
    period_report,
)
from pseudoelliptic.exactnum import Poly, X, factor_over_Q, is_squarefree, parse_poly, rational_roots
from pseudoelliptic.families import FAMILY_ORDERS, family_poly
from pseudoelliptic.quadext import QPoly
from pseudoelliptic.units import find_unit, find_unit_with_expansion
from pseudoelliptic.verify import oracle_label, random_irreducible_quartics

D1 = parse_poly("x^4+4*x^3-6*x^2+4*x+1")
xs = sympy.Symbol("x")
SYMPY_NAMES = {"S4": "S4", "A4": "A4", "D4": "D4", "C4": "C4", "V": "V4"}


def sympy_label(q: Poly) -> str:
    sp = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(q.coeffs)], xs)
    group, _ = galois_group(sp, by_name=True)
    return SYMPY_NAMES[group.name]


def test_resolvent_examples():
    p, q, r = Fraction(3), Fraction(-2, 5), Fraction(7)
    z = X
    C = resolvent_cubic(Poly([r, q, p, 0, 1]))
    assert C == z ** 3 - p * z * z - 4 * r * z + (4 * p * r - q * q)
    assert resolvent_cubic(parse_poly("x^4+x+1")) == parse_poly("x^3-4*x-1")
    assert rational_roots(resolvent_cubic(family_poly(10, 2).D)) == [Fraction(7, 2)]
    with pytest.raises(ValueError):
        resolvent_cubic(X ** 3)


def test_galois_examples():
    assert galois_quartic(parse_poly("x^4+x+1")) is GaloisLabel.S4
    assert galois_quartic(family_poly(4, Fraction(1, 2)).D) is GaloisLabel.V4
    assert galois_quartic(family_poly(4, Fraction(-1, 32)).D) is GaloisLabel.C4
    assert galois_quartic(family_poly(12, 2).D) is GaloisLabel.D4
    assert galois_quartic(parse_poly("x^4+8*x+12")) is GaloisLabel.A4
    assert galois_quartic(parse_poly("x^4-5/2*x^2-4*x-7/16")) is GaloisLabel.REDUCIBLE


def test_witnesses_are_checkable():
    w = galois_quartic_witness(family_poly(4, Fraction(-1, 32)).D)
    f1, f2 = w.quadratic_split
    assert f1 * f2 == QPoly.from_poly(f1.ctx, family_poly(4, Fraction(-1, 32)).D)
    w = galois_quartic_witness(family_poly(12, 2).D)
    (disc,) = w.obstruction
    assert disc is not None


@pytest.mark.parametrize("q", random_irreducible_quartics(60, seed=11), ids=str)
def test_agrees_with_sympy_and_norm_oracle(q):
    label = galois_quartic(q)
    assert label is oracle_label(q)
    assert label.value == sympy_label(q)


@pytest.mark.parametrize("t", [3, -2, Fraction(1, 7)])
def test_m8_viergruppe_agrees_with_sympy(t):
    D = family_poly(8, t).D
    assert galois_quartic(D) is GaloisLabel.V4 and sympy_label(D) == "V4"


def test_random_s4_agree_with_sympy():
    rng = random.Random(5)
    for _ in range(30):
        q = Poly([rng.randint(-20, 20) for _ in range(4)] + [1])
        if not is_squarefree(q) or not factor_over_Q(q).is_irreducible():
            continue
        assert galois_quartic(q).value == sympy_label(q)


def test_norm_split_worked_example():
    rep = norm_split_report(D1, find_unit(D1))
    assert rep.ok and not rep.k_square and rep.s == 2
    f1, f2 = rep.factors_Qc
    assert f1.deg == f2.deg == 2 and (f1 * f2).to_poly() == D1


def test_norm_split_odd_m():
    D = family_poly(5, 2).D
    rep = norm_split_report(D, find_unit(D))
    assert rep.ok and rep.k_square
    assert not rep.factors_Q.is_irreducible()
    assert 1 in rep.factors_Q.degrees()


def test_norm_split_genus_zero():
    D = X * X + 4 * X + 3
    rep = norm_split_report(D, find_unit(D))
    assert rep.ok and rep.k_square
    assert rep.factors_Q.factors == ((X + 1, 1), (X + 3, 1))


def test_norm_split_rejects_foreign_cert():
    with pytest.raises(ValueError):
        norm_split_report(X * X + 2 * X, find_unit(D1))


def test_period_report_examples():
    cert, e = find_unit_with_expansion(D1)
    rep = period_report(cert, e)
    assert rep.ok and rep.witnesses["r"] == 5 and rep.witnesses["kappa"] == -108
    assert "a_even_r_norm_one" not in rep.checks
    cert, e = find_unit_with_expansion(family_poly(4, 2).D)
    rep = period_report(cert, e)
    assert rep.ok and rep.witnesses["r"] == 3


@pytest.mark.parametrize("m", [3, 5, 7, 9])
def test_even_quasi_period(m):
    t = (1, 1) if m == 3 else 2
    cert, e = find_unit_with_expansion(family_poly(m, t).D)
    rep = period_report(cert, e)
    assert cert.r % 2 == 0
    assert rep.checks["a_even_r_norm_one"] and rep.witnesses["convergent_norm"] == Poly([1])
    assert rep.checks["midpoint_factor_of_D"]
    factor = rep.witnesses["midpoint_factor"]
    assert 1 <= factor.deg < cert.D.deg and not (cert.D % factor)


@pytest.mark.parametrize("m", FAMILY_ORDERS)
def test_structural_checks_on_families(m):
    t = {2: (1, 1), 3: (2, 1)}.get(m, 3)
    rep = classify(family_poly(m, t).D)
    assert rep.ok, rep.checks


def test_screen():
    assert exceptionality_screen(parse_poly("x^4+x+1")).verdict == "not_exceptional"
    assert exceptionality_screen(family_poly(12, 2).D).verdict == "undecided"
    assert exceptionality_screen(parse_poly("x^4-5/2*x^2-4*x-7/16")).verdict == "undecided"


def test_classify_json():
    rep = classify(D1)
    d = rep.to_dict()
    import json

    assert json.loads(rep.to_json()) == json.loads(json.dumps(d, sort_keys=True))
    assert d["galois"] == "D4" and d["cert"]["k"] == "1728"
