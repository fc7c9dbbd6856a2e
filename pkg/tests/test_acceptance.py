"""Acceptance gate: one test per criterion, checked independently of verify.py.

Every comparison is exact unless noted.  ``pytest -v`` prints a PASS/FAIL
line per criterion and the terminal summary repeats them in order.
"""

from fractions import Fraction

import sympy

from pseudoelliptic.cfrac import Bounds, QuasiPeriodic, cf_detect, cf_init, measure_heights
from pseudoelliptic.classify import GaloisLabel, galois_quartic, resolvent_cubic
from pseudoelliptic.exactnum import Poly, X, factor_over_Q, is_rational_square, parse_poly, rational_roots
from pseudoelliptic.families import (
    TYPO_LEDGER,
    d3_toolkit,
    expected_norm,
    family_poly,
    is_regular,
    odd_linear_factor,
    factor_count_cell,
    predicted_factor_count,
    Unresolved,
)
from pseudoelliptic.quadext import QPoly, split_unit_factor
from pseudoelliptic.units import find_unit, integrand, torsion_order
from pseudoelliptic.verify import (
    FAMILY_SAMPLES,
    exceptional_suite,
    oracle_label,
    random_irreducible_quartics,
    random_s4_quartics,
)

D1 = parse_poly("x^4+4*x^3-6*x^2+4*x+1")
PRINTED_B = parse_poly("x^4+10*x^3+30*x^2+22*x-11")


def horner(coeffs_low_first, x):
    acc = 0
    for c in reversed(coeffs_low_first):
        acc = acc * x + c
    return acc


def test_criterion_01_worked_integral():
    cert = find_unit(D1)
    a, b = cert.a, cert.b
    f = integrand(cert).f
    assert b == PRINTED_B
    assert f == 6 * X
    assert cert.m == 6
    assert a.derivative() == f * b
    assert a[1] == 0 and a[0] == 43
    assert a * a - D1 * b * b == Poly([1728])
    # oracle: plain integer evaluation at two points, no Poly arithmetic
    ai = [int(c) for c in a.coeffs]
    bi = [-11, 22, 30, 10, 1]
    Di = [1, 4, -6, 4, 1]
    for x0 in (0, 2):
        assert horner(ai, x0) ** 2 - horner(Di, x0) * horner(bi, x0) ** 2 == 1728


def test_criterion_02_tableau():
    e = cf_init(D1)
    st = cf_detect(e)
    assert e.line(1).Q == 24 * X - 24
    assert e.line(2).Q == Poly([0, Fraction(-1, 3)])
    assert e.line(5).Q == Poly([-108])
    assert isinstance(st, QuasiPeriodic) and st.r == 5
    assert torsion_order(find_unit(D1)) == st.r + 1


def _proportional(u, v):
    if not u or not v or u.deg != v.deg:
        return False
    return u.scale(v.lc / u.lc) == v


def test_criterion_03_berry_periodicity():
    for name, D in exceptional_suite():
        e = cf_init(D)
        st = cf_detect(e)
        r = st.r
        assert e.line(2 * r).Q == Poly([1]), name
        assert e.line(2 * r).P == e.A, name
        for h in range(1, 2 * r):
            assert _proportional(e.line(h).a, e.line(2 * r - h).a), (name, h)
        if st.kappa not in (1, -1):
            assert r % 2 == 1, name


def test_criterion_04_degree_bounds():
    cases = [D for _, D in exceptional_suite()] + random_s4_quartics(100)
    assert len(cases) >= 100
    for D in cases:
        g = D.deg // 2 - 1
        e = cf_init(D)
        st = cf_detect(e)
        n = 2 * st.r if isinstance(st, QuasiPeriodic) else len(e.lines) - 1
        for h in range(1, n + 1):
            ln = e.line(h)
            assert ln.P.deg == g + 1, (D, h)
            assert ln.Q.deg <= g, (D, h)


def test_criterion_05a_torsion_families():
    for m in (2, 3, 4, 5, 6, 7, 8, 9, 10, 12):
        ts = FAMILY_SAMPLES[m]
        assert len(ts) == 2
        for t in ts:
            assert is_regular(m, t), (m, t)
            assert torsion_order(find_unit(family_poly(m, t).D)) == m, (m, t)


def test_criterion_05b_norms_match_printed_formulas():
    failures = []
    for m in (4, 6, 8):
        for t in FAMILY_SAMPLES[m]:
            k = find_unit(family_poly(m, t).D).k
            ratio = k / expected_norm(m, t)
            if not is_rational_square(ratio):
                failures.append(f"m={m}, t={t}: k={k}, k_m(t)={expected_norm(m, t)}, ratio={ratio}")
    assert not failures, "; ".join(failures)


def test_criterion_06_norm_factorizations():
    for name, D in exceptional_suite():
        cert = find_unit(D)
        g, m, k = cert.g, cert.m, cert.k
        square = is_rational_square(k)
        # (a): same parity of m and g forces a square norm
        if (m - g) % 2 == 0:
            assert square, name
        sp = split_unit_factor(cert)
        if square:
            s = sp.s
            degs = (sp.cofactor_plus.deg, sp.cofactor_minus.deg)
            assert degs == (m - 2 * s, 2 * g + 2 + 2 * s - m), name
            assert sp.cofactor_plus * sp.cofactor_minus == D, name
        else:
            f1, f2 = sp.cofactor_plus, sp.cofactor_minus
            assert f1.deg == f2.deg == g + 1, name
            assert f2 == f1.conj(), name
            assert f1 * f2 == QPoly.from_poly(f1.ctx, D), name


def test_criterion_07_galois_classification():
    assert galois_quartic(family_poly(12, 2).D) is GaloisLabel.D4
    assert galois_quartic(family_poly(4, Fraction(1, 2)).D) is GaloisLabel.V4
    assert galois_quartic(family_poly(4, Fraction(-1, 32)).D) is GaloisLabel.C4
    assert galois_quartic(parse_poly("x^4+x+1")) is GaloisLabel.S4
    quartics = random_irreducible_quartics(200)
    assert len(quartics) == 200
    labels = set()
    for q in quartics:
        lab = galois_quartic(q)
        labels.add(lab)
        assert lab is oracle_label(q), q
    assert {GaloisLabel.S4, GaloisLabel.D4, GaloisLabel.V4, GaloisLabel.C4} <= labels


def test_criterion_08_resolvent_anchor():
    D = family_poly(10, 2).D
    C = resolvent_cubic(D)
    assert Fraction(7, 2) in rational_roots(C)
    assert C(Fraction(7, 2)) == 0
    # oracle: numerical roots of D, all three pairings
    xs = sympy.Symbol("x")
    roots = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(D.coeffs)], xs).nroots(n=30)
    a1, a2, a3, a4 = roots
    pairings = [a1 * a2 + a3 * a4, a1 * a3 + a2 * a4, a1 * a4 + a2 * a3]
    assert any(abs(p - sympy.Rational(7, 2)) < 1e-20 for p in pairings)


def test_criterion_09_factor_counts():
    f = factor_over_Q(family_poly(4, -1).D)
    assert f.unit == 1
    assert set(f.factors) == {(X * X + 2 * X + Fraction(7, 4), 1), (X * X - 2 * X - Fraction(1, 4), 1)}
    cells = [(4, 2, 0), (4, 2, 1), (4, 3, 0), (4, 4, 0), (6, 2, 0), (6, 2, 1), (6, 3, 0), (8, 2, 0)]
    sampled = 0
    for m, n, variant in cells:
        for s in (1, 2, 3, 5, Fraction(1, 2), Fraction(2, 3), -2):
            cell = factor_count_cell(m, s, n, variant)
            if cell is None or isinstance(cell, Unresolved):
                continue
            t, _ = cell
            if not is_regular(m, t):
                continue
            # cells overlap; the finest cell containing t is the prediction
            assert factor_over_Q(family_poly(m, t).D).count() == predicted_factor_count(m, t), (m, n, s, t)
            sampled += 1
    assert sampled >= 30
    assert isinstance(factor_count_cell(8, 2, 3), Unresolved)


def test_criterion_10_odd_linear_factors():
    # the printed factors are x - (t+1)/2, x + (t^2-3t+1)/2, x - (t^3-3t^2+4t-1)/2
    printed_constant = {
        5: lambda t: -(t + 1) / 2,
        7: lambda t: (t * t - 3 * t + 1) / 2,
        9: lambda t: -(t ** 3 - 3 * t * t + 4 * t - 1) / 2,
    }
    for m in (5, 7, 9):
        for t in FAMILY_SAMPLES[m]:
            t = Fraction(t)
            D = family_poly(m, t).D
            c = printed_constant[m](t)
            divides = [sign for sign in (1, -1) if not (D % (X + sign * c))]
            assert divides == [-1], (m, t)  # exactly one sign, the flipped one
            assert odd_linear_factor(m, t) == X - c
        entries = [e for e in TYPO_LEDGER if e.where == f"odd factor m={m}"]
        assert len(entries) == 1 and "flipped" in entries[0].note


def test_criterion_11_m3_toolkit():
    tk = d3_toolkit(1, 2)
    for r in (3, -1, Fraction(1, 2)):
        v, F, (lin, quad), ok = tk.root_split(r)
        assert ok and lin * quad == F
    tk = d3_toolkit(1, 1)
    assert (X + 1) * tk.F == tk.D3
    v, disc, square = tk.a3_condition(1)
    assert disc == Fraction(64, 49) and square


def test_criterion_12_height_growth():
    for D in random_s4_quartics(20, seed=99):
        s = [d for _, d in measure_heights(D, 15)]
        tail = s[4:]  # "eventually": h = 5..15
        assert all(b > a for a, b in zip(tail, tail[1:])), D
        second = [s[i + 1] - 2 * s[i] + s[i - 1] for i in range(1, len(s) - 1)]
        assert sum(second) / len(second) > 0, D
    for name, D in exceptional_suite():
        e = cf_init(D)
        st = cf_detect(e)
        period = 2 * st.r
        s = [d for _, d in measure_heights(D, 3 * period)]
        assert s[:period] == s[period:2 * period] == s[2 * period:], name
        assert max(s) == max(s[:period])


def test_criterion_13_galois_screen():
    suite = random_s4_quartics(100) + random_irreducible_quartics(200)
    s4 = [q for q in suite if galois_quartic(q) is GaloisLabel.S4]
    assert len(s4) >= 100
    for q in s4:
        e = cf_init(q)
        st = cf_detect(e, Bounds.default_for(1))
        assert not isinstance(st, QuasiPeriodic), q
        assert st.reason == "max_steps"
