"""Structural checks on exceptional D and Galois groups of quartics.

Every boolean in a report is stored next to the polynomials that witness
it, so a report can be re-checked without rerunning the pipeline.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .cfrac import CFExpansion, QuasiPeriodic, check_radicand, convergent, symmetry_report
from .exactnum import (
    Factorization,
    Poly,
    discriminant,
    factor_over_Q,
    format_poly,
    is_rational_square,
    is_squarefree,
    rational_roots,
)
from .quadext import (
    NonFundamentalUnit,
    QPoly,
    QuadCtx,
    UnitSplit,
    qsqrt,
    split_unit_factor,
)
from .units import UnitCert


class GaloisLabel(str, enum.Enum):
    S4 = "S4"
    A4 = "A4"
    D4 = "D4"
    C4 = "C4"
    V4 = "V4"
    REDUCIBLE = "reducible"

    def __str__(self):
        return self.value


def resolvent_cubic(q: Poly) -> Poly:
    """Cubic whose roots are the three sums a_i a_j + a_k a_l over root pairings of ``q``."""
    if q.deg != 4 or not q.is_monic():
        raise ValueError("resolvent_cubic needs a monic quartic")
    c0, c1, c2, c3 = q[0], q[1], q[2], q[3]
    return Poly([-(c1 * c1 + c0 * c3 * c3 - 4 * c0 * c2), c1 * c3 - 4 * c0, -c2, 1])


@dataclass(frozen=True)
class GaloisWitness:
    label: GaloisLabel
    discriminant: Fraction
    resolvent: Poly
    resolvent_roots: tuple[Fraction, ...]
    factors_Q: Factorization
    # C4: the factorization over Q(sqrt(disc)); D4: the two quadratic
    # equations with no root in Q(sqrt(disc))
    quadratic_split: tuple | None = None
    obstruction: tuple | None = None


def _pairing_split(q: Poly, r: Fraction, ctx: QuadCtx):
    """Try to write q = (x^2 + u x + v)(x^2 + u' x + v') over ctx using the pairing with v + v' = r.

    The pair (v, v') has sum r and product c0; (u, u') has sum c3 and
    product c2 - r; the x-coefficient fixes the relative sign.  Returns the
    two factors, or the obstruction (the discriminant with no root in ctx).
    """
    c0, c1, c2, c3 = q[0], q[1], q[2], q[3]
    disc_v = r * r - 4 * c0
    disc_u = c3 * c3 - 4 * (c2 - r)
    sv, su = qsqrt(disc_v, ctx), qsqrt(disc_u, ctx)
    if sv is None or su is None:
        return None, (disc_v if sv is None else disc_u)
    # c1 = u v' + u' v = c3 r / 2 - (su * sv) / 2 with u = (c3 + su)/2, v = (r + sv)/2
    target = ctx(c3 * r / 2 - c1)
    for sign in (1, -1):
        s_v = sv * sign
        if (su * s_v) * Fraction(1, 2) == target:
            break
    else:
        if su or sv:
            return None, None
        s_v = sv
    u = (su + c3) * Fraction(1, 2)
    u2 = (ctx(c3) - su) * Fraction(1, 2)
    v = (s_v + r) * Fraction(1, 2)
    v2 = (ctx(r) - s_v) * Fraction(1, 2)
    f1 = QPoly(ctx, [v, u, 1])
    f2 = QPoly(ctx, [v2, u2, 1])
    if f1 * f2 != QPoly.from_poly(ctx, q):
        return None, None
    return (f1, f2), None


def galois_quartic_witness(q: Poly) -> GaloisWitness:
    if q.deg != 4 or not q.is_monic():
        raise ValueError("galois_quartic needs a monic quartic")
    if not is_squarefree(q):
        raise ValueError("galois_quartic needs a squarefree quartic")
    fq = factor_over_Q(q)
    delta = discriminant(q)
    C = resolvent_cubic(q)
    roots = tuple(rational_roots(C))
    if not fq.is_irreducible():
        return GaloisWitness(GaloisLabel.REDUCIBLE, delta, C, roots, fq)
    square = is_rational_square(delta)
    if not roots:
        label = GaloisLabel.A4 if square else GaloisLabel.S4
        return GaloisWitness(label, delta, C, roots, fq)
    if len(roots) == 3:
        return GaloisWitness(GaloisLabel.V4, delta, C, roots, fq)
    # exactly one rational root: C4 iff q splits over Q(sqrt(delta))
    ctx = QuadCtx(delta)
    split, obstruction = _pairing_split(q, roots[0], ctx)
    if split is not None:
        return GaloisWitness(GaloisLabel.C4, delta, C, roots, fq, quadratic_split=split)
    return GaloisWitness(GaloisLabel.D4, delta, C, roots, fq, obstruction=(obstruction,))


def galois_quartic(q: Poly) -> GaloisLabel:
    return galois_quartic_witness(q).label


# ---------------------------------------------------------------------------
# reports


@dataclass
class ClassReport:
    D: Poly
    cert: UnitCert | None = None
    parity_ok: bool | None = None
    k_square: bool | None = None
    s: int | None = None
    factors_Q: Factorization | None = None
    factors_Qc: tuple | None = None
    galois: GaloisLabel | None = None
    resolvent: Poly | None = None
    resolvent_rational_zero: Fraction | None = None
    checks: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def to_dict(self) -> dict:
        def enc(v):
            if isinstance(v, Poly):
                return format_poly(v)
            if isinstance(v, Fraction):
                return str(v)
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            if isinstance(v, dict):
                return {k: enc(x) for k, x in v.items()}
            if isinstance(v, (QPoly,)):
                return str(v)
            if isinstance(v, enum.Enum):
                return v.value
            return v

        return {
            "D": format_poly(self.D),
            "cert": self.cert.to_dict() if self.cert else None,
            "parity_ok": self.parity_ok,
            "k_square": self.k_square,
            "s": self.s,
            "factors_Q": None
            if self.factors_Q is None
            else {
                "unit": str(self.factors_Q.unit),
                "factors": [[format_poly(f), e] for f, e in self.factors_Q.factors],
            },
            "factors_Qc": enc(self.factors_Qc),
            "galois": enc(self.galois),
            "resolvent": enc(self.resolvent),
            "resolvent_rational_zero": enc(self.resolvent_rational_zero),
            "checks": self.checks,
            "witnesses": enc(self.witnesses),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _check_cert(D: Poly, cert: UnitCert):
    if cert.D != D:
        raise ValueError("certificate belongs to a different D")
    cert.check()


def _galois_fields(report: ClassReport, D: Poly):
    if D.deg == 4:
        w = galois_quartic_witness(D)
        report.galois = w.label
        report.resolvent = w.resolvent
        report.resolvent_rational_zero = w.resolvent_roots[0] if len(w.resolvent_roots) == 1 else None
        report.witnesses["discriminant"] = w.discriminant
        report.witnesses["resolvent_roots"] = list(w.resolvent_roots)
        if w.quadratic_split:
            report.witnesses["quadratic_split"] = [str(f) for f in w.quadratic_split]


def _record_split(report: ClassReport, sp: UnitSplit):
    report.s = sp.s
    report.witnesses["d_plus"] = str(sp.d_plus)
    report.witnesses["d_minus"] = str(sp.d_minus)
    report.witnesses["cofactor_plus"] = str(sp.cofactor_plus)
    report.witnesses["cofactor_minus"] = str(sp.cofactor_minus)
    if not sp.k_square:
        report.factors_Qc = (sp.cofactor_plus, sp.cofactor_minus)


def norm_split_report(D: Poly, cert: UnitCert) -> ClassReport:
    """Parity/squareness of the norm and the factorizations it forces."""
    _check_cert(D, cert)
    g, m, k = cert.g, cert.m, cert.k
    rep = ClassReport(D, cert)
    rep.k_square = is_rational_square(k)
    rep.parity_ok = (m - g) % 2 != 0 or rep.k_square
    rep.checks["a_parity_implies_square"] = rep.parity_ok
    rep.factors_Q = factor_over_Q(D)
    sp = split_unit_factor(cert)
    _record_split(rep, sp)
    if sp.k_square:
        dp, dm = sp.cofactor_plus.deg, sp.cofactor_minus.deg
        s = sp.s
        rep.checks["b_degrees"] = (dp, dm) == (m - 2 * s, 2 * g + 2 + 2 * s - m)
        rep.checks["b_reassembles_D"] = sp.cofactor_plus * sp.cofactor_minus == D
        if m % 2:
            rep.checks["b_odd_m_reducible"] = not rep.factors_Q.is_irreducible()
    else:
        f1, f2 = sp.cofactor_plus, sp.cofactor_minus
        rep.checks["c_degrees"] = f1.deg == g + 1 and f2.deg == g + 1
        rep.checks["c_conjugate"] = f2 == f1.conj()
        rep.checks["c_reassembles_D"] = f1 * f2 == D
        rep.checks["c_even_deg_b"] = cert.b.deg % 2 == 0
    _galois_fields(rep, D)
    if g == 1 and not rep.k_square:
        rep.checks["galois_in_D4"] = rep.galois in (
            GaloisLabel.D4,
            GaloisLabel.C4,
            GaloisLabel.V4,
            GaloisLabel.REDUCIBLE,
        )
    return rep


def period_report(cert: UnitCert, e: CFExpansion) -> ClassReport:
    """Norm-1 for even quasi-period, the b-splittings, and the midpoint factor of D."""
    st = e.status
    if not isinstance(st, QuasiPeriodic) or st.r != cert.r or e.D != cert.D:
        raise ValueError("certificate and expansion do not match")
    D, r = cert.D, st.r
    rep = norm_split_report(D, cert)
    if r % 2 == 0:
        # the statement is about the convergent a/b itself, before monic normalization
        p, q = convergent(e, r - 1)
        raw = p * p - D * q * q
        rep.checks["a_even_r_norm_one"] = raw == Poly([1]) and rep.k_square
        rep.witnesses["convergent_norm"] = raw
    sym = symmetry_report(e)
    rep.checks["period_2r"] = sym.period_ok
    rep.checks["twisted_symmetry"] = sym.twisted_ok
    if sym.parity_ok is not None:
        rep.checks["r_odd_when_kappa_not_pm1"] = sym.parity_ok
    # full period 2r has midpoint r: trivially symmetric, Q_r constant
    mid = e.line(r)
    rep.checks["midpoint_full_period"] = e.line(r + 1).P == mid.P and not (D % mid.Q)
    if r % 2 == 0:
        h = r // 2
        Ph, Qh = e.line(h).P, e.line(h).Q
        sym_ok = e.line(h + 1).P == Ph
        factor = Qh.monic()
        divides = sym_ok and not (Ph % Qh) and not (D % factor)
        rep.checks["midpoint_factor_of_D"] = divides and 1 <= factor.deg <= cert.g
        rep.witnesses["midpoint_h"] = h
        rep.witnesses["midpoint_factor"] = factor
        if divides:
            rep.witnesses["midpoint_cofactor"] = D / factor
    rep.witnesses["r"] = r
    rep.witnesses["kappa"] = st.kappa
    return rep


@dataclass(frozen=True)
class ScreenVerdict:
    verdict: str  # "not_exceptional" or "undecided"
    rule: str
    label: GaloisLabel | None = None

    def __str__(self):
        return self.verdict


def exceptionality_screen(D: Poly) -> ScreenVerdict:
    """One-sided test: a genus-1 D whose Galois group is too big cannot be exceptional."""
    check_radicand(D)
    if D.deg != 4:
        return ScreenVerdict("undecided", "screen only covers quartics")
    label = galois_quartic(D)
    if label is GaloisLabel.S4:
        return ScreenVerdict("not_exceptional", "irreducible with group S4", label)
    if label is GaloisLabel.A4:
        return ScreenVerdict("not_exceptional", "group A4 does not divide 2((g+1)!)^2 = 8", label)
    return ScreenVerdict("undecided", f"group {label} is admissible", label)


def classify(D: Poly, bounds=None) -> ClassReport:
    """Everything known about D: unit (if found), structural checks, Galois data."""
    from .units import find_unit_with_expansion

    check_radicand(D)
    cert, e = find_unit_with_expansion(D, bounds)
    if cert is None:
        rep = ClassReport(D)
        rep.factors_Q = factor_over_Q(D)
        _galois_fields(rep, D)
        rep.witnesses["status"] = str(e.status)
        if D.deg == 4:
            rep.witnesses["screen"] = exceptionality_screen(D).verdict
        return rep
    try:
        rep = period_report(cert, e)
    except NonFundamentalUnit:
        rep = ClassReport(D, cert)
        rep.checks["fundamental"] = False
    rep.witnesses["status"] = str(e.status)
    return rep
