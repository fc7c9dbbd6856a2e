"""Fundamental units of Q[x, sqrt(D)] and the pseudo-elliptic integrals they give.

A unit ``a + b*sqrt(D)`` with ``a**2 - D*b**2 = k`` (a nonzero constant)
yields

    integral f/sqrt(D) dx = log(a + b*sqrt(D)),    f = a'/b,

and the whole identity reduces to two polynomial identities which are
checked exactly, never by sampling.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .cfrac import (
    Bounds,
    CFExpansion,
    QuasiPeriodic,
    cf_detect,
    cf_init,
    check_radicand,
    convergent,
)
from .exactnum import Poly, format_poly, parse_poly, poly_gcd, polypart_sqrt, to_rat


class InvalidCertificate(ValueError):
    pass


@dataclass(frozen=True)
class UnitCert:
    D: Poly
    g: int
    a: Poly
    b: Poly
    k: Fraction
    m: int
    r: int
    kappa: Fraction

    def check(self) -> None:
        """Raise InvalidCertificate unless every invariant holds identically."""
        if not (self.a.is_monic() and self.b.is_monic()):
            raise InvalidCertificate("a and b must be monic")
        if self.a * self.a - self.D * self.b * self.b != Poly([self.k]) or self.k == 0:
            raise InvalidCertificate("a^2 - D b^2 is not the constant k")
        if self.m != self.a.deg or self.m < self.g + 1:
            raise InvalidCertificate("m must equal deg a and be at least g + 1")
        if self.b.deg != self.m - self.g - 1:
            raise InvalidCertificate("deg b != m - g - 1")
        if poly_gcd(self.a, self.b).deg > 0:
            raise InvalidCertificate("a and b share a factor")

    def to_dict(self) -> dict:
        return {
            "D": format_poly(self.D),
            "a": format_poly(self.a),
            "b": format_poly(self.b),
            "k": str(self.k),
            "m": self.m,
            "g": self.g,
            "r": self.r,
            "kappa": str(self.kappa),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "UnitCert":
        return cls(
            D=parse_poly(d["D"]),
            g=int(d["g"]),
            a=parse_poly(d["a"]),
            b=parse_poly(d["b"]),
            k=to_rat(d["k"]),
            m=int(d["m"]),
            r=int(d["r"]),
            kappa=to_rat(d["kappa"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "UnitCert":
        return cls.from_dict(json.loads(text))


def closed_form_unit(D: Poly) -> UnitCert:
    """g = 0: D = x^2 + 2vx + w has the unit (x + v) + sqrt(D) of norm v^2 - w."""
    if D.deg != 2:
        raise ValueError("closed form applies to quadratics only")
    check_radicand(D)
    A, R = polypart_sqrt(D)  # A = x + v, R = w - v^2
    k = -R.lc
    cert = UnitCert(D, 0, A, Poly([1]), k, 1, 1, R.lc)
    cert.check()
    return cert


def unit_from_expansion(e: CFExpansion) -> UnitCert:
    st = e.status
    if not isinstance(st, QuasiPeriodic):
        raise ValueError("expansion is not quasi-periodic")
    p, q = convergent(e, st.r - 1)
    a, b = p.monic(), q.monic()
    norm = a * a - e.D * b * b
    if not norm.is_constant() or not norm:
        raise AssertionError("convergent does not give a unit")
    cert = UnitCert(e.D, e.g, a, b, norm.lc, a.deg, st.r, st.kappa)
    cert.check()
    return cert


def find_unit(D: Poly, bounds: Bounds | None = None) -> UnitCert | None:
    """The normalized fundamental unit of Q[x, sqrt(D)], or None if the search is cut off."""
    g = check_radicand(D)
    if g == 0:
        return closed_form_unit(D)
    e = cf_init(D)
    cf_detect(e, bounds or Bounds.default_for(g))
    if not isinstance(e.status, QuasiPeriodic):
        return None
    return unit_from_expansion(e)


def find_unit_with_expansion(D: Poly, bounds: Bounds | None = None):
    """Like :func:`find_unit` but also returns the expansion (g >= 0)."""
    g = check_radicand(D)
    e = cf_init(D)
    cf_detect(e, bounds or Bounds.default_for(g))
    if not isinstance(e.status, QuasiPeriodic):
        return None, e
    cert = closed_form_unit(D) if g == 0 else unit_from_expansion(e)
    return cert, e


def torsion_order(cert: UnitCert) -> int:
    """Order of the divisor at infinity: deg a.  For g = 1 this is r + 1."""
    if cert.g == 1 and cert.m != cert.r + 1:
        raise AssertionError(f"genus 1 but m = {cert.m} != r + 1 = {cert.r + 1}")
    return cert.m


@dataclass(frozen=True)
class IntegralIdentity:
    """``integral f/sqrt(D) dx = log(a + b sqrt(D))``."""

    D: Poly
    f: Poly
    a: Poly
    b: Poly

    @property
    def k(self) -> Poly:
        return self.a * self.a - self.D * self.b * self.b

    def to_dict(self) -> dict:
        k = self.k
        return {
            "D": format_poly(self.D),
            "f": format_poly(self.f),
            "a": format_poly(self.a),
            "b": format_poly(self.b),
            "k": str(k.lc) if k.is_constant() else format_poly(k),
            "m": int(self.a.deg),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "IntegralIdentity":
        return cls(parse_poly(d["D"]), parse_poly(d["f"]), parse_poly(d["a"]), parse_poly(d["b"]))


def integrand(cert: UnitCert) -> IntegralIdentity:
    q, r = divmod(cert.a.derivative(), cert.b)
    if r:
        raise InvalidCertificate("b does not divide a'")
    if q.deg != cert.g or q.lc != cert.m:
        raise InvalidCertificate(f"f = {q} should have degree {cert.g} and leading coefficient {cert.m}")
    return IntegralIdentity(cert.D, q, cert.a, cert.b)


def verify_identity(ident: IntegralIdentity) -> bool:
    """d/dx log(a + b sqrt(D)) == f / sqrt(D), as two polynomial identities.

    Writing u = a + b sqrt(D), u' = f u / sqrt(D) splits into its rational
    part ``f b = a'`` and its sqrt(D) part ``2 f a = 2 b' D + b D'``.
    """
    D, f, a, b = ident.D, ident.f, ident.a, ident.b
    if not a or not b:
        return False
    rational_part = f * b == a.derivative()
    radical_part = (f * a).scale(2) == (b.derivative() * D).scale(2) + b * D.derivative()
    return rational_part and radical_part


def _latex_poly(p: Poly) -> str:
    s = format_poly(p)
    out = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch == "^":
            j = i + 1
            while j < len(s) and s[j].isdigit():
                j += 1
            out.append("^{" + s[i + 1:j] + "}")
            i = j
            continue
        if ch == "*":
            i += 1
            continue
        out.append(ch)
        i += 1
    text = "".join(out)
    return re.sub(r"(\d+)/(\d+)", r"\\frac{\1}{\2}", text)


def _paren(s: str) -> str:
    return s if all(ch not in s[1:] for ch in "+-") else f"({s})"


def emit_identity(ident: IntegralIdentity, fmt: str = "text", standalone: bool = False) -> str:
    """Render a verified identity as ``text``, ``latex`` or ``json``."""
    if not verify_identity(ident):
        raise InvalidCertificate("refusing to emit an unverified identity")
    if fmt == "json":
        return json.dumps(ident.to_dict())
    D, f, a, b = ident.D, ident.f, ident.a, ident.b
    if fmt == "text":
        sD = f"√({format_poly(D)})"
        bpart = sD if b == Poly([1]) else f"{_paren(format_poly(b))}*{sD}"
        return f"∫ {_paren(format_poly(f))}/{sD} dx = log({format_poly(a)}+{bpart})"
    if fmt == "latex":
        sD = r"\sqrt{" + _latex_poly(D) + "}"
        bl = _latex_poly(b)
        bpart = sD if b == Poly([1]) else r"\left(" + bl + r"\right)" + sD
        body = (
            r"\int \frac{" + _latex_poly(f) + r"}{" + sD + r"}\,dx = \log\left("
            + _latex_poly(a) + "+" + bpart + r"\right)"
        )
        if not standalone:
            return body
        return (
            "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n"
            "\\begin{multline*}\n" + body + "\n\\end{multline*}\n\\end{document}\n"
        )
    raise ValueError(f"unknown format {fmt!r}")
