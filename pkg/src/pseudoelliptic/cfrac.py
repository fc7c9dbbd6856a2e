"""Continued fraction expansion of y = sqrt(D) in Q((1/x)).

Line ``h`` of the tableau is the complete quotient ``(y + P_h)/Q_h`` with
partial quotient ``a_h``, its polynomial part.  Because y has trace zero the
recurrences are

    P_{h+1} = a_h Q_h - P_h,        Q_{h+1} = (D - P_{h+1}**2) / Q_h,

starting from line zero ``P_0 = A, Q_0 = 1, a_0 = 2A`` where ``A`` is the
polynomial part of y.  D is exceptional exactly when some ``Q_r`` (r >= 1)
is a constant; the first such r is the quasi-period.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import Poly, format_poly, is_squarefree, parse_poly, polypart_sqrt


class InvalidRadicand(ValueError):
    """D is not monic, not of even degree, or not squarefree."""


@dataclass(frozen=True)
class CFLine:
    h: int
    P: Poly
    Q: Poly
    a: Poly

    def as_dict(self) -> dict:
        return {"h": self.h, "P": format_poly(self.P), "Q": format_poly(self.Q), "a": format_poly(self.a)}


@dataclass(frozen=True)
class Bounds:
    max_steps: int = 50
    max_digits: int = 10000

    def __post_init__(self):
        if self.max_steps <= 0 or self.max_digits <= 0:
            raise ValueError("bounds must be positive")

    @classmethod
    def default_for(cls, g: int) -> "Bounds":
        # g = 1: torsion order m <= 12 over Q and m = r + 1, so r <= 11
        if g == 1:
            return cls(max_steps=11)
        return cls()


@dataclass(frozen=True)
class Running:
    def __str__(self):
        return "running"


@dataclass(frozen=True)
class QuasiPeriodic:
    r: int
    kappa: Fraction

    def __str__(self):
        return f"quasi_periodic(r={self.r}, kappa={self.kappa})"


@dataclass(frozen=True)
class Aborted:
    reason: str

    def __str__(self):
        return f"aborted({self.reason})"


@dataclass
class CFExpansion:
    """A growing tableau for sqrt(D); mutate only through :func:`cf_step`."""

    D: Poly
    g: int
    A: Poly
    lines: list[CFLine] = field(default_factory=list)
    status: object = field(default_factory=Running)

    @property
    def steps(self) -> int:
        return len(self.lines) - 1

    def line(self, h: int) -> CFLine:
        while len(self.lines) <= h:
            cf_step(self)
        return self.lines[h]

    def to_json(self) -> str:
        return json.dumps([ln.as_dict() for ln in self.lines])

    @staticmethod
    def lines_from_json(text: str) -> list[CFLine]:
        return [
            CFLine(int(d["h"]), parse_poly(d["P"]), parse_poly(d["Q"]), parse_poly(d["a"]))
            for d in json.loads(text)
        ]


def check_radicand(D: Poly) -> int:
    """Validate D and return g with deg D = 2g + 2."""
    if not D or D.deg < 2 or D.deg % 2:
        raise InvalidRadicand(f"D must have even degree >= 2, got {D.deg}")
    if not D.is_monic():
        raise InvalidRadicand("D must be monic")
    if not is_squarefree(D):
        raise InvalidRadicand("D must be squarefree")
    return D.deg // 2 - 1


def cf_init(D: Poly) -> CFExpansion:
    g = check_radicand(D)
    A, _ = polypart_sqrt(D)
    return CFExpansion(D, g, A, [CFLine(0, A, Poly([1]), A.scale(2))])


def cf_step(e: CFExpansion) -> CFLine:
    last = e.lines[-1]
    P = last.a * last.Q - last.P
    Q, rem = divmod(e.D - P * P, last.Q)
    if rem:
        raise AssertionError(f"internal fault: Q_{last.h} does not divide D - P^2")
    a = (e.A + P) // Q
    ln = CFLine(last.h + 1, P, Q, a)
    e.lines.append(ln)
    return ln


def cf_detect(e: CFExpansion, bounds: Bounds | None = None):
    """Expand until the first constant Q_r (r >= 1) or until a bound trips."""
    if bounds is None:
        bounds = Bounds.default_for(e.g)
    if isinstance(e.status, (QuasiPeriodic, Aborted)):
        return e.status
    for ln in e.lines[1:]:
        if ln.Q.is_constant():
            e.status = QuasiPeriodic(ln.h, ln.Q.lc)
            return e.status
    while True:
        if e.steps >= bounds.max_steps:
            e.status = Aborted("max_steps")
            return e.status
        ln = cf_step(e)
        if ln.Q.is_constant():
            e.status = QuasiPeriodic(ln.h, ln.Q.lc)
            return e.status
        if ln.Q.max_digits() > bounds.max_digits:
            e.status = Aborted("max_digits")
            return e.status


def convergent(e: CFExpansion, upto: int) -> tuple[Poly, Poly]:
    """Numerator and denominator of [A; a_1, ..., a_upto].

    Term zero is A itself (not a_0 = 2A).
    """
    if upto < 0 or upto >= len(e.lines):
        raise IndexError(f"convergent index {upto} outside 0..{len(e.lines) - 1}")
    p_prev, q_prev = Poly([1]), Poly()
    p, q = e.A, Poly([1])
    for h in range(1, upto + 1):
        a = e.lines[h].a
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    return p, q


def convergent_norm_check(e: CFExpansion, upto: int) -> bool:
    """``p_h**2 - D q_h**2 == (-1)**(h+1) * Q_{h+1}`` exactly."""
    p, q = convergent(e, upto)
    Qn = e.line(upto + 1).Q
    sign = 1 if upto % 2 else -1
    return p * p - e.D * q * q == Qn.scale(sign)


def degree_bounds_hold(e: CFExpansion) -> bool:
    g = e.g
    for ln in e.lines[1:]:
        if ln.P.deg != g + 1 or ln.Q.deg > g:
            return False
        if (e.D - ln.P * ln.P) % ln.Q:
            return False
    return True


@dataclass(frozen=True)
class SymmetryReport:
    r: int
    kappa: Fraction
    period_ok: bool  # Q_{2r} = 1 and P_{2r} = A
    twisted_ok: bool  # a_{2r-h} is a rational multiple of a_h
    ratios: tuple[Fraction, ...]  # a_{2r-h} / a_h for h = 1..r-1
    palindrome_ok: bool | None  # only asserted when kappa == 1
    parity_ok: bool | None  # r odd, only asserted when kappa not in {1, -1}

    @property
    def ok(self) -> bool:
        return (
            self.period_ok
            and self.twisted_ok
            and self.palindrome_ok is not False
            and self.parity_ok is not False
        )


def _ratio(u: Poly, v: Poly) -> Fraction | None:
    """The rational c with u = c*v, or None."""
    if not v or u.deg != v.deg:
        return None
    c = u.lc / v.lc
    return c if u == v.scale(c) else None


def symmetry_report(e: CFExpansion) -> SymmetryReport:
    st = e.status
    if not isinstance(st, QuasiPeriodic):
        raise ValueError("symmetry_report needs a quasi-periodic expansion")
    r, kappa = st.r, st.kappa
    end = e.line(2 * r)
    period_ok = end.Q == Poly([1]) and end.P == e.A
    ratios = []
    twisted_ok = True
    for h in range(1, r):
        c = _ratio(e.lines[2 * r - h].a, e.lines[h].a)
        if c is None or c == 0:
            twisted_ok = False
            c = Fraction(0)
        ratios.append(c)
    palindrome = None
    if kappa == 1:
        palindrome = all(e.lines[h].a == e.lines[r - h].a for h in range(1, r))
    parity = None
    if kappa not in (1, -1):
        parity = r % 2 == 1
    return SymmetryReport(r, kappa, period_ok, twisted_ok, tuple(ratios), palindrome, parity)


def measure_heights(D: Poly, n: int) -> list[tuple[int, int]]:
    """(h, digits of Q_h) for h = 1..n, no detection."""
    if n <= 0:
        return []
    e = cf_init(D)
    out = []
    for _ in range(n):
        ln = cf_step(e)
        out.append((ln.h, ln.Q.max_digits()))
    return out


def heights_csv(series) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["h", "digits"])
    w.writerows(series)
    return buf.getvalue()


def read_heights_csv(text: str) -> list[tuple[int, int]]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["h", "digits"]:
        raise ValueError("expected header 'h,digits'")
    return [(int(h), int(d)) for h, d in rows[1:]]
