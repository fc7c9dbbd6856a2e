"""Quartic families D_m(x; t) whose divisor at infinity has torsion order m.

For m >= 4 the family is ``(x^2 + v - w^2)^2 + 4v(x + w)`` with (v, w) a
rational function of t; m = 3 takes (v, w) directly and m = 2 takes (u, w)
with ``D = (x^2 + u)^2 + 4w``.

Several tabulated signs and formulas do not survive exact checking.
Wherever this module has to pick a sign it does so by exact division and
appends an entry to :data:`TYPO_LEDGER`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .cfrac import Bounds, QuasiPeriodic, cf_detect, cf_init
from .exactnum import (
    X,
    Poly,
    discriminant,
    factor_over_Q,
    is_rational_square,
    is_squarefree,
    to_rat,
)

FAMILY_ORDERS = (2, 3, 4, 5, 6, 7, 8, 9, 10, 12)

Param = Union[Fraction, tuple]


class DomainError(ValueError):
    """The family parameters are undefined at this t."""


@dataclass(frozen=True)
class TypoEntry:
    where: str
    printed: str
    resolved: str
    note: str = ""

    def __str__(self):
        return f"{self.where}: printed {self.printed}; resolved {self.resolved}" + (
            f" ({self.note})" if self.note else ""
        )


TYPO_LEDGER: list[TypoEntry] = []


def _ledger(entry: TypoEntry):
    if entry not in TYPO_LEDGER:
        TYPO_LEDGER.append(entry)


@dataclass(frozen=True)
class Unresolved:
    """A table cell left open on purpose; no prediction is made."""

    mark: str

    def __str__(self):
        return f"unresolved({self.mark})"


# ---------------------------------------------------------------------------
# parameters


def _F(v) -> Fraction:
    return to_rat(v)


def family_params(m: int, t) -> tuple[Fraction, Fraction]:
    """(v, w) for D_m(x; t).  For m = 2 and m = 3, ``t`` is the pair itself."""
    if m not in FAMILY_ORDERS:
        raise ValueError(f"no family of torsion order {m}")
    if m in (2, 3):
        v, w = t
        return _F(v), _F(w)
    t = _F(t)
    try:
        if m == 4:
            return t, Fraction(1, 2)
        if m == 5:
            if t == 0:
                raise DomainError("t = 0 is excluded for m = 5")
            return t, -(t - 1) / 2
        if m == 6:
            return t * (t - 1), 1 - t / 2
        if m == 7:
            if t in (0, 1):
                raise DomainError("t in {0, 1} is excluded for m = 7")
            return t * t * (t - 1), -(t * t - t - 1) / 2
        if m == 8:
            return (t - 1) * (2 * t - 1), -(2 * t * t - 4 * t + 1) / (2 * t)
        if m == 9:
            if t in (0, 1):
                raise DomainError("t in {0, 1} is excluded for m = 9")
            return t * t * (t - 1) * (t * t - t + 1), -(t ** 3 - t * t - 1) / 2
        if m == 10:
            den = t * t - 3 * t + 1
            v = t ** 3 * (2 * t - 1) * (t - 1) / den ** 2
            w = (2 * t ** 3 - 2 * t * t - 2 * t + 1) / (2 * den)
            return v, w
        # m == 12
        v = (t - 1) * (2 * t - 1) * (3 * t * t - 3 * t + 1) * (2 * t * t - 2 * t + 1) / t ** 4
        w = -(6 * t ** 4 - 16 * t ** 3 + 14 * t * t - 6 * t + 1) / (2 * t ** 3)
        return v, w
    except ZeroDivisionError as exc:
        raise DomainError(f"family {m} undefined at t = {t}") from exc


def family_D(m: int, v, w) -> Poly:
    v, w = _F(v), _F(w)
    if m == 2:
        # (v, w) = (u, w): (x^2 + u)^2 + 4w
        return (X * X + v) ** 2 + 4 * w
    if m == 3:
        return (X * X - w * w) ** 2 + (X + w).scale(4 * v)
    return (X * X + (v - w * w)) ** 2 + (X + w).scale(4 * v)


@dataclass(frozen=True)
class FamilyInstance:
    m: int
    t: Param
    v: Fraction
    w: Fraction
    D: Poly
    regular: bool

    def label(self) -> str:
        t = self.t if not isinstance(self.t, tuple) else ",".join(str(x) for x in self.t)
        return f"m={self.m},t={t}"


def _torsion(D: Poly) -> int | None:
    """m = r + 1 from the expansion (genus 1), or None past the Mazur bound."""
    e = cf_init(D)
    st = cf_detect(e, Bounds(max_steps=11))
    if isinstance(st, QuasiPeriodic):
        return st.r + 1
    return None


def is_regular(m: int, t) -> bool:
    """Params defined, D squarefree, and the expansion confirms torsion exactly m."""
    if m in (10, 12) and not isinstance(t, tuple) and _F(t) in (0, 1, Fraction(1, 2)):
        return False
    try:
        v, w = family_params(m, t)
    except DomainError:
        return False
    D = family_D(m, v, w)
    if not is_squarefree(D):
        return False
    return _torsion(D) == m


def family_poly(m: int, t) -> FamilyInstance:
    v, w = family_params(m, t)
    D = family_D(m, v, w)
    return FamilyInstance(m, t if isinstance(t, tuple) else _F(t), v, w, D, is_regular(m, t))


def parse_family_spec(text: str) -> tuple[int, Param]:
    """``"m=10,t=2"``; the two-parameter cases take ``"m=3,t=v,w"``."""
    m_part, _, t_part = text.replace(" ", "").partition(",t=")
    if not m_part.startswith("m=") or not t_part:
        raise ValueError(f"expected 'm=M,t=T', got {text!r}")
    m = int(m_part[2:])
    if m in (2, 3):
        a, b = t_part.split(",")
        return m, (_F(a), _F(b))
    return m, _F(t_part)


# ---------------------------------------------------------------------------
# norms and parametrized exceptions


def expected_norm(m: int, t) -> Fraction:
    t = _F(t)
    if m == 4 or m == 6:
        return 4 * t
    if m == 8:
        return 4 * (t - 1) * (2 * t - 1) ** 2 / t ** 3
    raise ValueError("expected norms are tabulated for m in {4, 6, 8} only")


def galois_exception_cell(m: int, s, column: str = "V4"):
    """Galois exception list: the t-parametrization of a Galois-group exception and its label.

    ``column`` is ``"V4"`` (the C2 x C2 column) or ``"C4"``.  Returns
    ``(t, label)``, ``None`` for an empty cell, or :class:`Unresolved`.
    """
    from .classify import GaloisLabel

    s = _F(s)
    if column not in ("V4", "C4"):
        raise ValueError("column is 'V4' or 'C4'")
    try:
        if m == 4:
            if column == "V4":
                return (s * s - 1) / 16, GaloisLabel.V4
            return Fraction(-1, 16) / (s * s + 1), GaloisLabel.C4
        if m == 6 and column == "V4":
            return 8 / (9 - s * s), GaloisLabel.V4
    except ZeroDivisionError:
        return None
    if m == 10 and column == "C4":
        return Unresolved("*")
    if m in (4, 6, 8, 10, 12):
        return None
    raise ValueError(f"the Galois exception list has no row for m = {m}")


def m8_viergruppe_t(s):
    """A t with Galois group V4 for D_8(x; t); absent from the printed Galois exception list.

    The resolvent of D_8 has the rational zero -(4t^4 - 12t^3 + 16t^2 - 8t + 1)/(2t^2)
    and its quadratic cofactor has discriminant 16 t^4 (2t - 1)^4 (8t^2 - 8t + 1),
    so the group is V4 exactly when 8t^2 - 8t + 1 is a square.  The conic has
    the point (0, 1); the line u = 1 + s t through it gives t = 2(s + 4)/(8 - s^2).
    """
    s = _F(s)
    if s * s == 8:  # pragma: no cover - s is rational
        return None
    return 2 * (s + 4) / (8 - s * s)


def m8_is_viergruppe_t(t) -> bool:
    """Does t lie on the V4 locus of D_8 (8t^2 - 8t + 1 a rational square)?"""
    t = _F(t)
    return is_rational_square(8 * t * t - 8 * t + 1)


def factor_count_cell(m: int, s, factors: int = 2, variant: int = 0):
    """Factor-count list: a t at which D_m(x; t) has the given number of factors over Q.

    Two-factor cells hold two parametrizations (``variant`` 0 or 1) for
    m = 4 and m = 6.  Returns ``(t, factors)``, ``None`` for an empty cell,
    or :class:`Unresolved` for the dagger cell.
    """
    s = _F(s)
    try:
        if m == 4:
            if factors == 2:
                return (-s * s if variant == 0 else 4 * s ** 4 - s * s), 2
            if factors == 3:
                return -((s * s - 1) / 4) ** 2, 3
            if factors == 4:
                return -((s ** 3 - s) / (s * s + 1) ** 2) ** 2, 4
        if m == 6:
            if factors == 2:
                return (1 - s * s if variant == 0 else (1 + s * s) ** 2 / (3 * s * s + 1)), 2
            if factors == 3:
                return 1 - ((s * s - 1) / (s * s + 3)) ** 2, 3
            if factors == 4:
                return None
        if m == 8:
            if factors == 2:
                return 1 / (s * s + 1), 2
            if factors == 3:
                return Unresolved("†")
            if factors == 4:
                return None
    except ZeroDivisionError:
        return None
    raise ValueError(f"no factor-count cell (m={m}, factors={factors})")


def _factor_count_parametrizations():
    """(m, factors, t(s) numerator, t(s) denominator) for every resolved factor-count cell."""
    s = X
    one = Poly([1])
    return [
        (4, 2, -s * s, one),
        (4, 2, (s ** 4).scale(4) - s * s, one),
        (4, 3, -(s * s - 1) ** 2, Poly([16])),
        (4, 4, -(s ** 3 - s) ** 2, (s * s + 1) ** 4),
        (6, 2, 1 - s * s, one),
        (6, 2, (1 + s * s) ** 2, (s * s).scale(3) + 1),
        (6, 3, (s * s + 3) ** 2 - (s * s - 1) ** 2, (s * s + 3) ** 2),
        (8, 2, one, s * s + 1),
    ]


def factor_cells_containing(m: int, t) -> list[tuple[int, Fraction]]:
    """Every (factor count, s) with s rational and a factor-count cell of row m giving t at s."""
    from .exactnum import rational_roots

    t = _F(t)
    hits = []
    for row, n, num, den in _factor_count_parametrizations():
        if row != m:
            continue
        eq = num - den.scale(t)
        if not eq:
            hits.append((n, Fraction(0)))
            continue
        for s in rational_roots(eq) if eq.deg >= 1 else []:
            if den(s) != 0:
                hits.append((n, s))
    return sorted(set(hits))


def predicted_factor_count(m: int, t) -> int:
    """Predicted number of factors of D_m(x; t) over Q: the finest factor-count cell containing t, else 1."""
    cells = factor_cells_containing(m, t)
    return max((n for n, _ in cells), default=1)


# ---------------------------------------------------------------------------
# odd torsion: the rational root


_PRINTED_ROOT = {
    # printed divisor is x - sign * rho(t) / 2
    5: (1, lambda t: t + 1, "x-(t+1)/2"),
    7: (-1, lambda t: t * t - 3 * t + 1, "x+(t^2-3t+1)/2"),
    9: (1, lambda t: t ** 3 - 3 * t * t + 4 * t - 1, "x-(t^3-3t^2+4t-1)/2"),
}


def odd_linear_factor(m: int, t) -> Poly:
    """The linear factor of D_m(x; t), m in {5, 7, 9}, with its sign fixed by division."""
    if m not in _PRINTED_ROOT:
        raise ValueError("odd linear factors are known for m in {5, 7, 9}")
    t = _F(t)
    sign, rho, printed = _PRINTED_ROOT[m]
    D = family_poly(m, t).D
    root = sign * rho(t) / 2
    printed_factor = X - root
    flipped_factor = X + root
    candidates = [printed_factor] if root == 0 else [printed_factor, flipped_factor]
    hits = [f for f in candidates if D(-f[0]) == 0]
    if len(hits) != 1:
        raise ArithmeticError(
            f"m={m}, t={t}: {len(hits)} of the two sign choices divide D (expected exactly one)"
        )
    factor = hits[0]
    if root == 0:
        pass
    elif factor == printed_factor:
        _ledger(TypoEntry(f"odd factor m={m}", printed, printed, "printed sign confirmed"))
    else:
        flipped = printed.replace("x-", "x#").replace("x+", "x-").replace("x#", "x+")
        _ledger(TypoEntry(f"odd factor m={m}", printed, flipped, "sign flipped by exact division"))
    return factor


# ---------------------------------------------------------------------------
# m = 3


def cubic_discriminant(F: Poly) -> Fraction:
    """18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2 for monic x^3 + ax^2 + bx + c."""
    if F.deg != 3 or not F.is_monic():
        raise ValueError("need a monic cubic")
    c, b, a = F[0], F[1], F[2]
    return 18 * a * b * c - 4 * a ** 3 * c + a * a * b * b - 4 * b ** 3 - 27 * c * c


@dataclass(frozen=True)
class D3Toolkit:
    """``D3 = (x^2 - w^2)^2 + 4v(x + w) = (x + w) * F``.

    The three predicates are written for the printed cubic
    ``x^3 - w x^2 - w^2 x + w^3 - 4v``; exact division shows the cofactor of
    D3 has ``+4v``, so the printed cubic at v is the cofactor of D3 at -v.
    """

    v: Fraction
    w: Fraction

    @property
    def D3(self) -> Poly:
        return family_D(3, self.v, self.w)

    @property
    def F(self) -> Poly:
        q, r = divmod(self.D3, X + self.w)
        if r:
            raise AssertionError("internal fault: x + w does not divide D3")
        return q

    def printed_F(self, v) -> Poly:
        w = self.w
        return Poly([w ** 3 - 4 * _F(v), -w * w, -w, 1])

    def a3_condition(self, t):
        """v with a cyclic (A3) cubic; returns (v, discriminant, is_square)."""
        t, w = _F(t), self.w
        v = 8 * t * t * w ** 3 / (27 * t * t + 1)
        F = self.printed_F(v)
        assert F == D3Toolkit(-v, w).F
        disc = cubic_discriminant(F)
        return v, disc, is_rational_square(disc)

    def root_split(self, r):
        """v for which F has the root r; returns (v, F, exhibited factorization)."""
        r, w = _F(r), self.w
        v = (w + r) * (w - r) ** 2 / 4
        F = self.printed_F(v)
        assert F == D3Toolkit(-v, w).F
        quad = Poly([-w * w - r * w + r * r, -(w - r), 1])
        lin = X - r
        return v, F, (lin, quad), lin * quad == F

    def full_split(self, s):
        """v for which F has three rational roots; returns (v, F, factorization)."""
        s, w = _F(s), self.w
        v = 8 * w ** 3 * (s * s - 1) ** 2 / (s * s + 3) ** 3
        F = self.printed_F(v)
        assert F == D3Toolkit(-v, w).F
        fac = factor_over_Q(F)
        return v, F, fac, fac.degrees() == [1, 1, 1]


def d3_toolkit(v, w) -> D3Toolkit:
    tk = D3Toolkit(_F(v), _F(w))
    printed = tk.printed_F(tk.v)
    if tk.F != printed:
        _ledger(
            TypoEntry(
                "D3 cofactor",
                "x^3-w*x^2-w^2*x-4*v+w^3",
                "x^3-w*x^2-w^2*x+4*v+w^3",
                "conditions applied through v -> -v",
            )
        )
    return tk


def d2_alt(u, k) -> Poly:
    """``(x^2 + u)^2 - k``, the m = 2 family with the norm as parameter."""
    u, k = _F(u), _F(k)
    if k == 0:
        raise DomainError("k = 0 makes D a square")
    return (X * X + u) ** 2 - k


# ---------------------------------------------------------------------------
# the two curves left open


@dataclass(frozen=True)
class PlaneCurve:
    name: str
    printed: str
    rhs: object  # t -> Fraction
    typo_suspect: bool = False
    note: str = ""

    def value(self, t) -> Fraction:
        return self.rhs(_F(t))

    def has_point_at(self, t) -> bool:
        """Is there a rational u with u^2 = rhs(t)?"""
        return is_rational_square(self.value(t))

    def is_singular_at(self, t) -> bool:
        return self.value(t) == 0


def unresolved_curves() -> tuple[PlaneCurve, PlaneCurve]:
    c10 = PlaneCurve(
        "m10_galois_D4",
        "u^2=(t-1)(4t^2-2x-1)(2t-1)(t^2-3t+1)t",
        lambda t: (t - 1) * (4 * t * t - 2 * t - 1) * (2 * t - 1) * (t * t - 3 * t + 1) * t,
        typo_suspect=True,
        note="printed '-2x-' read as '-2t-'",
    )
    c8 = PlaneCurve(
        "m8_three_factors",
        "u^2=(t^4-1)(t^2+2t-1)",
        lambda t: (t ** 4 - 1) * (t * t + 2 * t - 1),
    )
    return c10, c8


def residual_cubic(m: int, t) -> Poly:
    """D_m(x; t) divided by its linear factor, m in {5, 7, 9}."""
    return family_poly(m, t).D / odd_linear_factor(m, t)


def residual_cubic_split(m: int, t):
    """Factorization of the residual cubic when it has a rational root, else None."""
    fac = factor_over_Q(residual_cubic(m, t))
    return fac if fac.count() > 1 else None


def m5_split_t(s, printed: bool = False) -> Fraction:
    """A t at which the residual cubic of D_5(x; t) has a rational root.

    The printed value s^2(s+1)/(s+1) collapses to s^2, where the cubic stays
    irreducible (t = 4, 9, 25, ...).  At s^2(s+1)/(s-1) the cubic has the root
    (s^3 + s^2 - 3s - 1)/(2(s - 1)).  ``printed=True`` returns the literal s^2
    reading for comparison.
    """
    s = _F(s)
    if printed:
        return s * s
    if s in (0, 1, -1):
        raise DomainError(f"s = {s} gives t outside the m = 5 domain")
    _ledger(TypoEntry("m=5 split cubic", "t=s^2(s+1)/(s+1)", "t=s^2(s+1)/(s-1)", "found by exact factoring"))
    return s * s * (s + 1) / (s - 1)


def sample_regular(m: int, candidates=(2, 3, -1, 5, -2, 4, 7, Fraction(1, 3), -3)):
    """The first regular t values (in the given order) for family m >= 4."""
    out = []
    for t in candidates:
        if is_regular(m, t):
            out.append(_F(t))
    return out


def family_discriminant(m: int, t) -> Fraction:
    return discriminant(family_poly(m, t).D)
