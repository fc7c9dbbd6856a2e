"""Arithmetic in Q(c), c**2 = k, and in Q(c)[x].

Used to exhibit the conjugate splittings forced by a unit of nonsquare
norm, and as an independent reducibility test for quartics over a
quadratic field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable

from .exactnum import (
    Poly,
    factor_over_Q,
    is_rational_square,
    is_squarefree,
    poly_gcd,
    rational_sqrt,
    to_rat,
)

if TYPE_CHECKING:
    from .units import UnitCert


class NonFundamentalUnit(ArithmeticError):
    """Raised when a unit splits as d**2 = a + c, i.e. it is a proper power."""


@dataclass(frozen=True)
class QuadCtx:
    """The field Q(sqrt(k)) for a rational nonsquare k."""

    k: Fraction

    def __post_init__(self):
        k = to_rat(self.k)
        object.__setattr__(self, "k", k)
        if k == 0 or is_rational_square(k):
            raise ValueError(f"{k} is a square in Q; Q(sqrt({k})) is not a quadratic field")

    def __call__(self, p=0, q=0) -> "QNum":
        return QNum(self, to_rat(p), to_rat(q))

    @property
    def gen(self) -> "QNum":
        return QNum(self, Fraction(0), Fraction(1))


@dataclass(frozen=True)
class QNum:
    """``p + q*c`` with ``c**2 = ctx.k``."""

    ctx: QuadCtx
    p: Fraction
    q: Fraction

    def _coerce(self, other) -> "QNum":
        if isinstance(other, QNum):
            if other.ctx != self.ctx:
                raise ValueError("elements of different quadratic fields")
            return other
        return QNum(self.ctx, to_rat(other), Fraction(0))

    def __add__(self, other):
        o = self._coerce(other)
        return QNum(self.ctx, self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __neg__(self):
        return QNum(self.ctx, -self.p, -self.q)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        k = self.ctx.k
        return QNum(self.ctx, self.p * o.p + k * self.q * o.q, self.p * o.q + self.q * o.p)

    __rmul__ = __mul__

    def conj(self) -> "QNum":
        return QNum(self.ctx, self.p, -self.q)

    def norm(self) -> Fraction:
        return self.p * self.p - self.ctx.k * self.q * self.q

    def inverse(self) -> "QNum":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        c = self.conj()
        return QNum(self.ctx, c.p / n, c.q / n)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __bool__(self):
        return bool(self.p) or bool(self.q)

    def __eq__(self, other):
        if isinstance(other, QNum):
            return self.ctx == other.ctx and self.p == other.p and self.q == other.q
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and self.p == other
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.k, self.p, self.q))

    def is_rational(self) -> bool:
        return self.q == 0

    def __str__(self):
        if self.q == 0:
            return str(self.p)
        return f"{self.p} + {self.q}*sqrt({self.ctx.k})"

    __repr__ = __str__


class QPoly:
    """Immutable dense polynomial over Q(c); same normal form rules as Poly."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: QuadCtx, coeffs: Iterable = ()):
        cs = [c if isinstance(c, QNum) else ctx(c) for c in coeffs]
        for c in cs:
            if c.ctx != ctx:
                raise ValueError("coefficient from a different quadratic field")
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def from_poly(cls, ctx: QuadCtx, p: Poly) -> "QPoly":
        return cls(ctx, [ctx(c) for c in p.coeffs])

    @property
    def deg(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def lc(self) -> QNum:
        return self.coeffs[-1] if self.coeffs else self.ctx(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            other = QPoly.from_poly(self.ctx, other)
        if isinstance(other, QPoly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.k, self.coeffs))

    def _coerce(self, other) -> "QPoly":
        if isinstance(other, QPoly):
            if other.ctx != self.ctx:
                raise ValueError("polynomials over different quadratic fields")
            return other
        if isinstance(other, Poly):
            return QPoly.from_poly(self.ctx, other)
        return QPoly(self.ctx, [other])

    def __add__(self, other):
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return QPoly(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return QPoly(self.ctx)
        zero = self.ctx(0)
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = out[i + j] + x * y
        return QPoly(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = QPoly(self.ctx, [1])
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        return qpoly_divrem(self, self._coerce(other))

    def __mod__(self, other):
        return qpoly_divrem(self, self._coerce(other))[1]

    def __truediv__(self, other):
        q, r = qpoly_divrem(self, self._coerce(other))
        if r:
            raise ArithmeticError("inexact division in Q(c)[x]")
        return q

    def scale(self, c) -> "QPoly":
        return QPoly(self.ctx, [c * a for a in self.coeffs])

    def monic(self) -> "QPoly":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic associate")
        return self.scale(self.lc.inverse())

    def conj(self) -> "QPoly":
        return QPoly(self.ctx, [c.conj() for c in self.coeffs])

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def to_poly(self) -> Poly:
        if not self.is_rational():
            raise ValueError("polynomial has irrational coefficients")
        return Poly([c.p for c in self.coeffs])

    def __call__(self, x):
        acc = self.ctx(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if c.is_rational():
                cs = str(c.p)
            else:
                cs = f"({c})"
            if mono and c == 1:
                parts.append(mono)
            elif mono:
                parts.append(f"{cs}*{mono}")
            else:
                parts.append(cs)
        return " + ".join(parts)

    __repr__ = __str__


def qpoly_divrem(n: QPoly, d: QPoly) -> tuple[QPoly, QPoly]:
    if n.ctx != d.ctx:
        raise ValueError("polynomials over different quadratic fields")
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    ctx = n.ctx
    r = list(n.coeffs)
    dd = d.coeffs
    ld = len(dd) - 1
    if len(r) - 1 < ld:
        return QPoly(ctx), n
    inv = dd[-1].inverse()
    q = [ctx(0)] * (len(r) - ld)
    for i in range(len(r) - 1, ld - 1, -1):
        c = r[i]
        if c:
            c = c * inv
            q[i - ld] = c
            for j in range(ld + 1):
                r[i - ld + j] = r[i - ld + j] - c * dd[j]
    return QPoly(ctx, q), QPoly(ctx, r[:ld])


def qpoly_gcd(p: QPoly, q: QPoly) -> QPoly:
    """Monic gcd over Q(c) by the Euclidean algorithm."""
    if p.ctx != q.ctx:
        raise ValueError("polynomials over different quadratic fields")
    if not p and not q:
        raise ValueError("gcd of two zero polynomials is undefined")
    while q:
        p, q = q, qpoly_divrem(p, q)[1]
    return p.monic()


# ---------------------------------------------------------------------------
# splitting D from a unit


@dataclass(frozen=True)
class UnitSplit:
    """Factorization data read off a unit ``a + b*y`` of norm ``k = c**2``.

    In the rational branch (``k`` a square in Q) ``d_plus``, ``d_minus`` and
    the cofactors are Polys with ``b = d_plus*d_minus`` and
    ``D = cofactor_plus*cofactor_minus``.  Otherwise they are QPolys,
    ``d_minus`` is the conjugate of ``d_plus`` and so are the cofactors.
    """

    k_square: bool
    c: object  # Fraction in the rational branch, QNum otherwise
    d_plus: object
    d_minus: object
    cofactor_plus: object
    cofactor_minus: object
    s: int

    def product_b(self):
        return self.d_plus * self.d_minus

    def product_D(self):
        return self.cofactor_plus * self.cofactor_minus


def split_unit_factor(cert: "UnitCert") -> UnitSplit:
    """Split ``b`` and ``D`` using ``b**2 * D = (a - c)(a + c)``.

    ``d = gcd(b, a + c)`` is computed over Q when ``k`` is a square and over
    Q(c) otherwise; ``(a + c)/d**2`` and its partner are then exact.
    """
    a, b, D, k = cert.a, cert.b, cert.D, cert.k
    if a * a - D * b * b != Poly([k]):
        raise ValueError("certificate does not satisfy a^2 - D b^2 = k")
    m = cert.m
    c = rational_sqrt(k)
    if c is not None:
        d_plus = poly_gcd(b, a + c)
        d_minus = poly_gcd(b, a - c)
        if 2 * d_plus.deg == m or 2 * d_minus.deg == m:
            raise NonFundamentalUnit(
                "a + c or a - c is a square times a constant: the unit is not fundamental"
            )
        cof_plus = (a + c) / (d_plus * d_plus)
        cof_minus = (a - c) / (d_minus * d_minus)
        if d_plus * d_minus != b or cof_plus * cof_minus != D:
            raise ArithmeticError("rational split does not reassemble b and D")
        return UnitSplit(True, c, d_plus, d_minus, cof_plus, cof_minus, d_plus.deg)

    ctx = QuadCtx(k)
    cq = ctx.gen
    aq = QPoly.from_poly(ctx, a)
    bq = QPoly.from_poly(ctx, b)
    d = qpoly_gcd(bq, aq + cq)
    if 2 * d.deg == m:
        raise NonFundamentalUnit("a + c is a square times a constant: the unit is not fundamental")
    dbar = d.conj()
    cof_plus = (aq + cq) / (d * d)
    cof_minus = (aq - cq) / (dbar * dbar)
    if d * dbar != bq or cof_plus * cof_minus != QPoly.from_poly(ctx, D):
        raise ArithmeticError("conjugate split does not reassemble b and D")
    if cof_minus != cof_plus.conj():
        raise ArithmeticError("cofactors are not conjugate")
    return UnitSplit(False, cq, d, dbar, cof_plus, cof_minus, int(d.deg))


# ---------------------------------------------------------------------------
# reducibility over a quadratic field


def qsqrt(z: Fraction, ctx: QuadCtx) -> QNum | None:
    """A square root of the rational ``z`` inside Q(c), or None."""
    z = to_rat(z)
    r = rational_sqrt(z)
    if r is not None:
        return ctx(r)
    r = rational_sqrt(z / ctx.k)
    if r is not None:
        return ctx(0, r)
    return None


def factor_over_quadratic(q: Poly, ctx: QuadCtx) -> list[QPoly]:
    """Monic irreducible factors over Q(c) of a squarefree polynomial ``q``.

    Norm method: shift ``x -> x + s*c`` until the norm
    ``q(x + s c) q(x - s c)`` is squarefree, factor the norm over Q, and pull
    each rational factor back with a gcd over Q(c).
    """
    if not is_squarefree(q):
        raise ValueError("factor_over_quadratic needs a squarefree polynomial")
    qm = q.monic()
    for s in range(0, 50):
        shift = QPoly(ctx, [ctx(0, s), 1])
        q_s = _compose(qm, shift)
        norm = (q_s * q_s.conj()).to_poly()
        if is_squarefree(norm):
            break
    else:  # pragma: no cover
        raise ArithmeticError("no squarefree norm found")
    back = QPoly(ctx, [ctx(0, -s), 1])
    out = []
    for h, _ in factor_over_Q(norm).factors:
        g = qpoly_gcd(q_s, QPoly.from_poly(ctx, h))
        if g.deg >= 1:
            out.append(_compose_q(g, back).monic())
    prod = QPoly(ctx, [1])
    for g in out:
        prod = prod * g
    if prod != QPoly.from_poly(ctx, qm):
        raise ArithmeticError("norm-method factors do not reassemble the input")
    return sorted(out, key=lambda g: (g.deg, str(g)))


def _compose(p: Poly, inner: QPoly) -> QPoly:
    acc = QPoly(inner.ctx)
    for c in reversed(p.coeffs):
        acc = acc * inner + c
    return acc


def _compose_q(p: QPoly, inner: QPoly) -> QPoly:
    acc = QPoly(inner.ctx)
    for c in reversed(p.coeffs):
        acc = acc * inner + QPoly(inner.ctx, [c])
    return acc


def splits_into_quadratics(q: Poly, ctx: QuadCtx) -> tuple[QPoly, QPoly] | None:
    """For a quartic irreducible over Q: a factorization into two quadratics over Q(c), or None."""
    facs = factor_over_quadratic(q, ctx)
    if len(facs) == 1:
        return None
    if len(facs) == 2 and all(f.deg == 2 for f in facs):
        return facs[0], facs[1]
    # a quartic irreducible over Q cannot acquire a linear factor over a quadratic field
    raise ArithmeticError(f"unexpected splitting pattern {[f.deg for f in facs]}")
