"""Exact rational numbers and dense univariate polynomials over Q.

Rationals are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  A :class:`Poly` stores its coefficients as a tuple
of Fractions, ``coeffs[i]`` being the coefficient of ``x**i``; the tuple
never carries a zero leading coefficient, so the zero polynomial is ``()``.

The textual syntax used for input and output everywhere is a signed sum of
monomials in ``x`` with rational coefficients, e.g.
``"x^4+4*x^3-6*x^2+4*x+1"`` or ``"1/12*x+1/4"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as igcd, isqrt
from typing import Iterable, Sequence, Union

Rat = Fraction

#: degree of the zero polynomial
NEG_INF = float("-inf")

Coercible = Union["Poly", Fraction, int, str]


def to_rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def rat_str(q: Fraction) -> str:
    """Render as ``"num/den"`` (or just ``"num"`` when integral)."""
    return str(q)


def is_rational_square(q: Fraction) -> bool:
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of ``q`` in Q, or None."""
    if not is_rational_square(q):
        return None
    return Fraction(isqrt(q.numerator), isqrt(q.denominator))


def squarefree_part(q: Fraction) -> Fraction:
    """The representative of ``q`` modulo nonzero rational squares.

    Returns a squarefree integer ``s`` (with the sign of ``q``) such that
    ``q / s`` is a rational square.
    """
    if q == 0:
        raise ValueError("zero has no square class")
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            out *= p
        p += 1 if p == 2 else 2
    return Fraction(sign * out * n)


def decimal_digits(n: int) -> int:
    return len(str(abs(n)))


class Poly:
    """Immutable dense polynomial in ``x`` with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, c, n: int) -> "Poly":
        return cls([0] * n + [c])

    @classmethod
    def parse(cls, text: str) -> "Poly":
        return parse_poly(text)

    @classmethod
    def coerce(cls, value: Coercible) -> "Poly":
        if isinstance(value, Poly):
            return value
        if isinstance(value, str):
            return parse_poly(value)
        return cls([value])

    # -- basic properties ---------------------------------------------
    @property
    def deg(self):
        """Degree; ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    # -- ring operations ----------------------------------------------
    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result, base = Poly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        return poly_divrem(self, _as_poly(other))

    def __floordiv__(self, other):
        return poly_divrem(self, _as_poly(other))[0]

    def __mod__(self, other):
        return poly_divrem(self, _as_poly(other))[1]

    def __truediv__(self, other):
        """Exact division; raises ArithmeticError if there is a remainder."""
        other = _as_poly(other)
        q, r = poly_divrem(self, other)
        if r:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q

    def scale(self, c) -> "Poly":
        c = to_rat(c)
        return Poly([c * a for a in self.coeffs])

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic associate")
        return self.scale(1 / self.lc)

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def integral(self) -> "Poly":
        """Antiderivative with zero constant term."""
        return Poly([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def content_primitive(self) -> tuple[Fraction, list[int]]:
        """Split into a rational content and a primitive integer coefficient list.

        The primitive part has a positive leading coefficient.
        """
        if not self.coeffs:
            raise ValueError("zero polynomial")
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // igcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = igcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), [v // g for v in ints]

    def max_digits(self) -> int:
        """Largest number of decimal digits among all numerators and denominators."""
        best = 0
        for c in self.coeffs:
            best = max(best, decimal_digits(c.numerator), decimal_digits(c.denominator))
        return best

    def sort_key(self):
        """Degree first, then coefficients from the top down."""
        return (len(self.coeffs), tuple(reversed(self.coeffs)))


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly([value])
    return NotImplemented


X = Poly.x()


def poly_divrem(n: Poly, d: Poly) -> tuple[Poly, Poly]:
    """Euclidean division ``n = q*d + r`` with ``deg r < deg d``."""
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(n.coeffs)
    dd = d.coeffs
    ld = len(dd) - 1
    inv = 1 / dd[-1]
    if len(r) - 1 < ld:
        return Poly(), n
    q = [Fraction(0)] * (len(r) - ld)
    for i in range(len(r) - 1, ld - 1, -1):
        c = r[i]
        if c:
            c *= inv
            q[i - ld] = c
            for j in range(ld + 1):
                r[i - ld + j] -= c * dd[j]
    return Poly(q), Poly(r[:ld])


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd of ``p`` and ``q``."""
    if not p and not q:
        raise ValueError("gcd of two zero polynomials is undefined")
    while q:
        p, q = q, poly_divrem(p, q)[1]
    return p.monic()


def poly_xgcd(p: Poly, q: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*p + t*q = g`` and ``g`` monic."""
    if not p and not q:
        raise ValueError("gcd of two zero polynomials is undefined")
    r0, r1 = p, q
    s0, s1 = Poly([1]), Poly()
    t0, t1 = Poly(), Poly([1])
    while r1:
        quo, rem = poly_divrem(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    c = 1 / r0.lc
    return r0.scale(c), s0.scale(c), t0.scale(c)


def is_squarefree(D: Poly) -> bool:
    if not D:
        raise ValueError("zero polynomial")
    return poly_gcd(D, D.derivative()).deg <= 0


def polypart_sqrt(D: Poly) -> tuple[Poly, Poly]:
    """Split a monic even-degree ``D`` as ``A**2 + R``.

    ``A`` is the polynomial part of the Laurent expansion of ``sqrt(D)`` at
    infinity: monic of degree ``g+1``, so that ``deg R <= g``.  Its
    coefficients are solved from the top down, one linear equation each.
    """
    n = D.deg
    if not D or n % 2:
        raise ValueError(f"need an even-degree polynomial, got degree {n}")
    if not D.is_monic():
        raise ValueError("D must be monic")
    h = n // 2
    a = [Fraction(0)] * (h + 1)
    a[h] = Fraction(1)
    # coefficient of x^(h+k) in A^2 involves a[h-j] a[k+j]; solve for a[k] top-down
    for k in range(h - 1, -1, -1):
        s = sum(a[i] * a[h + k - i] for i in range(k + 1, h))
        a[k] = (D[h + k] - s) / 2
    A = Poly(a)
    R = D - A * A
    assert R.deg <= h - 1, "polynomial part did not cancel the top half"
    return A, R


def resultant(p: Poly, q: Poly) -> Fraction:
    """Resultant via the Euclidean remainder sequence."""
    if not p or not q:
        return Fraction(0)
    m, n = p.deg, q.deg
    if m == 0:
        return p.lc ** n
    if n == 0:
        return q.lc ** m
    res = Fraction(1)
    a, b = p, q
    while True:
        da, db = a.deg, b.deg
        if db == 0:
            return res * b.lc ** da
        r = a % b
        if not r:
            return Fraction(0)
        dr = r.deg
        if (da * db) % 2:
            res = -res
        res *= b.lc ** (da - dr)
        a, b = b, r


def discriminant(p: Poly) -> Fraction:
    """``(-1)**(n(n-1)/2) * res(p, p') / lc(p)``."""
    n = p.deg
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.lc


def rational_roots(p: Poly) -> list[Fraction]:
    """All distinct rational roots, sorted (read off the linear factors)."""
    if not p:
        raise ValueError("zero polynomial")
    if p.deg < 1:
        return []
    return sorted(-f[0] for f, _ in factor_over_Q(p).factors if f.deg == 1)


# ---------------------------------------------------------------------------
# text syntax

_TERM = re.compile(
    r"""\s*([+-])?\s*
        (?:(\d+(?:/\d+)?)\s*(\*)?\s*)?   # coefficient
        (x(?:\s*\^\s*(\d+))?)?           # power of x
        \s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> Poly:
    """Parse ``"x^4+4*x^3-6*x^2+4*x+1"``-style input.

    Repeated powers are summed.  Raises ValueError on anything else.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, num, star, xpart, exp = m.groups()
        if m.end() == pos or (num is None and xpart is None):
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r} at position {pos}")
        if star and xpart is None:
            raise ValueError(f"dangling '*' in {text!r}")
        c = Fraction(num) if num is not None else Fraction(1)
        if sign == "-":
            c = -c
        n = 0 if xpart is None else (int(exp) if exp is not None else 1)
        coeffs[n] = coeffs.get(n, Fraction(0)) + c
        pos = m.end()
        first = False
    top = max(coeffs)
    return Poly([coeffs.get(i, 0) for i in range(top + 1)])


def format_poly(p: Poly, var: str = "x") -> str:
    """Inverse of :func:`parse_poly`, descending powers."""
    if not p:
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


# ---------------------------------------------------------------------------
# factorization


@dataclass(frozen=True)
class Factorization:
    """``unit * prod(f**e for f, e in factors)``, factors monic irreducible over Q."""

    unit: Fraction
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        out = Poly([self.unit])
        for f, e in self.factors:
            out = out * f ** e
        return out

    def count(self, with_multiplicity: bool = False) -> int:
        if with_multiplicity:
            return sum(e for _, e in self.factors)
        return len(self.factors)

    def degrees(self) -> list[int]:
        return sorted(f.deg for f, e in self.factors for _ in range(e))

    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def __str__(self):
        parts = [str(self.unit)] if self.unit != 1 or not self.factors else []
        for f, e in self.factors:
            parts.append(f"({f})" + (f"^{e}" if e > 1 else ""))
        return "*".join(parts)


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm on the monic associate; returns [(squarefree factor, multiplicity)]."""
    f = p.monic()
    if f.deg <= 0:
        return []
    out = []
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f / a
    c = fp / a
    d = c - b.derivative()
    i = 1
    while b.deg > 0:
        a = poly_gcd(b, d)
        if a.deg > 0:
            out.append((a, i))
        b = b / a
        c = d / a
        d = c - b.derivative()
        i += 1
    return out


def factor_over_Q(p: Poly) -> Factorization:
    """Complete factorization into monic irreducibles over Q.

    Squarefree decomposition, then Zassenhaus (modular factorization,
    Hensel lifting, recombination) on each squarefree part.  Factors are
    ordered by degree and then by coefficients from the top down.
    """
    from .factor import factor_squarefree_int

    if not p:
        raise ValueError("cannot factor the zero polynomial")
    unit = p.lc
    found: list[tuple[Poly, int]] = []
    for part, mult in squarefree_decomposition(p):
        _, ints = part.content_primitive()
        for g in factor_squarefree_int(ints):
            found.append((Poly(g).monic(), mult))
    found.sort(key=lambda fe: (fe[0].sort_key(), fe[1]))
    return Factorization(unit, tuple(found))


def poly_from_roots(roots: Sequence) -> Poly:
    out = Poly([1])
    for r in roots:
        out = out * Poly([-to_rat(r), 1])
    return out
