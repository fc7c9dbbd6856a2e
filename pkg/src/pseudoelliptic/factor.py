"""Zassenhaus factorization of squarefree primitive integer polynomials.

Polynomials here are plain ``list[int]`` in ascending order.  Modular
polynomials are reduced to ``[0, p)`` and trimmed; the zero polynomial is
``[]``.  Nothing in this module is public beyond
:func:`factor_squarefree_int`; callers go through
:func:`pseudoelliptic.exactnum.factor_over_Q`.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import gcd, isqrt

_SMALL_PRIMES = [p for p in range(3, 400) if all(p % q for q in range(2, isqrt(p) + 1))]

# -- GF(p)[x] ----------------------------------------------------------------


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod(a, p):
    return _trim([c % p for c in a])


def _add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _trim(out)


def _sub(a, b, p):
    return _add(a, [(-c) % p for c in b], p)


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _mod(out, p)


def _divmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(r) - 1 < db:
        return [], _trim(r)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] % p
        if c:
            c = c * inv % p
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return _trim(q), _mod(r[:db], p)


def _monic(a, p):
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _gcd(a, b, p):
    while b:
        a, b = b, _divmod(a, b, p)[1]
    return _monic(a, p) if a else a


def _xgcd(a, b, p):
    r0, r1 = a, b
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return [c * inv % p for c in r0], [c * inv % p for c in s0], [c * inv % p for c in t0]


def _powmod(base, e, modulus, p):
    result = [1]
    base = _divmod(base, modulus, p)[1]
    while e:
        if e & 1:
            result = _divmod(_mul(result, base, p), modulus, p)[1]
        base = _divmod(_mul(base, base, p), modulus, p)[1]
        e >>= 1
    return result


def _deriv(a, p):
    return _mod([i * c for i, c in enumerate(a)][1:], p)


def _distinct_degree(f, p):
    """Yield (g, d): g is the product of all degree-d irreducible factors of monic squarefree f."""
    out = []
    h = [0, 1]
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, f, p)
        g = _gcd(f, _sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = _divmod(f, g, p)[0]
            h = _divmod(h, f, p)[1]
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _equal_degree(f, d, p, rng):
    """Cantor-Zassenhaus splitting of f (monic, all factors of degree d), p odd."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        g = _gcd(f, a, p)
        if 1 < len(g) < len(f):
            break
        b = _powmod(a, (p ** d - 1) // 2, f, p)
        g = _gcd(f, _sub(b, [1], p), p)
        if 1 < len(g) < len(f):
            break
    h = _divmod(f, g, p)[0]
    return _equal_degree(g, d, p, rng) + _equal_degree(_monic(h, p), d, p, rng)


def factor_mod_p(f, p, seed=0):
    """Monic irreducible factors of squarefree f over GF(p)."""
    f = _monic(_mod(f, p), p)
    rng = random.Random(seed)
    out = []
    for g, d in _distinct_degree(f, p):
        out.extend(_equal_degree(g, d, p, rng))
    return sorted(out)


# -- Hensel lifting -------------------------------------------------------------


def _zmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _symmetric(a, m):
    half = m // 2
    return _trim([c % m - m if c % m > half else c % m for c in a])


def _hensel_pair(f, g, h, p, e):
    """Lift f = g*h (mod p) to mod p**e; g monic, lc(h) = lc(f) mod p."""
    _, s, t = _xgcd(g, h, p)  # s*g + t*h = 1 mod p
    pk = p
    for _ in range(1, e):
        err = [(x - y) for x, y in zip(_pad(f, len(f)), _pad(_zmul(g, h), len(f)))]
        assert all(c % pk == 0 for c in err)
        err = _mod([c // pk for c in err], p)
        dg = _divmod(_mul(t, err, p), g, p)[1]
        dh = _divmod(_sub(err, _mul(h, dg, p), p), g, p)
        assert not dh[1], "Hensel step is not exact"
        dh = dh[0]
        g = _add_z(g, [c * pk for c in dg])
        h = _add_z(h, [c * pk for c in dh])
        pk *= p
        g = [c % pk for c in g]
        h = [c % pk for c in h]
    return g, h


def _pad(a, n):
    return list(a) + [0] * (n - len(a))


def _add_z(a, b):
    n = max(len(a), len(b))
    return _trim([x + y for x, y in zip(_pad(a, n), _pad(b, n))])


def _hensel_all(f, factors, p, e):
    """Lift monic modular factors so that lc(f) * prod(factors) = f mod p**e."""
    lifted = []
    rest = f
    mod = p ** e
    lcf = f[-1]
    for i, g in enumerate(factors[:-1]):
        others = [lcf % p]
        for h in factors[i + 1:]:
            others = _mul(others, h, p)
        g_l, rest = _hensel_pair([c % mod for c in rest], g, others, p, e)
        lifted.append(g_l)
    # remaining factor: rest = lcf * last (mod p^e)
    inv = pow(lcf, -1, mod)
    lifted.append([c * inv % mod for c in rest])
    return lifted


# -- recombination ----------------------------------------------------------------


def _zdivexact(a, b):
    """Exact division over Z, or None."""
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return None
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c % b[-1]:
            return None
        c //= b[-1]
        q[i - db] = c
        for j in range(db + 1):
            r[i - db + j] -= c * b[j]
    if any(r[:db]):
        return None
    return q


def _primitive(a):
    g = 0
    for c in a:
        g = gcd(g, c)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _coeff_bound(f):
    # Mignotte: any factor's coefficients are bounded by 2^n * ||f||_2
    n = len(f) - 1
    norm2 = isqrt(sum(c * c for c in f)) + 1
    return (2 ** n) * norm2


def _choose_prime(f):
    best = None
    tried = 0
    for p in _SMALL_PRIMES:
        if f[-1] % p == 0:
            continue
        fp = _mod(f, p)
        if len(_gcd(fp, _deriv(fp, p), p)) > 1:
            continue
        facs = factor_mod_p(f, p, seed=p)
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        tried += 1
        if tried >= 5 or len(facs) == 1:
            break
    if best is None:
        raise ArithmeticError("no prime of good reduction found")
    return best


def factor_squarefree_int(f):
    """Irreducible factors over Z of a squarefree primitive integer polynomial."""
    f = _primitive(_trim(list(f)))
    if len(f) - 1 <= 1:
        return [f]
    if f[0] == 0:
        rest = f[1:]
        return [[0, 1]] + (factor_squarefree_int(rest) if len(rest) > 1 else [])
    p, modular = _choose_prime(f)
    if len(modular) == 1:
        return [f]
    bound = 2 * abs(f[-1]) * _coeff_bound(f)
    e = 1
    while p ** e <= bound:
        e += 1
    mod = p ** e
    lifted = _hensel_all(f, modular, p, e)

    found = []
    remaining = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(remaining):
        hit = False
        for subset in combinations(remaining, size):
            lcf = f[-1]
            cand = [lcf % mod]
            for i in subset:
                cand = [c % mod for c in _zmul(cand, lifted[i])]
            cand = _primitive(_symmetric(cand, mod))
            quo = _zdivexact(f, cand)
            if quo is not None:
                found.append(cand)
                f = _primitive(quo)
                remaining = [i for i in remaining if i not in subset]
                hit = True
                break
        if not hit:
            size += 1
    found.append(f)
    return found
