"""Dense univariate polynomials over a Field: arithmetic, factorisation,
composition right-division, and Chebyshev polynomials.

The zero polynomial has the distinguished degree ``NEG_INF``, which
compares below every integer.  All randomness used by ``factor`` flows
from its explicit seed, so identical calls give identical factor splits;
the returned factor list is additionally sorted into a canonical order.
"""

from __future__ import annotations

import random

from . import _polyops as po
from ._expr import eval_poly_text
from .errors import (
    BothZero,
    DegreeMismatch,
    DivideByZero,
    FieldMismatch,
    NotMonic,
    ZeroInput,
)
from .field import Felt

NEG_INF = float("-inf")


class Poly:
    """Dense univariate polynomial, coefficients low-to-high, canonical."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        """Build from an iterable of Felt / int / raw representations."""
        reps = []
        for c in coeffs:
            if isinstance(c, Felt):
                if c.field != field:
                    raise FieldMismatch("coefficient from a different field")
                reps.append(c.rep)
            elif isinstance(c, int):
                reps.append(field.from_int(c))
            else:
                reps.append(c)
        self.field = field
        self.coeffs = tuple(po.trim(field, reps))

    @classmethod
    def _raw(cls, field, reps):
        self = object.__new__(cls)
        self.field = field
        self.coeffs = tuple(po.trim(field, list(reps)))
        return self

    @classmethod
    def zero(cls, field):
        return cls._raw(field, [])

    @classmethod
    def one(cls, field):
        return cls._raw(field, [field.one()])

    @classmethod
    def x(cls, field):
        return cls._raw(field, [field.zero(), field.one()])

    @classmethod
    def monomial(cls, field, e, c=1):
        rep = field.from_int(c) if isinstance(c, int) else getattr(c, "rep", c)
        if rep == field.zero():
            return cls.zero(field)
        return cls._raw(field, [field.zero()] * e + [rep])

    @classmethod
    def constant(cls, field, c):
        rep = field.from_int(c) if isinstance(c, int) else getattr(c, "rep", c)
        return cls._raw(field, [rep])

    @classmethod
    def parse(cls, field, text, var="x"):
        return cls._raw(field, eval_poly_text(field, text, var))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def lc(self):
        if not self.coeffs:
            raise ZeroInput("zero polynomial has no leading coefficient")
        return Felt(self.field, self.coeffs[-1])

    def coeff(self, e):
        if 0 <= e < len(self.coeffs):
            return Felt(self.field, self.coeffs[e])
        return Felt(self.field, self.field.zero())

    def monic(self):
        return Poly._raw(self.field, po.monic(self.field, list(self.coeffs)))

    def scale(self, c):
        rep = self.field.from_int(c) if isinstance(c, int) else getattr(c, "rep", c)
        return Poly._raw(self.field, po.scale(self.field, list(self.coeffs), rep))

    def derivative(self):
        return Poly._raw(self.field, po.derivative(self.field, list(self.coeffs)))

    def evaluate(self, x):
        rep = self.field.from_int(x) if isinstance(x, int) else getattr(x, "rep", x)
        return Felt(self.field, po.evaluate(self.field, list(self.coeffs), rep))

    def shift_constant(self, c):
        """self + c for a scalar c."""
        rep = self.field.from_int(c) if isinstance(c, int) else getattr(c, "rep", c)
        reps = list(self.coeffs) or [self.field.zero()]
        reps[0] = self.field.add(reps[0], rep)
        return Poly._raw(self.field, reps)

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError("expected a Poly")
        if other.field != self.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        return Poly._raw(self.field, po.add(self.field, list(self.coeffs), list(other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return Poly._raw(self.field, po.sub(self.field, list(self.coeffs), list(other.coeffs)))

    def __neg__(self):
        return Poly._raw(self.field, po.neg(self.field, list(self.coeffs)))

    def __mul__(self, other):
        self._check(other)
        return Poly._raw(self.field, po.mul(self.field, list(self.coeffs), list(other.coeffs)))

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise DivideByZero("polynomial division by zero")
        q, r = po.divmod_(self.field, list(self.coeffs), list(other.coeffs))
        return Poly._raw(self.field, q), Poly._raw(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return other.field == self.field and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def key(self):
        """Canonical sort key: (degree, coefficient keys low-to-high)."""
        K = self.field
        return (len(self.coeffs), tuple(K.elt_key(c) for c in self.coeffs))

    def __str__(self):
        return po.poly_str(self.field, list(self.coeffs), "x")

    def __repr__(self):
        return str(self)


def gcd(f, g):
    """Monic greatest common divisor; BothZero if both arguments vanish."""
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    return Poly._raw(f.field, po.gcd(f.field, list(f.coeffs), list(g.coeffs)))


def compose(g, h):
    """g(h), by Horner's rule on the coefficients of g."""
    g._check(h)
    acc = Poly.zero(g.field)
    for c in reversed(g.coeffs):
        acc = acc * h
        acc = acc.shift_constant(Felt(g.field, c))
    return acc


def right_divide(f, h):
    """The unique g with f = g(h), or None if no such g exists.

    Divide and conquer on h-adic digits: f = Q*h^t + R forces the top and
    bottom halves of g independently.  Requires deg h >= 1 and
    deg h | deg f.
    """
    if h.degree is NEG_INF or h.degree < 1:
        raise DegreeMismatch("inner polynomial must have degree >= 1")
    if f.is_zero():
        return Poly.zero(f.field)
    if f.degree % h.degree != 0:
        raise DegreeMismatch("deg h does not divide deg f")
    return _right_divide_rec(f, h)


def _right_divide_rec(f, h):
    if f.degree is NEG_INF or f.degree <= 0:
        return f
    if f.degree < h.degree:
        return None
    r = f.degree // h.degree
    t = (r + 1) // 2
    v = h**t
    q, rem = divmod(f, v)
    g0 = _right_divide_rec(rem, h)
    if g0 is None:
        return None
    g1 = _right_divide_rec(q, h)
    if g1 is None:
        return None
    return g1 * Poly.monomial(f.field, t) + g0


def is_irreducible(f):
    if f.is_zero():
        return False
    return po.is_irreducible(f.field, list(f.coeffs))


def _pth_root_poly(f):
    """For f with zero derivative, the g with g**p = f."""
    K = f.field
    p = K.p
    out = []
    for e in range(0, len(f.coeffs), p):
        out.append(K.pth_root_rep(f.coeffs[e]))
    return Poly._raw(K, out)


def _squarefree_parts(f):
    """Monic f as a list of (squarefree monic part, multiplicity).

    Characteristic-p variant: factors whose multiplicity is divisible by p
    hide in gcd(f, f') with zero derivative and are recovered through a
    p-th root of the coefficient vector.
    """
    K = f.field
    p = K.p
    out = {}
    if f.degree == 0:
        return []
    fp = f.derivative()
    if fp.is_zero():
        for part, mult in _squarefree_parts(_pth_root_poly(f)):
            out[part] = out.get(part, 0) + mult * p
        return sorted(out.items(), key=lambda pm: pm[0].key())
    t = gcd(f, fp)
    v = f // t
    i = 0
    while v.degree > 0:
        i += 1
        w = gcd(t, v)
        z = v // w
        if z.degree > 0:
            out[z] = out.get(z, 0) + i
        v = w
        t = t // w
    if t.degree > 0:
        for part, mult in _squarefree_parts(_pth_root_poly(t)):
            out[part] = out.get(part, 0) + mult * p
    return sorted(out.items(), key=lambda pm: pm[0].key())


def _pow_q_mod(h, q, m):
    return Poly._raw(m.field, po.powmod(m.field, list(h.coeffs), q, list(m.coeffs)))


def _distinct_degree(v):
    """Squarefree monic v as a list of (product of degree-d irreducibles, d)."""
    K = v.field
    q = K.order
    x = Poly.x(K)
    out = []
    h = x
    d = 0
    while v.degree > 0 and v.degree >= 2 * (d + 1):
        d += 1
        h = _pow_q_mod(h, q, v)
        g = gcd(h - x, v) if not (h - x).is_zero() else v
        if g.degree > 0:
            out.append((g, d))
            v = v // g
            if v.degree > 0:
                h = h % v
    if v.degree > 0:
        out.append((v, v.degree))
    return out


def _equal_degree_split(u, d, rng):
    """All monic irreducible factors of u (a product of degree-d primes)."""
    K = u.field
    if u.degree == d:
        return [u]
    q = K.order
    n = u.degree
    while True:
        a = Poly._raw(K, [K.rand_rep(rng) for _ in range(n)])
        if a.degree is NEG_INF or a.degree < 1:
            continue
        if K.p == 2:
            t = a
            tr = a
            for _ in range(K.degree_over_prime * d - 1):
                t = (t * t) % u
                tr = tr + t
            g_candidate = tr % u
        else:
            b = _pow_q_mod(a, (q**d - 1) // 2, u)
            g_candidate = b - Poly.one(K)
        if g_candidate.is_zero():
            continue
        g = gcd(g_candidate, u)
        if 0 < g.degree < n:
            return _equal_degree_split(g, d, rng) + _equal_degree_split(u // g, d, rng)


def factor(f, seed=0):
    """Factor f into monic irreducibles.

    Returns ``(parts, lc)`` where parts is a list of (irreducible Poly,
    multiplicity) sorted by (degree, coefficient order) and lc is the
    leading coefficient, so that lc * prod(g**m) == f.
    """
    if f.is_zero():
        raise ZeroInput("cannot factor the zero polynomial")
    K = f.field
    lc = f.lc()
    fm = f.monic()
    rng = random.Random(f"factor:{K.order}:{f.degree}:{seed}")
    parts = {}
    for sq, mult in _squarefree_parts(fm):
        for prod, d in _distinct_degree(sq):
            for irr in _equal_degree_split(prod, d, rng):
                parts[irr] = parts.get(irr, 0) + mult
    ordered = sorted(parts.items(), key=lambda pm: pm[0].key())
    return ordered, lc


def chebyshev(i, field):
    """The i-th Chebyshev polynomial over ``field`` by the 2x recurrence."""
    if i < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    t0 = Poly.one(field)
    if i == 0:
        return t0
    t1 = Poly.x(field)
    if i == 1:
        return t1
    two_x = Poly._raw(field, [field.zero(), field.from_int(2)])
    for _ in range(i - 1):
        t0, t1 = t1, two_x * t1 - t0
    return t1


def require_monic(f, what="input"):
    if not f.is_monic():
        raise NotMonic(f"{what} must be monic")
    return f
