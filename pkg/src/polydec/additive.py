"""The composition ring of additive polynomials over a finite field.

An additive polynomial has nonzero terms only at p-power exponents and is
stored as the coefficient vector ``a[i]`` of ``x**(p**i)``.  Under addition
and composition these form a left-Euclidean ring: right division always
exists, the meet (greatest common right composition factor) coincides with
the ordinary multiplicative gcd, and the join (least common left
composition multiple) comes out of the extended Euclidean scheme.
"""

from __future__ import annotations

from . import upoly
from .errors import (
    BothZero,
    DependentBasis,
    DivideByZero,
    FieldMismatch,
    NotAdditive,
    NotCoprime,
    NotMonic,
    SearchBoundExceeded,
    ZeroInput,
)
from .field import Felt
from .upoly import Poly


class AdditivePoly:
    """Additive polynomial sum(a[i] * x**(p**i)); a[-1] != 0 unless zero."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
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
        z = field.zero()
        while reps and reps[-1] == z:
            reps.pop()
        self.field = field
        self.coeffs = tuple(reps)

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def x(cls, field):
        return cls(field, [1])

    @classmethod
    def monomial(cls, field, i, c=1):
        """c * x**(p**i)."""
        return cls(field, [0] * i + [c])

    @classmethod
    def p_linear(cls, a):
        """x**p - a*x for a Felt a."""
        return cls(a.field, [-a, a.field.felt(1)])

    @classmethod
    def from_poly(cls, f):
        """Convert a Poly; rejects nonzero coefficients off p-power exponents."""
        K = f.field
        p = K.p
        z = K.zero()
        out = []
        power, idx = 1, 0
        for e, c in enumerate(f.coeffs):
            if c == z:
                continue
            while power < e:
                power *= p
                idx += 1
            if power != e:
                raise NotAdditive(f"term of exponent {e} is not a p-power")
            while len(out) <= idx:
                out.append(z)
            out[idx] = c
        return cls(K, out)

    @classmethod
    def parse(cls, field, text, var="x"):
        return cls.from_poly(Poly.parse(field, text, var))

    def to_poly(self):
        K = self.field
        p = K.p
        z = K.zero()
        if not self.coeffs:
            return Poly.zero(K)
        out = [z] * (p ** (len(self.coeffs) - 1) + 1)
        power = 1
        for c in self.coeffs:
            out[power] = c
            power *= p
        return Poly(K, out)

    @property
    def expn(self):
        """Exponent: degree is p**expn; the zero polynomial gets -1."""
        return len(self.coeffs) - 1

    @property
    def degree(self):
        if not self.coeffs:
            return upoly.NEG_INF
        return self.field.p ** self.expn

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def is_simple(self):
        """Monic with nonzero linear coefficient (squarefree kernel)."""
        return self.is_monic() and self.coeffs[0] != self.field.zero()

    def lc(self):
        if not self.coeffs:
            raise ZeroInput("zero polynomial has no leading coefficient")
        return Felt(self.field, self.coeffs[-1])

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return Felt(self.field, self.coeffs[i])
        return Felt(self.field, self.field.zero())

    def monic(self):
        if self.is_zero():
            raise ZeroInput("cannot normalise the zero polynomial")
        if self.is_monic():
            return self
        c = self.field.inv(self.coeffs[-1])
        return self.scale(Felt(self.field, c))

    def scale(self, c):
        rep = self.field.from_int(c) if isinstance(c, int) else getattr(c, "rep", c)
        K = self.field
        return AdditivePoly(K, [K.mul(a, rep) for a in self.coeffs])

    def evaluate(self, x):
        K = self.field
        rep = K.from_int(x) if isinstance(x, int) else getattr(x, "rep", x)
        acc = K.zero()
        power = rep
        for i, a in enumerate(self.coeffs):
            if i:
                power = K.pow_(power, K.p)
            if a != K.zero():
                acc = K.add(acc, K.mul(a, power))
        return Felt(K, acc)

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        K = self.field
        z = K.zero()
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return AdditivePoly(K, [K.add(x, y) for x, y in zip(a, b)])

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        K = self.field
        z = K.zero()
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return AdditivePoly(K, [K.sub(x, y) for x, y in zip(a, b)])

    def __neg__(self):
        K = self.field
        return AdditivePoly(K, [K.neg(x) for x in self.coeffs])

    def _check(self, other):
        if not isinstance(other, AdditivePoly):
            raise TypeError("expected an AdditivePoly")
        if other.field != self.field:
            raise FieldMismatch("additive polynomials over different fields")

    def __eq__(self, other):
        if not isinstance(other, AdditivePoly):
            return NotImplemented
        return other.field == self.field and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def key(self):
        K = self.field
        return (len(self.coeffs), tuple(K.elt_key(c) for c in self.coeffs))

    def __str__(self):
        return str(self.to_poly())

    def __repr__(self):
        return str(self)


def add_compose(f, g):
    """f(g); exponents add.  Coefficients: c[i+j] += a[i] * b[j]**(p**i)."""
    f._check(g)
    K = f.field
    if f.is_zero() or g.is_zero():
        return AdditivePoly.zero(K)
    z = K.zero()
    out = [z] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == z:
            continue
        for j, b in enumerate(g.coeffs):
            if b == z:
                continue
            out[i + j] = K.add(out[i + j], K.mul(a, K.frobenius_rep(b, i)))
    return AdditivePoly(K, out)


def add_rdivrem(f, g):
    """Q, R with f = Q(g) + R and expn R < expn g (right division)."""
    f._check(g)
    if g.is_zero():
        raise DivideByZero("right division by the zero additive polynomial")
    K = f.field
    z = K.zero()
    rem = f
    q = [z] * max(0, len(f.coeffs) - len(g.coeffs) + 1)
    b = g.coeffs[-1]
    rho = g.expn
    while not rem.is_zero() and rem.expn >= rho:
        nu = rem.expn
        c = K.mul(rem.coeffs[-1], K.inv(K.frobenius_rep(b, nu - rho)))
        q[nu - rho] = c
        rem = rem - add_compose(AdditivePoly.monomial(K, nu - rho, Felt(K, c)), g)
    return AdditivePoly(K, q), rem


def right_divides(g, f):
    """True when g is a right composition factor of f."""
    return add_rdivrem(f, g)[1].is_zero()


def right_quotient(f, g):
    """f with g divided off on the right, or None if g does not divide."""
    q, r = add_rdivrem(f, g)
    return q if r.is_zero() else None


def euclid_scheme(f, g):
    """Remainder sequence f1, f2, ..., fn with fn | f(n-1), fn != 0."""
    seq = [f, g] if f.expn >= g.expn else [g, f]
    while True:
        r = add_rdivrem(seq[-2], seq[-1])[1]
        if r.is_zero():
            return seq
        seq.append(r)


def meet(f, g):
    """Greatest common right composition factor, monic.

    Coincides with the ordinary multiplicative gcd because compositional
    and multiplicative remainders agree for additive polynomials.
    """
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise BothZero("meet(0, 0) is undefined")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    return AdditivePoly.from_poly(upoly.gcd(f.to_poly(), g.to_poly()))


def join(f, g):
    """Least common left composition multiple, monic.

    Built from the Euclidean scheme f1..fn by the alternation
    J(n-1) = monic(f(n-1)), J(i) = monic((J(i+1) /o f(i+2)) o f(i)).
    """
    f._check(g)
    if f.is_zero() or g.is_zero():
        raise ZeroInput("join requires nonzero inputs")
    seq = euclid_scheme(f, g)
    n = len(seq)
    j = seq[n - 2].monic()
    for i in range(n - 3, -1, -1):
        w = right_quotient(j, seq[i + 2])
        if w is None:
            raise AssertionError("Euclidean scheme invariant violated")
        j = add_compose(w, seq[i]).monic()
    return j


def transform(g, f):
    """The transformation of f by g: (join(g, f) right-divided by g)."""
    g._check(f)
    if not (g.is_monic() and f.is_monic()):
        raise NotMonic("transformation requires monic inputs")
    q = right_quotient(join(g, f), g)
    if q is None:
        raise AssertionError("join must be right-divisible by its argument")
    return q


def _monic_candidates(field, expn):
    """All monic additive polynomials of the given exponent, in key order."""
    import itertools

    if expn == 0:
        yield AdditivePoly.x(field)
        return
    elts = list(field.elements())
    for combo in itertools.product(elts, repeat=expn):
        yield AdditivePoly(field, list(combo) + [field.one()])


def _scalar_twist(v, d):
    """transform(u, g) for u with residue d*w mod g, given v = transform(w, g):
    coefficient i picks up d**(p**nu - p**i)."""
    K = v.field
    nu = v.expn
    out = []
    for i, c in enumerate(v.coeffs):
        out.append(K.mul(c, K.pow_(d, K.p**nu - K.p**i)))
    return AdditivePoly(K, out)


def is_similar(f, g, expn_bound=3, order_bound=32):
    """Bounded similarity test with witness.

    Returns ``(flag, witness)`` where the witness u is monic with
    meet(u, g) = x and transform(u, g) = f.  Transformation by u depends
    only on the residue of u mod g, so the search covers every residue:
    monic w of exponent below expn g (plus w = x) times a leading scalar,
    realised as the monic witness g + d*w when the scalar d is not 1.
    """
    f._check(g)
    if not (f.is_monic() and g.is_monic()):
        raise NotMonic("similarity requires monic inputs")
    if f.expn != g.expn:
        return False, None
    if f.expn > expn_bound or f.field.order > order_bound:
        raise SearchBoundExceeded(
            f"similarity search bounded to expn <= {expn_bound}, order <= {order_bound}"
        )
    K = f.field
    xpoly = AdditivePoly.x(K)
    one = K.one()
    units = [r for r in K.elements() if r != K.zero()]
    for k in range(g.expn):
        for w in _monic_candidates(K, k):
            if meet(w, g) != xpoly:
                continue
            t = transform(w, g)
            for d in units:
                cand = t if d == one else _scalar_twist(t, d)
                if cand == f:
                    witness = w if d == one else g + w.scale(Felt(K, d))
                    return True, witness
    return False, None


def transmutable(f, g, seed=0):
    """All transmutations of f by g: pairs (gbar, fbar) with
    fbar similar to f, f = transform(g, fbar), gbar = transform(fbar, g),
    hence f(g) = gbar(fbar).  f must be monic indecomposable, g monic."""
    from . import addecomp
    from .errors import NotIndecomposable

    f._check(g)
    if not (f.is_monic() and g.is_monic()):
        raise NotMonic("transmutation requires monic inputs")
    if not addecomp.is_indecomposable(f, seed):
        raise NotIndecomposable("first argument must be indecomposable")
    fg = add_compose(f, g)
    out = []
    for fbar in addecomp.indec_right_factors(fg, seed):
        if fbar.expn != f.expn:
            continue
        gbar = right_quotient(fg, fbar)
        if gbar is not None and gbar == transform(fbar, g):
            out.append((gbar, fbar))
    out.sort(key=lambda pair: pair[1].key())
    return out


def transform_composition(h, dec):
    """Transform a complete decomposition of g into one of transform(h, g).

    h must be monic, indecomposable, and composition-coprime with g; the
    i-th new factor is transform(h_i, g_i) with h_1 = h and
    h_i = transform(g_(i-1) o ... o g_1, h).
    """
    from .addecomp import Decomposition

    g = dec.target
    h._check(g)
    if not h.is_monic():
        raise NotMonic("transformation requires a monic input")
    if not dec.complete:
        raise ValueError("decomposition must be complete")
    if meet(h, g) != AdditivePoly.x(h.field):
        raise NotCoprime("h must be composition-coprime with the target")
    inner_first = list(reversed(dec.factors))
    new_inner_first = []
    comp = AdditivePoly.x(h.field)
    for i, gi in enumerate(inner_first):
        hi = h if i == 0 else transform(comp, h)
        new_inner_first.append(transform(hi, gi))
        comp = add_compose(gi, comp)
    return Decomposition(
        transform(h, g), tuple(reversed(new_inner_first)), complete=True
    )


class KernelBasis:
    """Field elements linearly independent over the prime subfield."""

    __slots__ = ("field", "elements")

    def __init__(self, elements, check_bound=6):
        elements = tuple(elements)
        if not elements:
            raise DependentBasis("kernel basis must be nonempty")
        field = elements[0].field
        for e in elements:
            if e.field != field:
                raise FieldMismatch("basis elements from different fields")
        if len(elements) > check_bound:
            raise SearchBoundExceeded(
                f"independence check bounded to {check_bound} basis elements"
            )
        self.field = field
        self.elements = elements
        self._check_independent()

    def _check_independent(self):
        import itertools

        K = self.field
        zero = K.zero()
        reps = [e.rep for e in self.elements]
        for combo in itertools.product(range(K.p), repeat=len(reps)):
            if not any(combo):
                continue
            acc = zero
            for c, r in zip(combo, reps):
                if c:
                    acc = K.add(acc, K.mul(K.from_int(c), r))
            if acc == zero:
                raise DependentBasis("basis elements are Z_p-dependent")

    def __len__(self):
        return len(self.elements)


def from_kernel_basis(basis):
    """The monic simple additive polynomial whose roots are exactly the
    Z_p-span of the basis, by iterating psi -> (x**p - psi(theta)**(p-1) x) o psi."""
    if not isinstance(basis, KernelBasis):
        basis = KernelBasis(basis)
    K = basis.field
    theta = basis.elements[0]
    psi = AdditivePoly.p_linear(theta ** (K.p - 1))
    for th in basis.elements[1:]:
        v = psi.evaluate(th)
        if v.is_zero():
            raise DependentBasis("basis element lies in the span of earlier ones")
        psi = add_compose(AdditivePoly.p_linear(v ** (K.p - 1)), psi)
    return psi


def peel_frobenius(f):
    """Write monic f as x**(p**l) o g with g monic simple; returns (l, g)."""
    if f.is_zero():
        raise ZeroInput("cannot peel the zero polynomial")
    if not f.is_monic():
        raise NotMonic("peeling requires a monic input")
    K = f.field
    z = K.zero()
    ell = 0
    while f.coeffs[ell] == z:
        ell += 1
    if ell == 0:
        return 0, f
    out = []
    for a in f.coeffs[ell:]:
        r = a
        for _ in range(ell):
            r = K.pth_root_rep(r)
        out.append(r)
    return ell, AdditivePoly(K, out)


def min_add_mult(f, _check_monic=True):
    """Minimal additive multiple of a monic polynomial f.

    Scans h_i = x**(p**i) mod f for the first linear dependence over the
    coefficient field; the dependence coefficients assemble the answer.
    Every monic additive multiple of f is right-divisible by it.
    """
    if f.is_zero():
        raise ZeroInput("zero polynomial has no minimal additive multiple")
    if _check_monic and not f.is_monic():
        raise NotMonic("minimal additive multiple requires a monic input")
    from . import _polyops as po

    K = f.field
    n = f.degree
    z = K.zero()
    fc = list(f.coeffs)
    # reduced basis rows: (pivot index, vector, combination over the h_j)
    basis = []
    h = po.mod(K, [z, K.one()], fc)
    k = 0
    while True:
        vec = list(h) + [z] * (n - len(h))
        combo = [z] * (k + 1)
        combo[k] = K.one()
        for pivot, bvec, bcombo in basis:
            c = vec[pivot]
            if c != z:
                vec = [K.sub(x, K.mul(c, y)) for x, y in zip(vec, bvec)]
                combo = [
                    K.sub(x, K.mul(c, y))
                    for x, y in zip(combo, bcombo + [z] * (len(combo) - len(bcombo)))
                ]
        nonzero = [i for i, x in enumerate(vec) if x != z]
        if not nonzero:
            # vec == 0 means h_k + sum(combo[j] h_j, j<k) ... with combo[k] = 1,
            # so x**(p**k) + sum combo[j] x**(p**j) is the additive multiple.
            coeffs = list(combo[:-1]) + [K.one()]
            return AdditivePoly(K, coeffs)
        pivot = nonzero[-1]
        inv = K.inv(vec[pivot])
        vec = [K.mul(x, inv) for x in vec]
        combo = [K.mul(x, inv) for x in combo]
        basis.append((pivot, vec, combo))
        h = po.mod(K, po.powmod(K, h, K.p, fc), fc)
        k += 1


def counts(p, nu, sigma):
    """Exact subspace and flag counts over Z_p.

    Returns (S, T, F): S = number of sigma-dimensional subspaces of a
    nu-dimensional space; T = number of sigma-dimensional subspaces
    containing a fixed (sigma-1)-dimensional one; F = number of maximal
    flags = prod_{1<=i<=nu} T(nu, i).  T is 1 by convention at sigma = 0.
    """
    if not (0 <= sigma <= nu):
        raise ValueError("need 0 <= sigma <= nu")
    num = 1
    den = 1
    for i in range(sigma):
        num *= p**nu - p**i
        den *= p**sigma - p**i
    s, rem = divmod(num, den)
    if rem:
        raise AssertionError("subspace count must be an integer")
    if sigma == 0:
        t = 1
    else:
        t, rem = divmod(p**nu - p ** (sigma - 1), p**sigma - p ** (sigma - 1))
        if rem:
            raise AssertionError("extension count must be an integer")
    flags = 1
    for i in range(1, nu + 1):
        ti, rem = divmod(p**nu - p ** (i - 1), p**i - p ** (i - 1))
        if rem:
            raise AssertionError("flag count must be an integer")
        flags *= ti
    return s, t, flags
