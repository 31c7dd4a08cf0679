"""General univariate decomposition over finite fields.

Four bidecomposition engines sit behind one recursion: the tame
coefficient recurrence (characteristic not dividing the outer degree),
subset search over the factors of f - f(0) (any characteristic), the
finite-field block construction for irreducible inputs, and the additive
machinery for additive inputs.  Every decomposition returned is normal:
all factors monic, inner factors with zero constant term.
"""

from __future__ import annotations

import enum

from . import addecomp, additive, upoly
from .addecomp import Decomposition, OrderedFactorisation
from .errors import (
    DegreeError,
    NotIrreducible,
    NotMonic,
    NotTame,
    ProductMismatch,
)
from .field import Felt, build_extension
from .upoly import Poly


class Strategy(enum.Enum):
    TAME = "tame"
    SEPARATED = "sep"
    IRREDUCIBLE_FF = "irred"
    ADDITIVE = "additive"


def _require_monic(f):
    if not f.is_monic():
        raise NotMonic("decomposition inputs must be monic")
    return f


def tame_bidecomp(f, shape):
    """The unique normal (g, h) with f = g(h) and the given (r, s) shape,
    or None.  Requires p not dividing r.

    The inner factor comes out of the coefficient recurrence
    c_{s-k} = (a_{rs-k} - coeff(mu_k**r, rs-k)) / r on the partial sums
    mu_k of its top k terms; the outer factor is then a right division.
    """
    _require_monic(f)
    r, s = _shape2(f, shape)
    K = f.field
    if r % K.p == 0:
        raise NotTame("outer degree divisible by the characteristic")
    n = r * s
    inv_r = K.felt(r).inv()
    mu = Poly.monomial(K, s)
    for k in range(1, s):
        a = f.coeff(n - k)
        c = (a - (mu**r).coeff(n - k)) * inv_r
        mu = mu + Poly.monomial(K, s - k, c)
    g = upoly.right_divide(f, mu)
    if g is None:
        return None
    return g, mu


def _shape2(f, shape):
    shape = OrderedFactorisation(shape)
    if len(shape) != 2:
        raise DegreeError("bidecomposition shape must have two entries")
    if shape.product != f.degree:
        raise ProductMismatch("shape does not multiply to deg f")
    return shape[0], shape[1]


def sep_bidecomp(f, shape, seed=0):
    """All normal (g, h) with f = g(h) for the given (r, s) shape.

    Candidate inner factors are x times subset products of the irreducible
    factors of f - f(0); each candidate of degree s is checked by right
    division.  Works in tame and wild cases alike.
    """
    _require_monic(f)
    r, s = _shape2(f, shape)
    K = f.field
    base = f.shift_constant(-f.coeff(0))
    parts, _ = upoly.factor(base, seed)
    x = Poly.x(K)
    items = []
    for irr, mult in parts:
        avail = mult - 1 if irr == x else mult
        if avail > 0:
            items.append((irr, avail))
    found = []

    def rec(idx, h, deg):
        if deg == s:
            g = upoly.right_divide(f, h)
            if g is not None:
                found.append((g, h))
            return
        if idx >= len(items):
            return
        irr, avail = items[idx]
        step = irr.degree
        cand = h
        for e in range(avail + 1):
            if deg + e * step > s:
                break
            rec(idx + 1, cand, deg + e * step)
            if e < avail:
                cand = cand * irr
    rec(0, x, 1)
    found.sort(key=lambda gh: (gh[1].key(), gh[0].key()))
    return found


def irred_ff_bidecomp(f, shape):
    """Normal (g, h) for an irreducible f over a finite field, or None.

    In K = F[z]/(f) the only candidate block system is the orbit
    {alpha**(q**(j*r))}; its vanishing polynomial must have all
    positive-degree coefficients down in F.
    """
    _require_monic(f)
    entries = tuple(shape)
    if len(entries) == 2 and min(entries) < 2:
        raise DegreeError("normal bidecomposition factors need degree >= 2")
    r, s = _shape2(f, shape)
    if not upoly.is_irreducible(f):
        raise NotIrreducible("input must be irreducible over its field")
    K = f.field
    ext = build_extension(K, f)
    e_step = K.degree_over_prime * r
    alpha = ext.gen()
    roots = []
    cur = alpha
    for _ in range(s):
        roots.append(cur)
        cur = Felt(ext, ext.frobenius_rep(cur.rep, e_step))
    prod = Poly.one(ext)
    for root in roots:
        prod = prod * Poly(ext, [-root, ext.felt(1)])
    down = []
    for i in range(1, s + 1):
        c = prod.coeff(i).rep
        if any(x != K.zero() for x in c[1:]):
            return None
        down.append(c[0])
    h = Poly(K, [K.zero()] + down)
    g = upoly.right_divide(f, h)
    if g is None:
        return None
    return g, h


def _bidecompositions(f, shape, strategy, seed):
    """All normal pairs for one level of the recursion, sorted."""
    r, s = _shape2(f, shape)
    if strategy is Strategy.TAME:
        if r % f.field.p == 0:
            raise NotTame("tame strategy with p | outer degree")
        got = tame_bidecomp(f, shape)
        return [got] if got is not None else []
    if strategy is Strategy.IRREDUCIBLE_FF:
        got = irred_ff_bidecomp(f, shape)
        return [got] if got is not None else []
    return sep_bidecomp(f, shape, seed)


def ord_fact_decomp(f, shape, strategy=Strategy.SEPARATED, seed=0):
    """All decompositions of f matching the ordered factorisation that are
    reachable by recursive bidecomposition under the chosen strategy."""
    _require_monic(f)
    shape = OrderedFactorisation(shape)
    if shape.product != f.degree:
        raise ProductMismatch("shape does not multiply to deg f")
    if strategy is Strategy.ADDITIVE:
        decs = addecomp.decompose_ordered(
            additive.AdditivePoly.from_poly(f), shape, seed
        )
        return [
            Decomposition(f, d.as_poly_factors(), complete=d.complete) for d in decs
        ]
    if len(shape) == 1:
        return [Decomposition(f, (f,))]
    inner = shape[-1]
    outer_product = shape.product // inner
    out = []
    for g, h in _bidecompositions(f, (outer_product, inner), strategy, seed):
        if len(shape) == 2:
            out.append(Decomposition(f, (g, h)))
            continue
        for sub in ord_fact_decomp(g, shape[:-1], strategy, seed):
            out.append(Decomposition(f, sub.factors + (h,)))
    out.sort(key=lambda d: d.key())
    return out


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def first_complete(f, strategy=Strategy.SEPARATED, seed=0):
    """The first complete decomposition under an increasing divisor scan.

    Scans outer degrees d = smallest nontrivial divisor upward; the first
    split certifies an indecomposable outer factor, and the inner factor
    is decomposed recursively.  The tame recurrence is used as a fast path
    whenever p does not divide d.
    """
    _require_monic(f)
    if strategy is Strategy.ADDITIVE:
        dec = addecomp.complete_decomposition(additive.AdditivePoly.from_poly(f), seed)
        return Decomposition(f, dec.as_poly_factors(), complete=True)
    n = f.degree
    if n < 2:
        raise DegreeError("complete decomposition needs degree >= 2")
    # inner factors of an irreducible polynomial need not stay irreducible,
    # so the block method degrades to the separated search on recursion
    if strategy is Strategy.IRREDUCIBLE_FF and not upoly.is_irreducible(f):
        strategy = Strategy.SEPARATED
    for d in _divisors(n)[1:-1]:
        shape = (d, n // d)
        if strategy is Strategy.TAME and d % f.field.p == 0:
            continue
        if strategy is Strategy.SEPARATED and d % f.field.p != 0:
            got = tame_bidecomp(f, shape)
        else:
            pairs = _bidecompositions(f, shape, strategy, seed)
            got = pairs[0] if pairs else None
        if got is not None:
            g, h = got
            if h.degree < 2:
                continue
            tail = first_complete(h, strategy, seed) if h.degree >= 2 else None
            inner_factors = tail.factors if tail else (h,)
            return Decomposition(f, (g,) + inner_factors, complete=True)
    return Decomposition(f, (f,), complete=True)
