"""Decomposition algorithms for additive polynomials.

Covers indecomposable right factors, one/all complete decompositions,
ordered-factorisation targeting, the completely-reducible and
similarity-free fast paths, and absolute decomposition over field towers.
Everywhere a factor has to be chosen, the smallest by (degree,
coefficient order) wins, so identical inputs give identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import upoly
from .additive import (
    AdditivePoly,
    add_compose,
    is_similar,
    join,
    meet,
    min_add_mult,
    peel_frobenius,
    right_quotient,
    transform,
    transform_composition,
    transmutable,
)
from .errors import (
    BadLength,
    ExponentBoundExceeded,
    NotCompletelyReducible,
    NotCoprime,
    NotMonic,
    NotSimilarityFree,
    NotSimple,
    ProductMismatch,
    ZeroInput,
)
from .field import Felt, build_extension, lift
from .upoly import Poly


class OrderedFactorisation(tuple):
    """Tuple (r_m, ..., r_1) of integers >= 2, outermost factor first."""

    def __new__(cls, entries):
        entries = tuple(int(e) for e in entries)
        if not entries:
            raise BadLength("ordered factorisation must be nonempty")
        if any(e < 2 for e in entries):
            raise BadLength("ordered factorisation entries must be >= 2")
        return super().__new__(cls, entries)

    @classmethod
    def parse(cls, text):
        return cls(int(part) for part in text.split(","))

    @property
    def product(self):
        out = 1
        for e in self:
            out *= e
        return out


class UnorderedFactorisation(tuple):
    """Multiset of factors; canonical form is the descending sorted tuple."""

    def __new__(cls, entries):
        return super().__new__(cls, sorted((int(e) for e in entries), reverse=True))

    @property
    def product(self):
        out = 1
        for e in self:
            out *= e
        return out


def _compose_chain(factors):
    first = factors[0]
    if isinstance(first, AdditivePoly):
        acc = first
        for f in factors[1:]:
            acc = add_compose(acc, f)
        return acc
    acc = first
    for f in factors[1:]:
        acc = upoly.compose(acc, f)
    return acc


@dataclass(frozen=True)
class Decomposition:
    """A target polynomial with an ordered factor tuple, outermost first.

    The composition of the factors is checked against the target at
    construction.  ``complete`` marks decompositions whose factors are all
    indecomposable of degree >= p.
    """

    target: object
    factors: tuple
    complete: bool = dc_field(default=False)

    def __post_init__(self):
        if not self.factors:
            raise ZeroInput("decomposition needs at least one factor")
        object.__setattr__(self, "factors", tuple(self.factors))
        if _compose_chain(self.factors) != self.target:
            raise ValueError("factors do not compose to the target")

    @property
    def shape(self):
        """Ordered factorisation of the target degree, outermost first."""
        return OrderedFactorisation(int(f.degree) for f in self.factors)

    def key(self):
        return tuple(f.key() for f in self.factors)

    def as_poly_factors(self):
        """Factors as plain Poly values (converting additive ones)."""
        out = []
        for f in self.factors:
            out.append(f.to_poly() if isinstance(f, AdditivePoly) else f)
        return tuple(out)

    def to_json_dict(self):
        return {
            "target": str(self.target),
            "field": self.target.field.describe(),
            "factors": [str(f) for f in self.factors],
            "complete": self.complete,
        }

    def __str__(self):
        return " o ".join(f"({f})" for f in self.factors)


def _require_monic_additive(f, min_expn=1):
    if not isinstance(f, AdditivePoly):
        raise TypeError("expected an AdditivePoly")
    if not f.is_monic():
        raise NotMonic("input must be monic")
    if f.expn < min_expn:
        raise ZeroInput(f"input must have exponent >= {min_expn}")
    return f


def indec_right_factors(f, seed=0):
    """All monic indecomposable right composition factors of f, sorted.

    The simple candidates are minimal additive multiples of the non-x
    irreducible multiplicative factors; candidates right-divisible by a
    smaller candidate are struck out.  x**p joins the list exactly when f
    is not simple.
    """
    _require_monic_additive(f, min_expn=1)
    K = f.field
    ell, simple_part = peel_frobenius(f)
    parts, _ = upoly.factor(simple_part.to_poly(), seed)
    xpoly = Poly.x(K)
    candidates = {}
    for irr, _mult in parts:
        if irr == xpoly:
            continue
        cand = min_add_mult(irr)
        candidates[cand] = True
    ordered = sorted(candidates, key=lambda g: (g.expn, g.key()))
    kept = []
    for g in ordered:
        if any(right_quotient(g, smaller) is not None for smaller in kept):
            continue
        kept.append(g)
    if ell >= 1:
        kept.append(AdditivePoly.monomial(K, 1))
    kept.sort(key=lambda g: g.key())
    return kept


def is_indecomposable(f, seed=0):
    """True when f has no decomposition into factors of degree >= p."""
    if f.expn == 1:
        return True
    if f.expn < 1:
        return False
    return indec_right_factors(f, seed) == [f]


def complete_decomposition(f, seed=0):
    """One complete decomposition, peeling the first indecomposable right
    factor at every stage."""
    _require_monic_additive(f, min_expn=1)
    factors_inner_first = []
    cur = f
    while True:
        rf = indec_right_factors(cur, seed)
        if rf == [cur]:
            factors_inner_first.append(cur)
            break
        h1 = rf[0]
        factors_inner_first.append(h1)
        cur = right_quotient(cur, h1)
    return Decomposition(f, tuple(reversed(factors_inner_first)), complete=True)


def all_complete_decompositions(f, limit=None, seed=0):
    """All complete decompositions, in deterministic order.

    Branches over every indecomposable right factor; quotient results are
    memoized so shared subproblems are solved once.
    """
    _require_monic_additive(f, min_expn=1)
    memo = {}

    def rec(g):
        known = memo.get(g)
        if known is not None:
            return known
        rf = indec_right_factors(g, seed)
        if rf == [g]:
            memo[g] = [(g,)]
            return memo[g]
        out = []
        for h in rf:
            q = right_quotient(g, h)
            for tail in rec(q):
                out.append(tail + (h,))
        memo[g] = out
        return out

    decs = [
        Decomposition(f, factors, complete=True)
        for factors in rec(f)
    ]
    decs.sort(key=lambda d: d.key())
    if limit is not None:
        decs = decs[:limit]
    return decs


def is_refinement(kappa, rho):
    """True when kappa splits into contiguous blocks with products rho.

    Both tuples are outermost-first.  Greedy matching is exact because all
    entries are >= 2, so partial products grow strictly.
    """
    kappa = OrderedFactorisation(kappa)
    rho = OrderedFactorisation(rho)
    if kappa.product != rho.product:
        raise ProductMismatch("factorisations have different products")
    i = 0
    for target in rho:
        acc = 1
        while acc < target:
            if i >= len(kappa):
                return False
            acc *= kappa[i]
            i += 1
        if acc != target:
            return False
    return i == len(kappa)


def _regroup(factors, shape):
    """Compose contiguous blocks of factors to match the shape exactly."""
    out = []
    i = 0
    for target in shape:
        block = []
        acc = 1
        while acc < target:
            block.append(factors[i])
            acc *= int(factors[i].degree)
            i += 1
        out.append(_compose_chain(block))
    return tuple(out)


def decompose_ordered(f, shape, seed=0):
    """All decompositions of f matching the ordered factorisation, found by
    filtering complete decompositions whose shape refines it."""
    _require_monic_additive(f, min_expn=1)
    shape = OrderedFactorisation(shape)
    if shape.product != f.degree:
        raise ProductMismatch("shape does not multiply to deg f")
    seen = {}
    for dec in all_complete_decompositions(f, seed=seed):
        if not is_refinement(dec.shape, shape):
            continue
        grouped = _regroup(dec.factors, shape)
        cand = Decomposition(f, grouped, complete=(grouped == dec.factors))
        seen.setdefault(cand.key(), cand)
    return [seen[k] for k in sorted(seen)]


def indec_basis(f, seed=0):
    """An indecomposable basis when f is completely reducible, else None.

    Folds the indecomposable right factors into a running join; f is
    completely reducible exactly when the final join reaches f.
    """
    _require_monic_additive(f, min_expn=1)
    xp = AdditivePoly.x(f.field)
    basis = []
    g = xp
    for v in indec_right_factors(f, seed):
        if meet(v, g) == xp:
            g = v if g == xp else join(g, v)
            basis.append(v)
        if g == f:
            return basis
    return None


def unordered_refinements(mu, m):
    """All length-m unordered factorisations refinable from mu, with one
    grouping witness each.

    Dynamic programming over the entries of mu: each new entry either
    opens a fresh group or multiplies an existing one.  Returns a dict
    mapping UnorderedFactorisation -> witness tuple, where witness[i] is
    the group index assigned to mu[i].
    """
    mu = OrderedFactorisation(mu)
    d = len(mu)
    if not 1 <= m <= d:
        raise BadLength("group count must be between 1 and len(mu)")
    # states: canonical key -> (groups tuple, assignment tuple)
    states = {(): ((), ())}
    for i, entry in enumerate(mu):
        nxt = {}

        def put(groups, assign):
            key_groups = tuple(sorted(groups, reverse=True))
            key = (len(groups), key_groups)
            if key not in nxt:
                nxt[key] = (groups, assign)

        for groups, assign in states.values():
            if len(groups) < m:
                put(groups + (entry,), assign + (len(groups),))
            remaining = d - i - 1
            for gi in range(len(groups)):
                # must still be able to open the groups not yet created
                if len(groups) + remaining >= m:
                    grown = groups[:gi] + (groups[gi] * entry,) + groups[gi + 1 :]
                    put(grown, assign + (gi,))
        states = nxt
    out = {}
    for groups, assign in states.values():
        if len(groups) == m:
            out.setdefault(UnorderedFactorisation(groups), assign)
    return out


def basis_to_dec(parts):
    """Decomposition from pairwise composition-coprime parts.

    ``parts[0]`` becomes the innermost factor; factor i is the quotient of
    consecutive joins, so deg factor_i = deg parts_i.
    """
    parts = list(parts)
    if not parts:
        raise ZeroInput("need at least one part")
    K = parts[0].field
    xp = AdditivePoly.x(K)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if meet(parts[i], parts[j]) != xp:
                raise NotCoprime("parts must be pairwise composition-coprime")
    factors_inner_first = []
    g_prev = xp
    for h in parts:
        g_new = h if g_prev == xp else join(g_prev, h)
        factors_inner_first.append(right_quotient(g_new, g_prev))
        g_prev = g_new
    return Decomposition(g_prev, tuple(reversed(factors_inner_first)))


def cr_decompose(f, shape, seed=0):
    """Decomposition of a completely reducible f matching the shape, or None.

    Builds an indecomposable basis, groups it by a matching unordered
    refinement, and recovers the factors through successive joins.
    """
    _require_monic_additive(f, min_expn=1)
    shape = OrderedFactorisation(shape)
    if shape.product != f.degree:
        raise ProductMismatch("shape does not multiply to deg f")
    basis = indec_basis(f, seed)
    if basis is None:
        raise NotCompletelyReducible("input is not a join of indecomposables")
    p = f.field.p
    for entry in shape:
        e = entry
        while e % p == 0:
            e //= p
        if e != 1:
            return None
    m = len(shape)
    if m > len(basis):
        return None
    mu = OrderedFactorisation(int(u.degree) for u in basis)
    table = unordered_refinements(mu, m)
    target = UnorderedFactorisation(shape)
    if target not in table:
        return None
    assign = table[target]
    groups = {}
    for i, gi in enumerate(assign):
        groups.setdefault(gi, []).append(basis[i])
    joined = []
    for gi in sorted(groups):
        parts = groups[gi]
        acc = parts[0]
        for extra in parts[1:]:
            acc = join(acc, extra)
        joined.append(acc)
    # place one group of the right degree into each shape slot, innermost first
    slots = list(reversed(shape))
    remaining = sorted(joined, key=lambda g: g.key())
    ordered_parts = []
    for want in slots:
        pick = next(g for g in remaining if g.degree == want)
        remaining.remove(pick)
        ordered_parts.append(pick)
    dec = basis_to_dec(ordered_parts)
    assert dec.target == f
    return dec


def _assert_similarity_free(factors, seed=0):
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            fi, fj = factors[i], factors[j]
            if fi.expn != fj.expn:
                continue
            if is_similar(fi, fj)[0] or is_similar(fj, fi)[0]:
                raise NotSimilarityFree(
                    f"factors {fi} and {fj} of the complete decomposition are similar"
                )


def factors_to_right(dec, indices, seed=0):
    """Move the factors at the given original positions to the right.

    ``indices`` refers to positions in ``dec`` counted from the innermost
    factor (position 1).  Returns a decomposition of the same target whose
    rightmost len(indices) factors are similar in pairs to the selected
    ones, or None when some required transmutation does not exist.  The
    target must be similarity free.
    """
    if not dec.complete:
        raise ValueError("decomposition must be complete")
    _assert_similarity_free(dec.factors, seed)
    m = len(dec.factors)
    indices = set(indices)
    if not indices:
        return dec
    if not all(1 <= i <= m for i in indices):
        raise BadLength("factor index out of range")
    pos = list(reversed(dec.factors))  # pos[k] = factor at position k+1
    origin = list(range(1, m + 1))  # origin[k] = original position of pos[k]
    remaining = set(indices)
    for stage in range(1, len(indices) + 1):
        placed = False
        for i in sorted(remaining):
            k = origin.index(i)  # current slot of original factor i (0-based)
            ell = stage - 1  # target slot (0-based)
            if k == ell:
                remaining.discard(i)
                placed = True
                break
            comp = _compose_chain(list(reversed(pos[ell:k])))
            trans = transmutable(pos[k], comp, seed)
            if not trans:
                continue
            _gbar, fbar = trans[0]
            block = Decomposition(comp, tuple(reversed(pos[ell:k])), complete=True)
            moved = transform_composition(fbar, block)
            pos[ell + 1 : k + 1] = list(reversed(moved.factors))
            pos[ell] = fbar
            origin[ell + 1 : k + 1] = origin[ell:k]
            origin[ell] = i
            remaining.discard(i)
            placed = True
            break
        if not placed:
            return None
    return Decomposition(dec.target, tuple(reversed(pos)), complete=True)


def simfree_bidecomp(f, shape, seed=0):
    """Two-factor decomposition of a similarity-free f with the given
    (p**rho, p**sigma) shape, or None.

    Scans subsets of a complete decomposition whose exponents sum to
    sigma, pushes them to the right, and regroups.
    """
    _require_monic_additive(f, min_expn=1)
    shape = OrderedFactorisation(shape)
    if len(shape) != 2:
        raise BadLength("bidecomposition shape must have two entries")
    if shape.product != f.degree:
        raise ProductMismatch("shape does not multiply to deg f")
    dec = complete_decomposition(f, seed)
    m = len(dec.factors)
    if m == 1:
        return None
    _assert_similarity_free(dec.factors, seed)
    inner_first = list(reversed(dec.factors))
    p = f.field.p
    sigma = 0
    inner_target = shape[1]
    while p**sigma < inner_target:
        sigma += 1
    if p**sigma != inner_target:
        return None
    for mask in range(1, 1 << m):
        chosen = [k + 1 for k in range(m) if mask >> k & 1]
        if sum(inner_first[k - 1].expn for k in chosen) != sigma:
            continue
        res = factors_to_right(dec, set(chosen), seed)
        if res is None:
            continue
        t = len(chosen)
        res_inner = list(reversed(res.factors))
        inner = _compose_chain(list(reversed(res_inner[:t])))
        outer = _compose_chain(list(reversed(res_inner[t:])))
        return Decomposition(f, (outer, inner))
    return None


def _exponent_divide(poly, k):
    """Substitute x**(1/k): requires every exponent to be a multiple of k."""
    K = poly.field
    z = K.zero()
    out = [z] * (poly.degree // k + 1) if not poly.is_zero() else []
    for e, c in enumerate(poly.coeffs):
        if c == z:
            continue
        if e % k:
            raise AssertionError("exponent not divisible in substitution")
        out[e // k] = c
    return Poly(K, out)


def _lift_additive(f, tower):
    K = f.field
    return AdditivePoly(tower, [lift(Felt(K, c), tower) for c in f.coeffs])


def abs_decompose(f, seed=0, expn_bound=3):
    """Complete decomposition into p-linear factors over a field tower.

    Each stage adjoins a root a of the substituted polynomial
    (f/x)(x**(1/(p-1))) when none is rational yet, peels x**p - a*x, and
    recurses on the quotient.  Returns (tower, decomposition over it).
    """
    _require_monic_additive(f, min_expn=1)
    if not f.is_simple():
        raise NotSimple("absolute decomposition requires a simple input")
    if f.expn > expn_bound:
        raise ExponentBoundExceeded(f"absolute decomposition bounded to expn <= {expn_bound}")
    K = f.field
    p = K.p
    peeled = []  # (factor, owning field), innermost first
    cur = f
    curK = K
    while cur.expn > 1:
        hp = _exponent_divide(cur.to_poly() // Poly.x(curK), max(1, p - 1))
        parts, _ = upoly.factor(hp, seed)
        u1 = parts[0][0]
        if u1.degree == 1:
            a = -u1.coeff(0)
        else:
            newK = build_extension(curK, u1)
            cur = _lift_additive(cur, newK)
            peeled = [(_lift_additive(g, newK), newK) for g, _ in peeled]
            curK = newK
            a = newK.gen()
        h = AdditivePoly.p_linear(a)
        q = right_quotient(cur, h)
        assert q is not None, "chosen root must give a right factor"
        peeled.append((h, curK))
        cur = q
    peeled.append((cur, curK))
    factors = tuple(g for g, _ in reversed(peeled))
    target = _lift_additive(f, curK) if curK != K else f
    return curK, Decomposition(target, factors, complete=True)
