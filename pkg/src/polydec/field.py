"""Prime fields and towers of algebraic extensions, with exact arithmetic.

Elements travel as lightweight canonical representations: an ``int`` in
``[0, p)`` for a prime field and a fixed-length tuple of base-field
representations for each extension level.  :class:`Felt` wraps a
representation with its owning field for operator convenience.  Extension
levels are kept as a tower (extension of extension) rather than flattened
to one absolute extension, so fields built level by level compare equal to
their construction description.

Field spec grammar: ``GF(p)`` | ``GF(p^e)`` (auto-chosen seeded modulus) |
``GF(p)[g1]/(m1)[g2]/(m2)...`` (explicit tower, level-k modulus written in
the generator ``gk``).
"""

from __future__ import annotations

from . import _polyops as po
from .errors import (
    DivideByZero,
    FieldMismatch,
    NotMonic,
    NotPrime,
    ParseError,
    Reducible,
)


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """Common interface of :class:`PrimeField` and :class:`ExtensionField`."""

    kind = ""
    p = 0
    order = 0
    height = 0          # number of extension levels above the prime field
    degree_over_prime = 1

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def mul_int(self, a, n):
        return self.mul(a, self.from_int(n))

    def pow_(self, a, n):
        if n < 0:
            return self.pow_(self.inv(a), -n)
        result = self.one()
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def frobenius_rep(self, a, times):
        """a raised to the p**times power."""
        e = self.degree_over_prime
        for _ in range(times % e if e > 1 else 0):
            a = self.pow_(a, self.p)
        return a

    def pth_root_rep(self, a):
        """The unique representation b with b**p = a."""
        return self.frobenius_rep(a, self.degree_over_prime - 1)

    def felt(self, x):
        """Coerce an int, Felt, or raw representation into a Felt."""
        if isinstance(x, Felt):
            if x.field != self:
                raise FieldMismatch(f"element of {x.field} used in {self}")
            return x
        if isinstance(x, int):
            return Felt(self, self.from_int(x))
        return Felt(self, x)

    def elements(self):
        """All element representations, in canonical order."""
        raise NotImplementedError

    def felts(self):
        return (Felt(self, r) for r in self.elements())

    def generator_by_name(self, name):
        """Representation of the named tower generator, lifted to this field."""
        raise ParseError(f"unknown generator {name!r} in field {self}")

    def __repr__(self):
        return self.describe()

    def __str__(self):
        return self.describe()


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p):
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.order = p
        self.height = 0
        self.degree_over_prime = 1

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise DivideByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow_(self, a, n):
        if n < 0:
            return self.inv(pow(a, -n, self.p))
        return pow(a, n, self.p)

    def rand_rep(self, rng):
        return rng.randrange(self.p)

    def elements(self):
        return iter(range(self.p))

    def elt_str(self, a):
        return str(a)

    def elt_key(self, a):
        return a

    def describe(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))


class ExtensionField(Field):
    kind = "ext"

    def __init__(self, base, modulus, gen_name=None):
        """Extend ``base`` by a root of the monic irreducible ``modulus``.

        ``modulus`` is a little-endian list of base representations of
        degree >= 2; its validity is checked here.
        """
        d = po.deg(modulus)
        if d < 2:
            raise Reducible("extension modulus must have degree >= 2")
        if modulus[-1] != base.one():
            raise NotMonic("extension modulus must be monic")
        if not po.is_irreducible(base, modulus):
            raise Reducible("extension modulus is reducible over its base")
        self.base = base
        self.modulus = tuple(modulus)
        self.deg = d
        self.p = base.p
        self.order = base.order**d
        self.height = base.height + 1
        self.degree_over_prime = base.degree_over_prime * d
        self.gen_name = gen_name or f"g{self.height}"

    def zero(self):
        return (self.base.zero(),) * self.deg

    def one(self):
        return (self.base.one(),) + (self.base.zero(),) * (self.deg - 1)

    def from_int(self, n):
        return (self.base.from_int(n),) + (self.base.zero(),) * (self.deg - 1)

    def embed(self, a):
        """Lift a base-field representation into this level."""
        return (a,) + (self.base.zero(),) * (self.deg - 1)

    def gen(self):
        """The residue of the adjoined indeterminate, as a Felt."""
        b = self.base
        rep = tuple(
            b.one() if i == 1 else b.zero() for i in range(self.deg)
        )
        return Felt(self, rep)

    def add(self, a, b):
        base = self.base
        return tuple(base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        base = self.base
        return tuple(base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        base = self.base
        return tuple(base.neg(x) for x in a)

    def mul(self, a, b):
        base = self.base
        d = self.deg
        z = base.zero()
        prod = [z] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai != z:
                for j, bj in enumerate(b):
                    if bj != z:
                        prod[i + j] = base.add(prod[i + j], base.mul(ai, bj))
        m = self.modulus
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c == z:
                continue
            prod[k] = z
            off = k - d
            for j in range(d):
                mj = m[j]
                if mj != z:
                    prod[off + j] = base.sub(prod[off + j], base.mul(c, mj))
        return tuple(prod[:d])

    def inv(self, a):
        base = self.base
        coeffs = po.trim(base, list(a))
        if not coeffs:
            raise DivideByZero("inverse of zero")
        g, u, _ = po.extgcd(base, coeffs, list(self.modulus))
        if po.deg(g) != 0:
            raise DivideByZero("element not invertible (modulus reducible?)")
        u = po.scale(base, u, base.inv(g[0]))
        u = u + [base.zero()] * (self.deg - len(u))
        return tuple(u[: self.deg])

    def rand_rep(self, rng):
        base = self.base
        return tuple(base.rand_rep(rng) for _ in range(self.deg))

    def elements(self):
        import itertools

        base_elts = list(self.base.elements())
        for combo in itertools.product(base_elts, repeat=self.deg):
            yield tuple(combo)

    def elt_str(self, a):
        base = self.base
        coeffs = po.trim(base, list(a))
        return po.poly_str(base, coeffs, self.gen_name)

    def elt_key(self, a):
        base = self.base
        return tuple(base.elt_key(x) for x in a)

    def generator_by_name(self, name):
        if name == self.gen_name:
            return self.gen().rep
        return self.embed(self.base.generator_by_name(name))

    def describe(self):
        mod_str = po.poly_str(self.base, list(self.modulus), self.gen_name)
        return f"{self.base.describe()}[{self.gen_name}]/({mod_str})"

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ext", self.base, self.modulus))


class Felt:
    """A field element: owning field plus canonical representation."""

    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        self.field = field
        self.rep = rep

    def _coerce(self, other):
        if isinstance(other, Felt):
            if other.field != self.field:
                raise FieldMismatch("elements of different fields")
            return other.rep
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return Felt(self.field, self.field.add(self.rep, r))

    __radd__ = __add__

    def __sub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return Felt(self.field, self.field.sub(self.rep, r))

    def __rsub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return Felt(self.field, self.field.sub(r, self.rep))

    def __mul__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return Felt(self.field, self.field.mul(self.rep, r))

    __rmul__ = __mul__

    def __truediv__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return Felt(self.field, self.field.mul(self.rep, self.field.inv(r)))

    def __rtruediv__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return Felt(self.field, self.field.mul(r, self.field.inv(self.rep)))

    def __neg__(self):
        return Felt(self.field, self.field.neg(self.rep))

    def __pow__(self, n):
        return Felt(self.field, self.field.pow_(self.rep, n))

    def inv(self):
        return Felt(self.field, self.field.inv(self.rep))

    def is_zero(self):
        return self.rep == self.field.zero()

    def __eq__(self, other):
        if isinstance(other, Felt):
            return other.field == self.field and other.rep == self.rep
        if isinstance(other, int):
            return self.rep == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.rep))

    def key(self):
        return self.field.elt_key(self.rep)

    def __str__(self):
        return self.field.elt_str(self.rep)

    def __repr__(self):
        return self.field.elt_str(self.rep)


_prime_cache = {}


def build_prime_field(p):
    """The prime field GF(p); raises NotPrime on composite input."""
    f = _prime_cache.get(p)
    if f is None:
        f = PrimeField(p)
        _prime_cache[p] = f
    return f


def build_extension(base, modulus):
    """Extend ``base`` by a root of ``modulus`` (a Poly over base or rep list)."""
    coeffs = getattr(modulus, "coeffs", modulus)
    return ExtensionField(base, list(coeffs))


def find_irreducible(base, degree, seed=0):
    """Seeded deterministic search for a monic irreducible rep list."""
    return po.find_irreducible(base, degree, seed)


def frobenius(a, times):
    """a**(p**times); additive on its argument."""
    if times < 0:
        raise ValueError("frobenius power must be nonnegative")
    return Felt(a.field, a.field.frobenius_rep(a.rep, times))


def pth_root(a):
    """The unique b with b**p = a (finite fields are perfect)."""
    return Felt(a.field, a.field.pth_root_rep(a.rep))


def lift(a, target):
    """Embed a Felt of a tower level of ``target`` into ``target`` itself."""
    if a.field == target:
        return a
    chain = []
    cur = target
    while isinstance(cur, ExtensionField):
        chain.append(cur)
        cur = cur.base
        if cur == a.field:
            rep = a.rep
            for level in reversed(chain):
                rep = level.embed(rep)
            return Felt(target, rep)
    raise FieldMismatch(f"{a.field} is not a level of the tower {target}")


def parse_field_spec(text, seed=0):
    """Parse the field spec grammar into a Field."""
    s = text.strip().replace(" ", "")
    if not s.startswith("GF("):
        raise ParseError(f"field spec must start with GF(: {text!r}")
    close = s.index(")") if ")" in s else -1
    if close < 0:
        raise ParseError(f"unbalanced parenthesis in field spec {text!r}")
    head = s[3:close]
    rest = s[close + 1 :]
    if "^" in head:
        p_txt, e_txt = head.split("^", 1)
        if not (p_txt.isdigit() and e_txt.isdigit()):
            raise ParseError(f"bad prime power {head!r}")
        p, e = int(p_txt), int(e_txt)
        base = build_prime_field(p)
        if e == 1:
            field = base
        else:
            field = ExtensionField(base, find_irreducible(base, e, seed))
    else:
        if not head.isdigit():
            raise ParseError(f"bad characteristic {head!r}")
        field = build_prime_field(int(head))
    while rest:
        if not rest.startswith("["):
            raise ParseError(f"trailing junk in field spec: {rest!r}")
        gb = rest.index("]")
        gen_name = rest[1:gb]
        rest = rest[gb + 1 :]
        if not rest.startswith("/("):
            raise ParseError("expected /(modulus) after generator name")
        depth = 0
        end = -1
        for i, ch in enumerate(rest[1:], start=1):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    end = i
                    break
        if end < 0:
            raise ParseError("unbalanced parenthesis in modulus")
        mod_txt = rest[2:end]
        rest = rest[end + 1 :]
        from ._expr import eval_poly_text

        coeffs = eval_poly_text(field, mod_txt, gen_name)
        field = ExtensionField(field, coeffs, gen_name=gen_name)
    return field
