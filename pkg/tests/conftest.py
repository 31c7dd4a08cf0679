"""Shared fixtures and brute-force oracles for the test suite."""

import itertools
import random

import pytest

from polydec import AdditivePoly, Poly, build_extension, build_prime_field, parse_field_spec


@pytest.fixture(scope="session")
def F2():
    return build_prime_field(2)


@pytest.fixture(scope="session")
def F3():
    return build_prime_field(3)


@pytest.fixture(scope="session")
def F5():
    return build_prime_field(5)


@pytest.fixture(scope="session")
def F7():
    return build_prime_field(7)


@pytest.fixture(scope="session")
def F4(F2):
    return build_extension(F2, Poly.parse(F2, "x^2+x+1"))


@pytest.fixture(scope="session")
def F8():
    return parse_field_spec("GF(2^3)")


@pytest.fixture(scope="session")
def F9():
    return parse_field_spec("GF(3^2)")


def rand_poly(field, rng, deg, monic=False, zero_const=False):
    """Random polynomial of exact degree ``deg``."""
    coeffs = [field.rand_rep(rng) for _ in range(deg)]
    if zero_const:
        coeffs[0] = field.zero()
    lead = field.one()
    if not monic:
        while True:
            lead = field.rand_rep(rng)
            if lead != field.zero():
                break
    return Poly(field, coeffs + [lead])


def monic_additive_polys(field, expn):
    """All monic additive polynomials of the given exponent."""
    elts = list(field.elements())
    for combo in itertools.product(elts, repeat=expn):
        yield AdditivePoly(field, list(combo) + [field.one()])


def span(p, vectors, nu):
    """Frozenset of all Z_p combinations of tuples in Z_p**nu."""
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(vectors)):
        acc = tuple(0 for _ in range(nu))
        for c, v in zip(coeffs, vectors):
            acc = tuple((a + c * b) % p for a, b in zip(acc, v))
        out.add(acc)
    return frozenset(out)


def subspaces_of_dim(p, nu, sigma):
    """All sigma-dimensional subspaces of Z_p**nu, by exhaustive spans."""
    vectors = list(itertools.product(range(p), repeat=nu))
    seen = set()
    for combo in itertools.product(vectors, repeat=sigma):
        s = span(p, combo, nu)
        if len(s) == p**sigma:
            seen.add(s)
    if sigma == 0:
        seen = {span(p, [], nu)}
    return seen


def count_maximal_flags(p, nu):
    """Number of chains V_1 < V_2 < ... < V_nu with dim V_i = i."""
    by_dim = [subspaces_of_dim(p, nu, d) for d in range(nu + 1)]

    def chains(current, dim):
        if dim == nu:
            return 1
        total = 0
        for bigger in by_dim[dim + 1]:
            if current <= bigger:
                total += chains(bigger, dim + 1)
        return total

    return chains(span(p, [], nu), 0)


def seeded_rng(label):
    return random.Random(f"polydec-tests:{label}")
