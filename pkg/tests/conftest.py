from __future__ import annotations

from random import Random

import pytest

from skewcodes import CodeSpec, FiniteField, RationalFunctionField, SkewPolyRing


@pytest.fixture(scope="session")
def gf3():
    return FiniteField(3, 1, 0)


@pytest.fixture(scope="session")
def gf9():
    # sigma = cube, delta = 0
    return FiniteField(3, 2, 1)


@pytest.fixture(scope="session")
def gf9_inner():
    # sigma = cube, delta = y*(Id - sigma)
    return FiniteField(3, 2, 1, gamma="0:1")


@pytest.fixture(scope="session")
def gf25():
    return FiniteField(5, 2, 1)


@pytest.fixture(scope="session")
def f3z():
    return RationalFunctionField(3)


@pytest.fixture(scope="session")
def ring9(gf9):
    return SkewPolyRing(gf9)


@pytest.fixture(scope="session")
def ring9_inner(gf9_inner):
    return SkewPolyRing(gf9_inner)


@pytest.fixture(scope="session")
def ring25(gf25):
    return SkewPolyRing(gf25)


@pytest.fixture(scope="session")
def ring3(gf3):
    return SkewPolyRing(gf3)


@pytest.fixture(scope="session")
def ringz(f3z):
    return SkewPolyRing(f3z)


@pytest.fixture(scope="session")
def gf9_spec(gf9):
    """Reps in the two nontrivial classes of GF(9), witnesses (1, y) per block."""
    y = gf9.parse_element("0:1")
    return CodeSpec(gf9, [gf9.one, gf9.parse_element("1:1")], [[gf9.one, y], [gf9.one, y]], 2)


@pytest.fixture(scope="session")
def gabidulin_f3z(f3z):
    """Gabidulin-type code over F_3(z) with delta = d/dz: n = 3, k = 2."""
    z = f3z.z()
    return CodeSpec(f3z, [f3z.zero], [[f3z.one, z, f3z.mul(z, z)]], 2)


def nonzero(field, rng: Random, degree_bound: int = 4):
    while True:
        a = field.random_element(rng, degree_bound)
        if not field.is_zero(a):
            return a


def random_poly(ring, rng: Random, max_degree: int, degree_bound: int = 4):
    coeffs = [ring.field.random_element(rng, degree_bound) for _ in range(max_degree + 1)]
    return ring.poly(coeffs)


def nonzero_poly(ring, rng: Random, max_degree: int, degree_bound: int = 4):
    while True:
        f = random_poly(ring, rng, max_degree, degree_bound)
        if not f.is_zero:
            return f
