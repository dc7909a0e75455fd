"""Exact arithmetic for the two supported field families.

Two kinds of field back everything else:

* ``FiniteField``: GF(p^s) in the polynomial basis of the lexicographically
  smallest monic irreducible modulus, with the Frobenius-power endomorphism
  ``sigma(a) = a**(p**r)`` and the inner derivation ``delta = gamma*(Id - sigma)``.
* ``RationalFunctionField``: F_p(z) with the identity endomorphism and,
  optionally, the standard derivation d/dz.

Elements are plain immutable data, so they hash and compare structurally:
a GF(p^s) element is a length-s tuple of ints (coefficients of the
polynomial basis), while an F_p(z) element is a ``(numerator, denominator)``
pair of coprime `gfpoly` tuples with monic denominator.
"""

from __future__ import annotations

import math
from itertools import product
from random import Random
from typing import Iterator, Sequence

from . import gfpoly

# Finite elements are tuple[int, ...]; rational elements are (Poly, Poly).
Element = tuple

FULL_FIELD = "full"   # the centralizer is all of F
BASE_FIELD = "base"   # F_q inside GF(q^m), or F_p(z^p) inside F_p(z)

_CACHE_LIMIT = 1 << 16  # largest field order for which op results are memoized


class FieldMismatchError(ValueError):
    """Operands belong to different field descriptors."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class Field:
    """Common surface of both field kinds; immutable after construction."""

    kind: str
    p: int

    # -- arithmetic -------------------------------------------------------

    def add(self, a: Element, b: Element) -> Element:
        raise NotImplementedError

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def neg(self, a: Element) -> Element:
        raise NotImplementedError

    def mul(self, a: Element, b: Element) -> Element:
        raise NotImplementedError

    def inv(self, a: Element) -> Element:
        raise NotImplementedError

    def div(self, a: Element, b: Element) -> Element:
        return self.mul(a, self.inv(b))

    def pow(self, a: Element, e: int) -> Element:
        """a**e for e >= 0 by square-and-multiply."""
        if e < 0:
            return self.pow(self.inv(a), -e)
        acc = self.one
        base = a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def is_zero(self, a: Element) -> bool:
        return a == self.zero

    # -- the (sigma, delta) pair -----------------------------------------

    def sigma(self, a: Element) -> Element:
        raise NotImplementedError

    def delta(self, a: Element) -> Element:
        raise NotImplementedError

    @property
    def sigma_is_identity(self) -> bool:
        raise NotImplementedError

    # -- centralizer subfields ---------------------------------------------

    def centralizer_tag(self, a: Element) -> str:
        """Tag of the centralizer subfield of ``a`` (FULL_FIELD or BASE_FIELD)."""
        raise NotImplementedError

    def subfield_dim(self, tag: str) -> int:
        """Dimension of F as a vector space over the tagged subfield."""
        raise NotImplementedError

    def coordinate_basis(self, tag: str) -> tuple[Element, ...]:
        """Basis of F over the tagged subfield used by :meth:`coordinates`."""
        raise NotImplementedError

    def coordinates(self, tag: str, a: Element) -> tuple[Element, ...]:
        """Coordinates of ``a`` over the tagged subfield.

        Round-trips: ``a == sum(basis[j] * coords[j])`` with the basis from
        :meth:`coordinate_basis`; every coordinate lies in the subfield.
        """
        raise NotImplementedError

    # -- serialization ------------------------------------------------------

    def format_element(self, a: Element) -> str:
        raise NotImplementedError

    def parse_element(self, text: str) -> Element:
        raise NotImplementedError

    def from_int(self, n: int) -> Element:
        raise NotImplementedError

    def random_element(self, rng: Random, degree_bound: int = 4) -> Element:
        raise NotImplementedError

    def _check(self, other: "Field") -> None:
        if self != other:
            raise FieldMismatchError("elements from different fields")


class FiniteField(Field):
    """GF(p^s) with sigma(a) = a**(p**r) and the inner derivation gamma*(Id - sigma).

    The modulus is the lexicographically smallest monic irreducible of
    degree s over F_p (low-degree coefficients compared first), so element
    encodings are portable across runs and platforms.
    """

    kind = "finite"

    def __init__(self, p: int, s: int, r: int = 0, gamma=None):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if s < 1:
            raise ValueError("extension degree must be >= 1")
        if r < 0:
            raise ValueError("Frobenius exponent must be >= 0")
        self.p = p
        self.s = s
        self.r = r
        self.order = p**s
        self.modulus = gfpoly.smallest_irreducible(p, s)
        # gcd(0, s) = s, so r = 0 gives sigma = Id with fixed field all of F.
        self.subfield_degree = math.gcd(r, s)
        self.q = p**self.subfield_degree
        self.m = s // self.subfield_degree
        self.zero = (0,) * s
        self.one = self.from_int(1)
        if gamma is None:
            self.gamma = self.zero
        elif isinstance(gamma, str):
            self.gamma = self.parse_element(gamma)
        else:
            self.gamma = self._validate(tuple(gamma))
        self._red_rows = self._build_reduction_rows()
        self._memo = self.order <= _CACHE_LIMIT
        self._mul_cache: dict = {}
        self._inv_cache: dict = {}
        self._sigma_cache: dict = {}
        self._coord_machines: dict = {}
        self._elements_list: tuple | None = None

    def _build_reduction_rows(self) -> tuple:
        # row[i] = coordinates of x^(s+i) mod modulus, i = 0..s-2
        p, s = self.p, self.s
        rows = []
        cur = [(-c) % p for c in self.modulus[:s]]  # x^s
        rows.append(tuple(cur))
        for _ in range(s - 2):
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                cur = [(cur[i] + lead * rows[0][i]) % p for i in range(s)]
            rows.append(tuple(cur))
        return tuple(rows)

    # -- plumbing ---------------------------------------------------------

    def _validate(self, a: tuple) -> tuple:
        if len(a) != self.s or any(not (0 <= c < self.p) for c in a):
            raise ValueError(f"bad GF({self.p}^{self.s}) element {a!r}")
        return a

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteField)
            and (self.p, self.s, self.r, self.gamma) == (other.p, other.s, other.r, other.gamma)
        )

    def __hash__(self) -> int:
        return hash(("finite", self.p, self.s, self.r, self.gamma))

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, s={self.s}, r={self.r}, gamma={self.format_element(self.gamma)})"

    def __getstate__(self):
        return (self.p, self.s, self.r, self.gamma)

    def __setstate__(self, state):
        p, s, r, gamma = state
        self.__init__(p, s, r, gamma)

    # -- arithmetic -------------------------------------------------------

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        if self._memo:
            key = (a, b)
            hit = self._mul_cache.get(key)
            if hit is not None:
                return hit
        p, s = self.p, self.s
        conv = [0] * (2 * s - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                conv[i + j] = (conv[i + j] + x * y) % p
        out = conv[:s]
        for i, c in enumerate(conv[s:]):
            if c:
                row = self._red_rows[i]
                out = [(out[t] + c * row[t]) % p for t in range(s)]
        res = tuple(out)
        if self._memo:
            self._mul_cache[key] = res
        return res

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("division by zero field element")
        hit = self._inv_cache.get(a)
        if hit is not None:
            return hit
        inv_poly = gfpoly.inverse_mod(self.p, gfpoly.trim(a), self.modulus)
        res = tuple(inv_poly) + (0,) * (self.s - len(inv_poly))
        if self._memo:
            self._inv_cache[a] = res
        return res

    # -- sigma and delta ----------------------------------------------------

    @property
    def sigma_is_identity(self) -> bool:
        return self.r % self.s == 0

    def sigma(self, a):
        if self.sigma_is_identity:
            return a
        hit = self._sigma_cache.get(a)
        if hit is not None:
            return hit
        res = self.pow(a, self.p ** (self.r % self.s))
        if self._memo:
            self._sigma_cache[a] = res
        return res

    def delta(self, a):
        if self.gamma == self.zero:
            return self.zero
        return self.mul(self.gamma, self.sub(a, self.sigma(a)))

    # -- enumeration --------------------------------------------------------

    def from_int(self, n: int) -> tuple:
        digits = []
        for _ in range(self.s):
            digits.append(n % self.p)
            n //= self.p
        return tuple(digits)

    def element_index(self, a) -> int:
        n = 0
        for c in reversed(a):
            n = n * self.p + c
        return n

    def elements(self) -> Iterator[tuple]:
        for n in range(self.order):
            yield self.from_int(n)

    def elements_list(self) -> tuple:
        if self._elements_list is None:
            self._elements_list = tuple(self.elements())
        return self._elements_list

    def random_element(self, rng: Random, degree_bound: int = 4) -> tuple:
        return self.from_int(rng.randrange(self.order))

    # -- centralizer subfields ---------------------------------------------

    def centralizer_tag(self, a) -> str:
        if self.sigma_is_identity or a == self.gamma:
            return FULL_FIELD
        return BASE_FIELD

    def subfield_dim(self, tag: str) -> int:
        if tag == FULL_FIELD:
            return 1
        if tag == BASE_FIELD:
            return self.m
        raise ValueError(f"unsupported subfield tag {tag!r}")

    def _base_machine(self):
        """Solve machinery for BASE_FIELD coordinates, built once.

        Returns (w_basis, inverse_matrix): w_basis is an F_p-basis of the
        fixed subfield F_q, and inverse_matrix maps an element's coefficient
        vector to the F_p-coordinates over the basis {y^j * w_e}.
        """
        machine = self._coord_machines.get(BASE_FIELD)
        if machine is not None:
            return machine
        p, s, d, m = self.p, self.s, self.subfield_degree, self.m
        y = self.from_int(p) if s > 1 else self.one  # class of the variable
        # Relative trace onto F_q: sum of the q-power Frobenius orbit.
        def rel_trace(c):
            acc = self.zero
            t = c
            for _ in range(m):
                acc = self.add(acc, t)
                t = self.pow(t, self.q)
            return acc

        w_basis: list = []
        echelon: list = []
        power = self.one
        for _ in range(s):
            cand = rel_trace(power)
            vec = list(cand)
            for piv, row in echelon:
                if vec[piv]:
                    c = vec[piv] * pow(row[piv], p - 2, p) % p
                    vec = [(vec[i] - c * row[i]) % p for i in range(s)]
            nz = next((i for i, c in enumerate(vec) if c), None)
            if nz is not None:
                echelon.append((nz, vec))
                w_basis.append(cand)
                if len(w_basis) == d:
                    break
            power = self.mul(power, y)
        if len(w_basis) != d:
            raise AssertionError("trace basis construction failed")
        # Columns: coefficient vectors of y^j * w_e, ordered j*d + e.
        cols = []
        ypow = self.one
        for _ in range(m):
            for w in w_basis:
                cols.append(self.mul(ypow, w))
            ypow = self.mul(ypow, y)
        matrix = [[cols[c][row] for c in range(s)] for row in range(s)]
        inverse = _modp_invert(p, matrix)
        machine = (tuple(w_basis), inverse, y)
        self._coord_machines[BASE_FIELD] = machine
        return machine

    def coordinate_basis(self, tag: str) -> tuple:
        if tag == FULL_FIELD:
            return (self.one,)
        if tag == BASE_FIELD:
            _, _, y = self._base_machine()
            basis = []
            ypow = self.one
            for _ in range(self.m):
                basis.append(ypow)
                ypow = self.mul(ypow, y)
            return tuple(basis)
        raise ValueError(f"unsupported subfield tag {tag!r}")

    def coordinates(self, tag: str, a) -> tuple:
        if tag == FULL_FIELD:
            return (a,)
        if tag != BASE_FIELD:
            raise ValueError(f"unsupported subfield tag {tag!r}")
        w_basis, inverse, _ = self._base_machine()
        p, d = self.p, self.subfield_degree
        x = [sum(inverse[i][j] * a[j] for j in range(self.s)) % p for i in range(self.s)]
        coords = []
        for j in range(self.m):
            coord = self.zero
            for e in range(d):
                c = x[j * d + e]
                if c:
                    coord = self.add(coord, tuple((c * v) % p for v in w_basis[e]))
            coords.append(coord)
        return tuple(coords)

    def subfield_elements(self, tag: str) -> tuple:
        """All elements of the tagged subfield, in element-index order."""
        if tag == FULL_FIELD:
            return self.elements_list()
        if tag != BASE_FIELD:
            raise ValueError(f"unsupported subfield tag {tag!r}")
        w_basis, _, _ = self._base_machine()
        p = self.p
        out = []
        for combo in product(range(p), repeat=len(w_basis)):
            acc = self.zero
            for c, w in zip(combo, w_basis):
                if c:
                    acc = self.add(acc, tuple((c * v) % p for v in w))
            out.append(acc)
        return tuple(sorted(out, key=self.element_index))

    # -- serialization ------------------------------------------------------

    def format_element(self, a) -> str:
        return gfpoly.format_poly(gfpoly.trim(a))

    def parse_element(self, text: str) -> tuple:
        poly = gfpoly.parse_poly(self.p, text)
        if len(poly) > self.s:
            raise ValueError(f"element string {text!r} exceeds degree {self.s - 1}")
        return tuple(poly) + (0,) * (self.s - len(poly))


class RationalFunctionField(Field):
    """F_p(z) with sigma = Id; delta is d/dz when ``derivation`` is set, else 0."""

    kind = "rational"

    def __init__(self, p: int, derivation: bool = True):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        self.p = p
        self.derivation = derivation
        self.zero = ((), (1,))
        self.one = ((1,), (1,))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFunctionField)
            and (self.p, self.derivation) == (other.p, other.derivation)
        )

    def __hash__(self) -> int:
        return hash(("rational", self.p, self.derivation))

    def __repr__(self) -> str:
        delta = "d/dz" if self.derivation else "0"
        return f"RationalFunctionField(p={self.p}, delta={delta})"

    # -- canonical form -----------------------------------------------------

    def _normalize(self, num, den):
        p = self.p
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return ((), (1,))
        g = gfpoly.gcd(p, num, den)
        if gfpoly.degree(g) > 0:
            num = gfpoly.divmod_poly(p, num, g)[0]
            den = gfpoly.divmod_poly(p, den, g)[0]
        lead_inv = pow(den[-1], p - 2, p)
        if lead_inv != 1:
            num = gfpoly.scale(p, lead_inv, num)
            den = gfpoly.scale(p, lead_inv, den)
        return (num, den)

    # -- arithmetic -------------------------------------------------------

    def add(self, a, b):
        p = self.p
        (n1, d1), (n2, d2) = a, b
        num = gfpoly.add(p, gfpoly.mul(p, n1, d2), gfpoly.mul(p, n2, d1))
        return self._normalize(num, gfpoly.mul(p, d1, d2))

    def neg(self, a):
        return (gfpoly.neg(self.p, a[0]), a[1])

    def mul(self, a, b):
        p = self.p
        return self._normalize(gfpoly.mul(p, a[0], b[0]), gfpoly.mul(p, a[1], b[1]))

    def inv(self, a):
        if not a[0]:
            raise ZeroDivisionError("division by zero field element")
        return self._normalize(a[1], a[0])

    # -- sigma and delta ----------------------------------------------------

    @property
    def sigma_is_identity(self) -> bool:
        return True

    def sigma(self, a):
        return a

    def delta(self, a):
        if not self.derivation:
            return self.zero
        p = self.p
        num, den = a
        dnum = gfpoly.sub(
            p,
            gfpoly.mul(p, gfpoly.derivative(p, num), den),
            gfpoly.mul(p, num, gfpoly.derivative(p, den)),
        )
        return self._normalize(dnum, gfpoly.mul(p, den, den))

    # -- centralizer subfields ---------------------------------------------

    def centralizer_tag(self, a) -> str:
        # With d/dz every centralizer is F_p(z^p); with delta = 0 it is F.
        return BASE_FIELD if self.derivation else FULL_FIELD

    def subfield_dim(self, tag: str) -> int:
        if tag == FULL_FIELD:
            return 1
        if tag == BASE_FIELD:
            return self.p
        raise ValueError(f"unsupported subfield tag {tag!r}")

    def coordinate_basis(self, tag: str) -> tuple:
        if tag == FULL_FIELD:
            return (self.one,)
        if tag != BASE_FIELD:
            raise ValueError(f"unsupported subfield tag {tag!r}")
        return tuple(((0,) * j + (1,), (1,)) for j in range(self.p))

    def coordinates(self, tag: str, a) -> tuple:
        """Split over {1, z, ..., z^(p-1)} with coordinates in F_p(z^p).

        Multiplying numerator and denominator by den^(p-1) makes the
        denominator den^p, a polynomial in z^p; the numerator then splits
        by exponent residue mod p.
        """
        if tag == FULL_FIELD:
            return (a,)
        if tag != BASE_FIELD:
            raise ValueError(f"unsupported subfield tag {tag!r}")
        p = self.p
        num, den = a
        den_pow = den
        for _ in range(p - 1):
            num = gfpoly.mul(p, num, den)
            den_pow = gfpoly.mul(p, den_pow, den)
        coords = []
        for j in range(p):
            picked = [0] * (len(num) // p + 1)
            for e, c in enumerate(num):
                if e % p == j and c:
                    picked[e // p] = c
            # re-express in z: exponent t of z^p becomes t*p
            u = [0] * (p * len(picked))
            for t, c in enumerate(picked):
                u[t * p] = c
            coords.append(self._normalize(gfpoly.trim(u), den_pow))
        return tuple(coords)

    def in_base_subfield(self, a) -> bool:
        """True when ``a`` lies in F_p(z^p), i.e. d/dz kills it."""
        num, den = a
        p = self.p
        return all(c == 0 for e, c in enumerate(num) if e % p) and all(
            c == 0 for e, c in enumerate(den) if e % p
        )

    # -- serialization / generation -----------------------------------------

    def from_int(self, n: int) -> tuple:
        return (gfpoly.const(self.p, n), (1,))

    def z(self) -> tuple:
        return ((0, 1), (1,))

    def from_polys(self, num: Sequence[int], den: Sequence[int] = (1,)) -> tuple:
        p = self.p
        return self._normalize(
            gfpoly.trim(c % p for c in num), gfpoly.trim(c % p for c in den)
        )

    def random_element(self, rng: Random, degree_bound: int = 4) -> tuple:
        num = gfpoly.trim(rng.randrange(self.p) for _ in range(degree_bound + 1))
        den = ()
        while not den:
            den = gfpoly.trim(rng.randrange(self.p) for _ in range(degree_bound + 1))
        return self._normalize(num, den)

    def random_base_element(self, rng: Random, degree_bound: int = 2) -> tuple:
        """Random element of F_p(z^p): random rational function in z^p."""
        def inflate(f):
            out = [0] * (self.p * len(f))
            for t, c in enumerate(f):
                out[t * self.p] = c
            return gfpoly.trim(out)

        num = gfpoly.trim(rng.randrange(self.p) for _ in range(degree_bound + 1))
        den = ()
        while not den:
            den = gfpoly.trim(rng.randrange(self.p) for _ in range(degree_bound + 1))
        return self._normalize(inflate(num), inflate(den))

    def format_element(self, a) -> str:
        return f"{gfpoly.format_poly(a[0])}/{gfpoly.format_poly(a[1])}"

    def parse_element(self, text: str) -> tuple:
        parts = text.split("/")
        if len(parts) == 1:
            num, den = parts[0], "1"
        elif len(parts) == 2:
            num, den = parts
        else:
            raise ValueError(f"bad rational element string {text!r}")
        return self._normalize(
            gfpoly.parse_poly(self.p, num), gfpoly.parse_poly(self.p, den)
        )


def make_field(
    kind: str,
    p: int,
    s: int = 1,
    r: int = 0,
    gamma=None,
    derivation: bool = False,
) -> Field:
    """Build a field descriptor from flat parameters (the CLI entry path)."""
    if kind == "finite":
        return FiniteField(p, s, r, gamma)
    if kind == "rational":
        if gamma is not None:
            raise ValueError("gamma is not a rational-kind parameter; use the derivation flag")
        return RationalFunctionField(p, derivation)
    raise ValueError(f"unknown field kind {kind!r}")


def _modp_invert(p: int, matrix: list[list[int]]) -> list[list[int]]:
    """Invert a square int matrix mod p by Gauss-Jordan."""
    n = len(matrix)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] % p), None)
        if piv is None:
            raise ValueError("singular matrix mod p")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], p - 2, p)
        aug[col] = [(c * inv) % p for c in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [(aug[i][j] - f * aug[col][j]) % p for j in range(2 * n)]
    return [row[n:] for row in aug]
