"""Dense univariate polynomial arithmetic over the prime field F_p.

A polynomial is an immutable tuple of ints in [0, p), listed low degree
first with no trailing zeros; the empty tuple is the zero polynomial.
These tuples back both GF(p^s) element representations (reduced mod an
irreducible modulus) and the numerators/denominators of F_p(z) elements.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator

Poly = tuple  # tuple[int, ...], coefficients low degree first


def trim(coeffs: Iterable[int]) -> Poly:
    """Strip trailing zeros into canonical form."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(f: Poly) -> int:
    """Degree of f; -1 for the zero polynomial."""
    return len(f) - 1


def const(p: int, c: int) -> Poly:
    return trim((c % p,))


def add(p: int, f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return trim(out)


def neg(p: int, f: Poly) -> Poly:
    return tuple((-c) % p for c in f)


def sub(p: int, f: Poly, g: Poly) -> Poly:
    return add(p, f, neg(p, g))


def scale(p: int, c: int, f: Poly) -> Poly:
    c %= p
    if c == 0:
        return ()
    return trim((c * a) % p for a in f)


def mul(p: int, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return trim(out)


def shift(f: Poly, k: int) -> Poly:
    """Multiply by t^k."""
    if not f:
        return ()
    return (0,) * k + f


def monic(p: int, f: Poly) -> Poly:
    if not f:
        return ()
    lead_inv = pow(f[-1], p - 2, p)
    return scale(p, lead_inv, f)


def divmod_poly(p: int, f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    g_lead_inv = pow(g[-1], p - 2, p)
    dg = len(g) - 1
    while len(r) >= len(g):
        if r[-1] == 0:
            r.pop()
            continue
        shift_by = len(r) - 1 - dg
        c = (r[-1] * g_lead_inv) % p
        q[shift_by] = c
        for i, b in enumerate(g):
            r[shift_by + i] = (r[shift_by + i] - c * b) % p
        while r and r[-1] == 0:
            r.pop()
    return trim(q), trim(r)


def gcd(p: int, f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    while g:
        f, g = g, divmod_poly(p, f, g)[1]
    return monic(p, f)


def inverse_mod(p: int, f: Poly, modulus: Poly) -> Poly:
    """Inverse of f modulo an irreducible modulus, by extended Euclid."""
    if not f:
        raise ZeroDivisionError("inverse of zero")
    r0, r1 = modulus, f
    s0, s1 = (), (1,)
    while r1:
        q, r = divmod_poly(p, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(p, s0, mul(p, q, s1))
    if degree(r0) != 0:
        raise ValueError("element not invertible modulo the given modulus")
    return scale(p, pow(r0[0], p - 2, p), s0)


def derivative(p: int, f: Poly) -> Poly:
    return trim((i * c) % p for i, c in enumerate(f) if i > 0)


def eval_at(p: int, f: Poly, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def monic_polys(p: int, d: int) -> Iterator[Poly]:
    """All monic degree-d polynomials, lexicographic by low coefficients first."""
    for lows in product(range(p), repeat=d):
        yield lows + (1,)


def is_irreducible(p: int, f: Poly) -> bool:
    """Trial factorization: no monic divisor of degree 1..deg(f)//2."""
    d = degree(f)
    if d <= 0:
        return False
    if d == 1:
        return True
    for e in range(1, d // 2 + 1):
        for g in monic_polys(p, e):
            if not divmod_poly(p, f, g)[1]:
                return False
    return True


def smallest_irreducible(p: int, d: int) -> Poly:
    """Lexicographically smallest monic irreducible of degree d over F_p."""
    for f in monic_polys(p, d):
        if is_irreducible(p, f):
            return f
    raise ValueError(f"no irreducible polynomial of degree {d} over F_{p}")


def format_poly(f: Poly) -> str:
    """Digit string low degree first, ':'-joined; '0' for zero."""
    if not f:
        return "0"
    return ":".join(str(c) for c in f)


def parse_poly(p: int, text: str) -> Poly:
    parts = text.split(":")
    try:
        coeffs = [int(part) for part in parts]
    except ValueError:
        raise ValueError(f"bad polynomial string {text!r}") from None
    if any(c < 0 or c >= p for c in coeffs):
        raise ValueError(f"coefficients in {text!r} out of range for F_{p}")
    return trim(coeffs)
