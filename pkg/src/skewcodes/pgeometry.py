"""P-closed sets, minimal skew polynomials, conjugacy and skew weights.

The central object is the minimal monic skew polynomial vanishing on a
point set; its degree is the rank of the set's P-closure and the points
that raise the degree during the incremental build form a P-basis. An
independent Vandermonde-nullspace construction of the same polynomial is
kept as a cross-check oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import linalg
from .fields import Element, Field
from .skewpoly import SkewPoly, SkewPolyRing


class DependentPointsError(ValueError):
    """A P-independent point set was required."""


@dataclass(frozen=True)
class PClosedSet:
    """A finitely generated P-closure: greedy P-basis plus minimal polynomial."""

    ring: SkewPolyRing
    basis: tuple
    min_poly: SkewPoly

    @property
    def rank(self) -> int:
        return self.min_poly.degree


@dataclass(frozen=True)
class ConjugacyClass:
    rep: Element
    members: tuple
    centralizer_tag: str

    @property
    def size(self) -> int:
        return len(self.members)


def conjugate_of(field: Field, a: Element, b: Element) -> Element:
    """The conjugate sigma(b)*a*b^-1 + delta(b)*b^-1 of a by a nonzero b."""
    if field.is_zero(b):
        raise ZeroDivisionError("conjugating element must be nonzero")
    binv = field.inv(b)
    return field.add(
        field.mul(field.mul(field.sigma(b), a), binv),
        field.mul(field.delta(b), binv),
    )


def in_centralizer(field: Field, a: Element, b: Element) -> bool:
    """Whether sigma(b)*a + delta(b) == a*b."""
    lhs = field.add(field.mul(field.sigma(b), a), field.delta(b))
    return lhs == field.mul(a, b)


def minimal_skew_poly(ring: SkewPolyRing, points: Iterable[Element]) -> PClosedSet:
    """Incremental minimal polynomial of a finite point set.

    Starting from 1, each point a with current value c = F(a) != 0
    contributes the left factor (x - a^c), where a^c is the conjugate of a
    by c; points that raise the degree are collected as the greedy P-basis.
    """
    field = ring.field
    f = ring.one
    basis: list[Element] = []
    for a in points:
        c = f.evaluate(a)
        if field.is_zero(c):
            continue
        f = ring.x_minus(conjugate_of(field, a, c)) * f
        basis.append(a)
    return PClosedSet(ring, tuple(basis), f)


def p_rank(ring: SkewPolyRing, points: Iterable[Element]) -> int:
    return minimal_skew_poly(ring, points).rank


def is_p_independent(ring: SkewPolyRing, points: Sequence[Element]) -> bool:
    return p_rank(ring, points) == len(points)


def extract_p_basis(ring: SkewPolyRing, points: Iterable[Element]) -> tuple:
    """Greedy in-order maximal P-independent subsequence."""
    return minimal_skew_poly(ring, points).basis


def skew_vandermonde(ring: SkewPolyRing, points: Sequence[Element], rows: int) -> list[list[Element]]:
    """Matrix with entry (i, j) = N_i(points[j]), i = 0..rows-1."""
    if rows < 1:
        raise ValueError("need at least one row")
    cols = [ring.norm_row(a, rows) for a in points]
    return [[col[i] for col in cols] for i in range(rows)]


def minimal_skew_poly_nullspace(ring: SkewPolyRing, points: Sequence[Element]) -> SkewPoly:
    """Vandermonde-nullspace oracle for the minimal skew polynomial.

    Finds the smallest r for which the norm row N_r is a combination of
    N_0..N_{r-1} across all points; the combination gives the monic
    minimal polynomial. Independent of the incremental construction.
    """
    points = list(points)
    if not points:
        return ring.one
    field = ring.field
    n = len(points)
    norms = [ring.norm_row(a, n + 1) for a in points]
    for r in range(n + 1):
        rows = [norms[j][:r] for j in range(n)]
        rhs = [field.neg(norms[j][r]) for j in range(n)]
        sol = linalg.solve_consistent(field, rows, rhs)
        if sol is not None:
            return ring.poly(list(sol) + [field.one])
    raise AssertionError("minimal polynomial not found below degree #points")


def closure_enumerate(ring: SkewPolyRing, points: Iterable[Element]) -> tuple:
    """All zeros of the minimal polynomial, scanned over the whole field."""
    field = ring.field
    if field.kind != "finite":
        raise ValueError("closure enumeration needs a finite field (infinite search space)")
    f = minimal_skew_poly(ring, points).min_poly
    if f.degree == 0:
        return ()
    return tuple(c for c in field.elements() if field.is_zero(f.evaluate(c)))


def lagrange_interpolate(
    ring: SkewPolyRing, points: Sequence[Element], values: Sequence[Element]
) -> SkewPoly:
    """The unique F with deg(F) < n and F(points[j]) = values[j]."""
    if len(points) != len(values):
        raise ValueError("point and value counts differ")
    if not is_p_independent(ring, points):
        raise DependentPointsError("interpolation points are not P-independent")
    n = len(points)
    if n == 0:
        return ring.zero
    rows = [ring.norm_row(a, n) for a in points]
    coeffs = linalg.solve(ring.field, rows, list(values))
    return ring.poly(coeffs)


def conjugacy_classes(field: Field) -> list[ConjugacyClass]:
    """Full partition of a finite field into conjugacy classes."""
    if field.kind != "finite":
        raise ValueError("conjugacy classes are enumerable only over finite fields")
    nonzero = [b for b in field.elements() if not field.is_zero(b)]
    classes: list[ConjugacyClass] = []
    seen: set = set()
    for a in field.elements():
        if a in seen:
            continue
        members = {conjugate_of(field, a, b) for b in nonzero}
        seen.update(members)
        ordered = tuple(sorted(members, key=field.element_index))
        classes.append(ConjugacyClass(a, ordered, field.centralizer_tag(a)))
    return classes


def class_of(field: Field, a: Element) -> frozenset:
    """The conjugacy class of a single element (finite fields)."""
    if field.kind != "finite":
        raise ValueError("conjugacy classes are enumerable only over finite fields")
    return frozenset(
        conjugate_of(field, a, b) for b in field.elements() if not field.is_zero(b)
    )


def skew_weight(ring: SkewPolyRing, basis: Sequence[Element], f: SkewPoly) -> int:
    """Rank of the closure minus rank of the zero set of f inside it.

    Defined here through closure enumeration, hence finite fields only;
    over F_p(z) use the linearized route through a code spec, where the
    same weight is the sum-rank weight of the operator-evaluation image.
    """
    if ring.field.kind != "finite":
        raise ValueError(
            "skew weight via closure enumeration needs a finite field; "
            "use CodeSpec.skew_weight for the linearized route"
        )
    n = len(basis)
    if not is_p_independent(ring, basis):
        raise DependentPointsError("weight basis is not P-independent")
    if f.degree >= n:
        raise ValueError("polynomial degree must be below the basis size")
    closure = closure_enumerate(ring, basis)
    zeros = [c for c in closure if ring.field.is_zero(f.evaluate(c))]
    return n - p_rank(ring, zeros)
