"""The skew polynomial ring F[x; sigma, delta].

Multiplication follows the commutation rule ``x*a = sigma(a)*x + delta(a)``;
the ring is right Euclidean, and evaluation at a point is the remainder of
right division by ``x - a``, computed by default through the truncated-norm
recursion ``N_{i+1}(a) = sigma(N_i(a))*a + delta(N_i(a))``.

Polynomials are immutable: a coefficient tuple (low degree first, no
trailing zeros) bound to its ring. The zero polynomial has the empty tuple
and degree -1, a sentinel that sorts below every natural degree.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .fields import Element, Field, FieldMismatchError, FiniteField


class SkewPolyRing:
    """Skew polynomials over a field descriptor (sigma, delta taken from it)."""

    def __init__(self, field: Field):
        self.field = field
        self.zero = SkewPoly(self, ())
        self.one = SkewPoly(self, (field.one,))
        self.x = SkewPoly(self, (field.zero, field.one))
        self._zero_derivation_ring: SkewPolyRing | None = None

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewPolyRing) and self.field == other.field

    def __hash__(self) -> int:
        return hash(("SkewPolyRing", self.field))

    def __repr__(self) -> str:
        return f"SkewPolyRing({self.field!r})"

    # -- construction -------------------------------------------------------

    def poly(self, coeffs: Iterable[Element]) -> "SkewPoly":
        cs = list(coeffs)
        while cs and self.field.is_zero(cs[-1]):
            cs.pop()
        return SkewPoly(self, tuple(cs))

    def constant(self, c: Element) -> "SkewPoly":
        return self.poly((c,))

    def monomial(self, i: int, coeff: Element | None = None) -> "SkewPoly":
        c = self.field.one if coeff is None else coeff
        return self.poly((self.field.zero,) * i + (c,))

    def x_minus(self, a: Element) -> "SkewPoly":
        return self.poly((self.field.neg(a), self.field.one))

    # -- serialization ------------------------------------------------------

    def format_poly(self, f: "SkewPoly") -> str:
        """Semicolon-joined element strings, low degree first; '0' when zero."""
        if f.is_zero:
            return "0"
        return ";".join(self.field.format_element(c) for c in f.coeffs)

    def parse_poly(self, text: str) -> "SkewPoly":
        return self.poly(self.field.parse_element(part) for part in text.split(";"))

    # -- commutation machinery ----------------------------------------------

    def _times_x(self, coeffs: Sequence[Element]) -> tuple:
        """Coefficients of x * (sum g_j x^j) = sum sigma(g_j) x^{j+1} + delta(g_j) x^j."""
        F = self.field
        out = [F.zero] * (len(coeffs) + 1)
        for j, g in enumerate(coeffs):
            if F.is_zero(g):
                continue
            out[j + 1] = F.add(out[j + 1], F.sigma(g))
            d = F.delta(g)
            if not F.is_zero(d):
                out[j] = F.add(out[j], d)
        return tuple(out)

    # -- norms and operators --------------------------------------------------

    def truncated_norm(self, a: Element, i: int) -> Element:
        """N_i(a), the evaluation of x^i at a; N_0 = 1."""
        if i < 0:
            raise ValueError("norm index must be >= 0")
        F = self.field
        n = F.one
        for _ in range(i):
            n = F.add(F.mul(F.sigma(n), a), F.delta(n))
        return n

    def norm_row(self, a: Element, count: int) -> list[Element]:
        """[N_0(a), ..., N_{count-1}(a)] built incrementally."""
        F = self.field
        row = [F.one]
        n = F.one
        for _ in range(count - 1):
            n = F.add(F.mul(F.sigma(n), a), F.delta(n))
            row.append(n)
        return row

    def operator_power(self, a: Element, b: Element, i: int) -> Element:
        """D_a^i(b) where D_a(b) = sigma(b)*a + delta(b); D_a^0 = Id."""
        if i < 0:
            raise ValueError("operator power must be >= 0")
        F = self.field
        v = b
        for _ in range(i):
            v = F.add(F.mul(F.sigma(v), a), F.delta(v))
        return v

    def operator_powers(self, a: Element, b: Element, count: int) -> list[Element]:
        F = self.field
        out = [b]
        v = b
        for _ in range(count - 1):
            v = F.add(F.mul(F.sigma(v), a), F.delta(v))
            out.append(v)
        return out

    def operator_eval(self, a: Element, f: "SkewPoly | Sequence[Element]", b: Element) -> Element:
        """Apply the operator polynomial with f's coefficients to b."""
        coeffs = f.coeffs if isinstance(f, SkewPoly) else tuple(f)
        F = self.field
        acc = F.zero
        v = b
        for i, c in enumerate(coeffs):
            if i:
                v = F.add(F.mul(F.sigma(v), a), F.delta(v))
            if not F.is_zero(c):
                acc = F.add(acc, F.mul(c, v))
        return acc

    # -- inner-derivation change of variable ----------------------------------

    def zero_derivation_ring(self) -> "SkewPolyRing":
        """The companion ring over the same field with delta = 0."""
        if not isinstance(self.field, FiniteField):
            raise ValueError("no inner presentation exists for the rational kind")
        if self._zero_derivation_ring is None:
            f = self.field
            self._zero_derivation_ring = SkewPolyRing(FiniteField(f.p, f.s, f.r, gamma=None))
        return self._zero_derivation_ring

    def to_zero_derivation(self, f: "SkewPoly") -> "SkewPoly":
        """Ring isomorphism onto the delta = 0 ring: x maps to x + gamma.

        With delta = gamma*(Id - sigma), the element x - gamma of this ring
        already commutes like the zero-derivation variable, so substituting
        x + gamma for x lands in F[x; sigma, 0] multiplicatively; the inverse
        substitutes x - gamma (same formula with gamma negated).
        """
        target = self.zero_derivation_ring()
        return _substitute(f, target, target.poly((self.field.gamma, self.field.one)))

    def from_zero_derivation(self, f: "SkewPoly") -> "SkewPoly":
        """Inverse isomorphism: sum F_i x^i -> sum F_i (x - gamma)^i, back here."""
        target = self.zero_derivation_ring()
        if f.ring != target:
            raise FieldMismatchError("expected a polynomial from the zero-derivation ring")
        return _substitute(f, self, self.x_minus(self.field.gamma))


def _substitute(f: "SkewPoly", target: SkewPolyRing, image_of_x: "SkewPoly") -> "SkewPoly":
    acc = target.zero
    power = target.one
    for i, c in enumerate(f.coeffs):
        if i:
            power = power * image_of_x
        if not target.field.is_zero(c):
            acc = acc + target.constant(c) * power
    return acc


class SkewPoly:
    """Immutable skew polynomial; arithmetic goes through its ring."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: SkewPolyRing, coeffs: tuple):
        self.ring = ring
        self.coeffs = coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial (sorts below all naturals)."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.field.one

    def coeff(self, i: int) -> Element:
        return self.coeffs[i] if i < len(self.coeffs) else self.ring.field.zero

    def _coerce(self, other) -> "SkewPoly":
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if other.ring.field != self.ring.field:
            raise FieldMismatchError("polynomials from different rings")
        return other

    def __add__(self, other) -> "SkewPoly":
        other = self._coerce(other)
        F = self.ring.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return self.ring.poly(out)

    def __neg__(self) -> "SkewPoly":
        F = self.ring.field
        return SkewPoly(self.ring, tuple(F.neg(c) for c in self.coeffs))

    def __sub__(self, other) -> "SkewPoly":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "SkewPoly":
        """Ring product via the commutation rule; degrees add."""
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return self.ring.zero
        F = self.ring.field
        row = other.coeffs
        acc = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if i:
                row = self.ring._times_x(row)
            if F.is_zero(c):
                continue
            for j, g in enumerate(row):
                if not F.is_zero(g):
                    acc[j] = F.add(acc[j], F.mul(c, g))
        return self.ring.poly(acc)

    def __divmod__(self, other) -> tuple["SkewPoly", "SkewPoly"]:
        """Right division: self = q * other + r with deg(r) < deg(other)."""
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("skew polynomial division by zero")
        F = self.ring.field
        dg = other.degree
        if self.degree < dg:
            return self.ring.zero, self
        steps = self.degree - dg
        xrows = [other.coeffs]
        for _ in range(steps):
            xrows.append(self.ring._times_x(xrows[-1]))
        rem = list(self.coeffs)
        q = [F.zero] * (steps + 1)
        for t in range(steps, -1, -1):
            top = rem[dg + t]
            if F.is_zero(top):
                continue
            c = F.mul(top, F.inv(xrows[t][dg + t]))
            q[t] = c
            for j, g in enumerate(xrows[t]):
                if not F.is_zero(g):
                    rem[j] = F.sub(rem[j], F.mul(c, g))
        return self.ring.poly(q), self.ring.poly(rem[:dg])

    def __floordiv__(self, other) -> "SkewPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "SkewPoly":
        return divmod(self, other)[1]

    def evaluate(self, a: Element) -> Element:
        """F(a) = sum F_i N_i(a) by the truncated-norm recursion."""
        F = self.ring.field
        acc = F.zero
        n = F.one
        for i, c in enumerate(self.coeffs):
            if i:
                n = F.add(F.mul(F.sigma(n), a), F.delta(n))
            if not F.is_zero(c):
                acc = F.add(acc, F.mul(c, n))
        return acc

    def evaluate_by_remainder(self, a: Element) -> Element:
        """F(a) as the remainder of right division by (x - a); cross-check path."""
        rem = self % self.ring.x_minus(a)
        return rem.coeffs[0] if rem.coeffs else self.ring.field.zero

    __call__ = evaluate

    def monic(self) -> "SkewPoly":
        if self.is_zero or self.is_monic:
            return self
        F = self.ring.field
        inv = F.inv(self.coeffs[-1])
        return SkewPoly(self.ring, tuple(F.mul(inv, c) for c in self.coeffs))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewPoly)
            and self.ring.field == other.ring.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.ring.field, self.coeffs))

    def __repr__(self) -> str:
        return f"<SkewPoly {self.ring.format_poly(self)}>"
