"""Skew and linearized Reed-Solomon code construction.

A code spec is the user-facing object: conjugacy representatives, one
tuple of witness elements per block, and a dimension. The skew-side
evaluation points are always derived from the witnesses by conjugation,
never supplied, so the two views of the code cannot drift apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg, pgeometry
from .fields import Element, Field
from .metrics import BlockVector
from .skewpoly import SkewPoly, SkewPolyRing


class CodeSpecError(ValueError):
    """Base class for code spec validation failures."""


class ConjugateRepsError(CodeSpecError):
    """Two representatives share a conjugacy class."""


class DependentBetasError(CodeSpecError):
    """A block's witnesses are not right-independent over its centralizer."""


class BlockLengthError(CodeSpecError):
    """A block is longer than the field's dimension over its centralizer."""


class DimensionRangeError(CodeSpecError):
    """The dimension k is outside 0..n."""


class ClosureMismatchError(ValueError):
    """Change of P-basis between bases with different closures."""


class CodeSpec:
    """A linearized Reed-Solomon code: reps a^(i), witness tuples, dimension k.

    Validation is eager and reports distinct error types. Over F_p(z) with
    d/dz the pairwise-non-conjugacy of representatives is undecidable here,
    so it is caller-asserted and flagged via ``conjugacy_checked``.
    """

    def __init__(self, field: Field, reps: Sequence[Element], betas, k: int):
        self.field = field
        self.ring = SkewPolyRing(field)
        self.reps = tuple(reps)
        self.betas = tuple(tuple(block) for block in betas)
        self.k = k
        if len(self.reps) != len(self.betas):
            raise CodeSpecError("need exactly one witness tuple per representative")
        if not self.reps:
            raise CodeSpecError("need at least one block")
        self.lengths = tuple(len(block) for block in self.betas)
        self.n = sum(self.lengths)
        self.tags = tuple(field.centralizer_tag(a) for a in self.reps)
        if not 0 <= k <= self.n:
            raise DimensionRangeError(f"dimension {k} outside 0..{self.n}")
        for i, (block, tag) in enumerate(zip(self.betas, self.tags)):
            if not block:
                raise CodeSpecError(f"block {i} is empty")
            cap = field.subfield_dim(tag)
            if len(block) > cap:
                raise BlockLengthError(
                    f"block {i} has length {len(block)} over a centralizer "
                    f"of co-dimension {cap}"
                )
            if any(field.is_zero(b) for b in block):
                raise DependentBetasError(f"block {i} contains a zero witness")
            rows = [field.coordinates(tag, b) for b in block]
            if linalg.rank(field, rows) != len(block):
                raise DependentBetasError(
                    f"block {i} witnesses are right-dependent over the centralizer"
                )
        self.conjugacy_checked = self._check_conjugacy()
        self._genmat: GeneratorMatrix | None = None

    def _check_conjugacy(self) -> bool:
        field = self.field
        if field.kind == "finite":
            classes = [pgeometry.class_of(field, a) for a in self.reps]
            for i in range(len(self.reps)):
                for j in range(i + 1, len(self.reps)):
                    if self.reps[j] in classes[i]:
                        raise ConjugateRepsError(
                            f"representatives {i} and {j} are conjugate"
                        )
            return True
        # Rational kind: with delta = 0 classes are singletons, so equality
        # decides; with d/dz only equal reps are certainly conjugate and the
        # rest is asserted by the caller.
        for i in range(len(self.reps)):
            for j in range(i + 1, len(self.reps)):
                if self.reps[i] == self.reps[j]:
                    raise ConjugateRepsError(f"representatives {i} and {j} are equal")
        return not getattr(field, "derivation", False)

    # -- derived views ------------------------------------------------------

    @property
    def ell(self) -> int:
        return len(self.reps)

    @property
    def skew_basis(self) -> tuple:
        """Derived evaluation points: the conjugate of each rep by its witness."""
        return tuple(
            pgeometry.conjugate_of(self.field, a, b)
            for a, block in zip(self.reps, self.betas)
            for b in block
        )

    def generator_matrix(self) -> "GeneratorMatrix":
        """The k x n matrix of operator powers of the witnesses."""
        if self._genmat is None:
            cols = [
                self.ring.operator_powers(a, b, max(self.k, 1))
                for a, block in zip(self.reps, self.betas)
                for b in block
            ]
            rows = tuple(
                tuple(col[l] for col in cols) for l in range(self.k)
            )
            self._genmat = GeneratorMatrix(self.field, rows, self.lengths, self.tags)
        return self._genmat

    def encode(self, message: Sequence[Element]) -> BlockVector:
        return self.generator_matrix().encode(message)

    def phi_map(self, f: SkewPoly | Sequence[Element]) -> BlockVector:
        """Operator evaluation of a skew polynomial at every witness.

        This is the linearization map: it carries the skew Reed-Solomon code
        of each dimension onto this code, block by block.
        """
        coeffs = f.coeffs if isinstance(f, SkewPoly) else self.ring.poly(f).coeffs
        if len(coeffs) > self.n:
            raise ValueError(f"polynomial degree must be below n = {self.n}")
        blocks = tuple(
            tuple(self.ring.operator_eval(a, coeffs, b) for b in block)
            for a, block in zip(self.reps, self.betas)
        )
        return BlockVector(self.field, blocks, self.tags)

    def skew_weight(self, f: SkewPoly | Sequence[Element]) -> int:
        """Skew weight through the linearized route (works for both kinds)."""
        from .metrics import sum_rank_weight

        return sum_rank_weight(self.phi_map(f))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CodeSpec)
            and self.field == other.field
            and self.reps == other.reps
            and self.betas == other.betas
            and self.k == other.k
        )

    def __hash__(self) -> int:
        return hash((self.field, self.reps, self.betas, self.k))

    def __repr__(self) -> str:
        fmt = self.field.format_element
        reps = ",".join(fmt(a) for a in self.reps)
        return f"<CodeSpec n={self.n} k={self.k} reps=({reps})>"


@dataclass(frozen=True)
class GeneratorMatrix:
    """Row-major k x n matrix of field elements, block-partitioned."""

    field: Field
    rows: tuple
    lengths: tuple
    tags: tuple

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return sum(self.lengths)

    def encode(self, message: Sequence[Element]) -> BlockVector:
        if len(message) != self.k:
            raise ValueError(f"message length {len(message)} != dimension {self.k}")
        if self.k == 0:
            flat = (self.field.zero,) * self.n
        else:
            flat = linalg.vec_mat_mul(self.field, message, self.rows)
        blocks = []
        offset = 0
        for length in self.lengths:
            blocks.append(flat[offset : offset + length])
            offset += length
        return BlockVector(self.field, tuple(blocks), self.tags)

    def row_rank(self) -> int:
        return linalg.rank(self.field, self.rows)


def build_skew_rs(ring: SkewPolyRing, points: Sequence[Element], k: int):
    """Evaluation table of the monomials x^0..x^{k-1} on a P-independent set.

    Row l lists the evaluations of x^l, so the rows generate the
    k-dimensional skew Reed-Solomon code on those points.
    """
    if not pgeometry.is_p_independent(ring, points):
        raise pgeometry.DependentPointsError("evaluation points are not P-independent")
    if not 0 <= k <= len(points):
        raise DimensionRangeError(f"dimension {k} outside 0..{len(points)}")
    if k == 0:
        return ()
    vand = pgeometry.skew_vandermonde(ring, points, k)
    return tuple(tuple(row) for row in vand)


def pi_change_basis(
    ring: SkewPolyRing,
    from_basis: Sequence[Element],
    to_basis: Sequence[Element],
    values: Sequence[Element],
) -> tuple:
    """Re-express evaluation values from one P-basis to another of the same closure."""
    from_set = pgeometry.minimal_skew_poly(ring, from_basis)
    to_set = pgeometry.minimal_skew_poly(ring, to_basis)
    if from_set.rank != len(from_basis) or to_set.rank != len(to_basis):
        raise pgeometry.DependentPointsError("both bases must be P-independent")
    if from_set.min_poly != to_set.min_poly:
        raise ClosureMismatchError("bases generate different P-closures")
    f = pgeometry.lagrange_interpolate(ring, from_basis, values)
    return tuple(f.evaluate(b) for b in to_basis)
