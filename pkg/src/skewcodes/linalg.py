"""Exact Gaussian elimination over field descriptors.

Entries are field elements; pivoting is first-nonzero and deterministic.
Rank computations over the rational kind go through fraction-free
(Bareiss) elimination on cleared-denominator polynomial matrices, which
keeps intermediate degrees bounded by minors of the input.
"""

from __future__ import annotations

from typing import Sequence

from . import gfpoly
from .fields import Field


class SingularMatrixError(ValueError):
    """Square system without a unique solution."""


def _rref(field: Field, rows: list[list]) -> tuple[list[list], list[int]]:
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    pivots: list[int] = []
    prow = 0
    for col in range(ncols):
        pr = next((i for i in range(prow, m) if not field.is_zero(rows[i][col])), None)
        if pr is None:
            continue
        rows[prow], rows[pr] = rows[pr], rows[prow]
        inv = field.inv(rows[prow][col])
        rows[prow] = [field.mul(inv, c) for c in rows[prow]]
        for i in range(m):
            if i != prow and not field.is_zero(rows[i][col]):
                f = rows[i][col]
                rows[i] = [
                    field.sub(rows[i][j], field.mul(f, rows[prow][j]))
                    for j in range(ncols)
                ]
        pivots.append(col)
        prow += 1
        if prow == m:
            break
    return rows, pivots


def rank(field: Field, rows: Sequence[Sequence]) -> int:
    """Rank of a matrix of field elements."""
    work = [list(r) for r in rows]
    if not work or not work[0]:
        return 0
    if field.kind == "rational":
        return _rank_fraction_free(field.p, work)
    return len(_rref(field, work)[1])


def _clear_denominators(p: int, row: list) -> list:
    """Scale a row of (num, den) fractions into polynomial entries."""
    common = (1,)
    for _, den in row:
        g = gfpoly.gcd(p, common, den)
        common = gfpoly.mul(p, common, gfpoly.divmod_poly(p, den, g)[0])
    out = []
    for num, den in row:
        factor, rem = gfpoly.divmod_poly(p, common, den)
        assert not rem
        out.append(gfpoly.mul(p, num, factor))
    return out


def _rank_fraction_free(p: int, rows: list[list]) -> int:
    m = [_clear_denominators(p, row) for row in rows]
    nrows = len(m)
    ncols = len(m[0])
    prev = (1,)
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for j in range(col + 1, ncols):
                num = gfpoly.sub(
                    p,
                    gfpoly.mul(p, m[r][col], m[i][j]),
                    gfpoly.mul(p, m[i][col], m[r][j]),
                )
                q, rem = gfpoly.divmod_poly(p, num, prev)
                assert not rem, "fraction-free division left a remainder"
                m[i][j] = q
            m[i][col] = ()
        prev = m[r][col]
        r += 1
        if r == nrows:
            break
    return r


def solve_consistent(field: Field, rows: Sequence[Sequence], rhs: Sequence):
    """Solve A x = rhs; return the solution tuple, or None if inconsistent.

    Requires the solution to be unique when it exists (full column rank);
    an underdetermined consistent system raises SingularMatrixError.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = _rref(field, aug)
    if ncols in pivots:
        return None
    if len(pivots) < ncols:
        raise SingularMatrixError("underdetermined linear system")
    sol = [field.zero] * ncols
    for i, col in enumerate(pivots):
        sol[col] = red[i][ncols]
    return tuple(sol)


def solve(field: Field, rows: Sequence[Sequence], rhs: Sequence):
    """Unique solution of a consistent full-column-rank system."""
    sol = solve_consistent(field, rows, rhs)
    if sol is None:
        raise SingularMatrixError("inconsistent linear system")
    return sol


def invert(field: Field, rows: Sequence[Sequence]) -> list[list]:
    """Inverse of a square matrix of field elements."""
    n = len(rows)
    aug = [list(r) + [field.one if i == j else field.zero for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = _rref(field, aug)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in red]


def mat_mul(field: Field, a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    """Matrix product with exact field arithmetic."""
    inner = len(b)
    ncols = len(b[0]) if inner else 0
    out = []
    for row in a:
        new = []
        for j in range(ncols):
            acc = field.zero
            for t in range(inner):
                if not field.is_zero(row[t]):
                    acc = field.add(acc, field.mul(row[t], b[t][j]))
            new.append(acc)
        out.append(new)
    return out


def vec_mat_mul(field: Field, vec: Sequence, rows: Sequence[Sequence]) -> tuple:
    """Row vector times matrix."""
    ncols = len(rows[0]) if rows else 0
    out = []
    for j in range(ncols):
        acc = field.zero
        for c, row in zip(vec, rows):
            if not field.is_zero(c):
                acc = field.add(acc, field.mul(c, row[j]))
        out.append(acc)
    return tuple(out)
