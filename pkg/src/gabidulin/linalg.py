"""Dense exact linear algebra over an extension field.

Matrices are sequences of equal-length rows of canonical field ints; all
routines are pure and return tuples of tuples.  Everything here is plain
Gaussian elimination with division, which is exact over a finite field.
"""

from __future__ import annotations

from collections.abc import Sequence

from .fields import FieldCtx

__all__ = ["mat_mul", "identity", "det", "rank", "rref", "mat_vec"]

Matrix = Sequence[Sequence[int]]


def identity(size: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(size)) for i in range(size))


def mat_mul(ctx: FieldCtx, a: Matrix, b: Matrix) -> tuple[tuple[int, ...], ...]:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        arow = a[i]
        orow = out[i]
        for t in range(inner):
            x = arow[t]
            if x == 0:
                continue
            brow = b[t]
            for j in range(cols):
                y = brow[j]
                if y:
                    orow[j] = ctx.add(orow[j], ctx.mul(x, y))
    return tuple(tuple(r) for r in out)


def mat_vec(ctx: FieldCtx, m: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    out = []
    for row in m:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = ctx.add(acc, ctx.mul(x, y))
        out.append(acc)
    return tuple(out)


def _eliminate(ctx: FieldCtx, m: Matrix, reduced: bool):
    """Forward elimination; returns (rows, pivot column list, swap count)."""
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: list[int] = []
    swaps = 0
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
            swaps += 1
        inv = ctx.inv(rows[r][c])
        if reduced:
            rows[r] = [ctx.mul(inv, x) for x in rows[r]]
            inv = 1
        targets = range(nrows) if reduced else range(r + 1, nrows)
        for i in targets:
            if i == r or rows[i][c] == 0:
                continue
            f = ctx.mul(rows[i][c], inv)
            rows[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots, swaps


def rank(ctx: FieldCtx, m: Matrix) -> int:
    if not m:
        return 0
    _, pivots, _ = _eliminate(ctx, m, reduced=False)
    return len(pivots)


def det(ctx: FieldCtx, m: Matrix) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    rows, pivots, swaps = _eliminate(ctx, m, reduced=False)
    if len(pivots) < n:
        return 0
    d = 1
    for i in range(n):
        d = ctx.mul(d, rows[i][i])
    if swaps % 2:
        d = ctx.neg(d)
    return d


def rref(ctx: FieldCtx, m: Matrix) -> tuple[tuple[int, ...], ...]:
    """Reduced row-echelon form with zero rows dropped (canonical row space)."""
    if not m:
        return ()
    rows, pivots, _ = _eliminate(ctx, m, reduced=True)
    return tuple(tuple(r) for r in rows[: len(pivots)])
