"""Small dense matrix helpers over cyclotomic fields (lists of lists)."""

from __future__ import annotations

from typing import Sequence

from .arith import Cyclotomic, as_cyclotomic, lcm

Matrix = list[list[Cyclotomic]]

ZERO = as_cyclotomic(0)
ONE = as_cyclotomic(1)


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} @ {len(b)}x{len(b[0])}")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = ZERO
            for k, x in enumerate(row):
                if x:
                    y = b[k][j]
                    if y:
                        acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def kron(a: Matrix, b: Matrix) -> Matrix:
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def trace(a: Matrix) -> Cyclotomic:
    acc = ZERO
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b)
    return [list(r) + [ZERO] * m for r in a] + [[ZERO] * n + list(r) for r in b]


def common_order(rows: Sequence[Sequence[Cyclotomic]]) -> int:
    return lcm(*(c.order for r in rows for c in r))


def inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises ZeroDivisionError on singular input."""
    n = len(a)
    m = [list(r) + e for r, e in zip(a, identity(n))]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inverse()
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def rank(a: Sequence[Sequence[Cyclotomic]]) -> int:
    """Rank by fraction-free (Bareiss) elimination."""
    if not a:
        return 0
    order = common_order(a)
    m = [[as_cyclotomic(x).lift(order) for x in row] for row in a]
    rows, cols = len(m), len(m[0])
    prev = ONE.lift(order)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[i][j] * p - m[i][c] * m[r][j]) / prev
            m[i][c] = ZERO
        prev = p
        r += 1
    return r
