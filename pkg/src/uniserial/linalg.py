"""Dense exact linear algebra over Fraction or Fp entries.

Matrices are plain lists of rows.  Elimination routines need division; the
product/difference helpers only need ring operations, so they also work on
matrices of polynomials or dual numbers.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list  # list[list[scalar]]


def zeros(rows: int, cols: int, zero=0) -> Matrix:
    return [[zero] * cols for _ in range(rows)]


def identity(n: int, zero=0, one=1) -> Matrix:
    m = zeros(n, n, zero)
    for i in range(n):
        m[i][i] = one
    return m


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k = shape(a)
    k2, c = shape(b)
    if k != k2:
        raise ValueError(f"shape mismatch {shape(a)} x {shape(b)}")
    out = []
    for row in a:
        nz = [(j, x) for j, x in enumerate(row) if x != 0]
        new = []
        for col in range(c):
            s = 0
            for j, x in nz:
                y = b[j][col]
                if y != 0:
                    s = s + x * y
            new.append(s)
        out.append(new)
    return out


def matvec(a: Matrix, v: list) -> list:
    out = []
    for row in a:
        s = 0
        for x, y in zip(row, v):
            if x != 0 and y != 0:
                s = s + x * y
        out.append(s)
    return out


def matsub(a: Matrix, b: Matrix) -> Matrix:
    if shape(a) != shape(b):
        raise ValueError("shape mismatch")
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def column(m: Matrix, j: int) -> list:
    return [row[j] for row in m]


def is_zero(m: Matrix) -> bool:
    return all(x == 0 for row in m for x in row)


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns.  The input is not modified."""
    a = [list(row) for row in m if any(x != 0 for x in row)]
    rows, cols = shape(a)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        piv_val = a[r][c]
        inv = Fraction(1, piv_val) if isinstance(piv_val, int) else 1 / piv_val
        a[r] = [x * inv for x in a[r]]
        pivot_row = a[r]
        nzc = [j for j in range(c, cols) if pivot_row[j] != 0]
        for i in range(rows):
            if i != r:
                f = a[i][c]
                if f != 0:
                    row = a[i]
                    for j in nzc:
                        row[j] = row[j] - f * pivot_row[j]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m: Matrix) -> int:
    if not m or not m[0]:
        return 0
    return len(rref(m)[1])


def nullspace(m: Matrix, cols: int | None = None, zero=0, one=1) -> list[list]:
    """Basis of ``{v : m v = 0}``; ``cols`` is required when ``m`` has no rows."""
    if cols is None:
        cols = shape(m)[1]
    if not m:
        return [[one if i == j else zero for i in range(cols)] for j in range(cols)]
    r, pivots = rref(m)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * cols
        v[f] = one
        for row, pc in zip(r, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(m: Matrix, b: list):
    """Some solution of ``m x = b``, or ``None`` when the system is inconsistent."""
    rows, cols = shape(m)
    if rows != len(b):
        raise ValueError("right-hand side has the wrong length")
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    zero = b[0] * 0 if b else 0
    x = [zero] * cols
    for row, pc in zip(r, pivots):
        x[pc] = row[cols]
    return x
