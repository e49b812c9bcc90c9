"""Exact integer and rational matrix routines.

Everything here works on plain lists/tuples of Python ints (or Fractions
where noted); there is no floating point anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def mat_mul(a, b):
    if not a:
        return []
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(m, v):
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def vec_mat(v, m):
    return [sum(x * row[j] for x, row in zip(v, m)) for j in range(len(m[0]))]


def is_symmetric(m) -> bool:
    n = len(m)
    return all(len(row) == n for row in m) and all(
        m[i][j] == m[j][i] for i in range(n) for j in range(n)
    )


def det_bareiss(mat) -> int:
    """Fraction-free determinant of a square integer matrix."""
    a = [list(row) for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form ``left * m * right = diag(diagonal)``.

    ``diagonal`` entries are nonnegative with d1 | d2 | ... ; ``left`` and
    ``right`` are unimodular.
    """

    diagonal: tuple[int, ...]
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(mat) -> SNFResult:
    a = [[int(x) for x in row] for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    left = identity(m)
    right = identity(n)

    def row_add(i, j, k):  # row_i += k * row_j
        a[i] = [x + k * y for x, y in zip(a[i], a[j])]
        left[i] = [x + k * y for x, y in zip(left[i], left[j])]

    def col_add(i, j, k):  # col_i += k * col_j
        for r in range(m):
            a[r][i] += k * a[r][j]
        for r in range(n):
            right[r][i] += k * right[r][j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def col_swap(i, j):
        for r in range(m):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(n):
            right[r][i], right[r][j] = right[r][j], right[r][i]

    t = 0
    while t < min(m, n):
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        while True:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_add(i, t, -q)
                    if a[i][t]:
                        row_swap(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_add(j, t, -q)
                    if a[t][j]:
                        col_swap(t, j)
                        dirty = True
            if not dirty and all(a[i][t] == 0 for i in range(t + 1, m)) and all(
                a[t][j] == 0 for j in range(t + 1, n)
            ):
                break
        d = a[t][t]
        offender = None
        for i in range(t + 1, m):
            if any(a[i][j] % d for j in range(t + 1, n)):
                offender = i
                break
        if offender is not None:
            row_add(t, offender, 1)
            continue
        if d < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
        t += 1

    diag = tuple(a[i][i] for i in range(min(m, n)))
    return SNFResult(diag, tuple(map(tuple, left)), tuple(map(tuple, right)))


def frac_inverse(mat) -> list[list[Fraction]]:
    """Inverse of a nonsingular square matrix, by Gauss-Jordan over Q."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def int_inverse(mat) -> Matrix:
    """Inverse of a unimodular integer matrix, as an integer matrix."""
    inv = frac_inverse(mat)
    out = []
    for row in inv:
        irow = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            irow.append(int(x))
        out.append(irow)
    return out


def kernel_basis(mat) -> list[list[int]]:
    """Basis of the right integer kernel {x : mat @ x = 0}.

    The returned vectors span a saturated (primitive) sublattice of Z^n.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    if m == 0:
        return [list(row) for row in identity(n)]
    snf = smith_normal_form(mat)
    r = snf.rank
    cols = transpose(snf.right)
    return [list(cols[j]) for j in range(r, n)]


def row_lattice_basis(rows) -> list[list[int]]:
    """Basis of the Z-span of the given integer row vectors."""
    if not rows:
        return []
    snf = smith_normal_form(rows)
    rinv = int_inverse(snf.right)
    return [[d * x for x in rinv[i]] for i, d in enumerate(snf.diagonal) if d != 0]


def solve_int(mat, rhs) -> tuple[list[int], list[list[int]]] | None:
    """All integer solutions of mat @ x = rhs: (particular, kernel basis).

    Returns None when no integer solution exists.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    if m == 0:
        return [0] * n, [list(row) for row in identity(n)]
    snf = smith_normal_form(mat)
    r = snf.rank
    lrhs = mat_vec(snf.left, rhs)
    y = [0] * n
    for i in range(r):
        if lrhs[i] % snf.diagonal[i]:
            return None
        y[i] = lrhs[i] // snf.diagonal[i]
    if any(lrhs[i] != 0 for i in range(r, m)):
        return None
    part = mat_vec(snf.right, y)
    cols = transpose(snf.right)
    return part, [list(cols[j]) for j in range(r, n)]
