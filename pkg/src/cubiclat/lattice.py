"""Integral lattices: Gram matrices, invariants and generic operations.

A lattice is a symmetric integer Gram matrix together with an implicit
basis; vectors are coordinate tuples in that basis.  All operations are
pure functions over immutable values and use exact arithmetic only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .linalg import (
    det_bareiss,
    frac_inverse,
    identity,
    int_inverse,
    is_symmetric,
    kernel_basis,
    mat_mul,
    mat_vec,
    smith_normal_form,
    solve_int,
    transpose,
)

Vector = tuple[int, ...]


class LatticeError(ValueError):
    """Base class for lattice input errors."""


class DegenerateLatticeError(LatticeError):
    """A metric operation was applied to a degenerate Gram matrix."""


class IndefiniteLatticeError(LatticeError):
    """A definite-only operation was applied to an indefinite lattice."""


class RankLimitError(LatticeError):
    """Operation restricted to small rank received a larger lattice."""


@dataclass(frozen=True)
class IntegralLattice:
    gram: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        if not is_symmetric(gram):
            raise LatticeError("Gram matrix must be symmetric")
        if self.labels is not None and len(self.labels) != len(gram):
            raise LatticeError("label count does not match rank")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def inner(self, v: Vector, w: Vector) -> int:
        if len(v) != self.rank or len(w) != self.rank:
            raise LatticeError("vector length does not match lattice rank")
        return sum(v[i] * self.gram[i][j] * w[j]
                   for i in range(self.rank) for j in range(self.rank))

    def norm(self, v: Vector) -> int:
        return self.inner(v, v)

    def sublattice_gram(self, rows) -> "IntegralLattice":
        b = [list(r) for r in rows]
        g = mat_mul(mat_mul(b, [list(r) for r in self.gram]), transpose(b))
        return IntegralLattice(tuple(tuple(row) for row in g))

    def require_nondegenerate(self):
        if determinant(self) == 0:
            raise DegenerateLatticeError("operation requires a nondegenerate lattice")


def lattice(gram, labels=None) -> IntegralLattice:
    return IntegralLattice(tuple(tuple(row) for row in gram),
                           tuple(labels) if labels is not None else None)


def determinant(l: IntegralLattice) -> int:
    return det_bareiss(l.gram)


def signature(l: IntegralLattice) -> tuple[int, int, int]:
    """Sylvester signature (positive, negative, zero) by exact symmetric
    elimination over the rationals."""
    n = l.rank
    a = [[Fraction(x) for x in row] for row in l.gram]
    pos = neg = 0

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            off = next(((i, j) for i in range(k, n) for j in range(i + 1, n)
                        if a[i][j] != 0), None)
            if off is None:
                break  # remaining block is zero
            i, j = off
            # congruence: row/col i += row/col j makes a[i][i] = 2*a[i][j] != 0
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            piv = i
        swap(k, piv)
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                for c in range(n):
                    a[i][c] -= f * a[k][c]
                for r in range(n):
                    a[r][i] -= f * a[r][k]
        k += 1
    zero = n - pos - neg
    return pos, neg, zero


def is_even(l: IntegralLattice) -> bool:
    return all(l.gram[i][i] % 2 == 0 for i in range(l.rank))


def twist(l: IntegralLattice, n: int) -> IntegralLattice:
    if n == 0:
        raise LatticeError("twist factor must be nonzero")
    return IntegralLattice(tuple(tuple(n * x for x in row) for row in l.gram), l.labels)


def saturation(l: IntegralLattice, rows) -> tuple[list[Vector], int]:
    """Saturated sublattice (Q-span of rows) âˆ© L, plus the index of the
    original span inside it."""
    s = [list(r) for r in rows]
    if not s:
        return [], 1
    snf = smith_normal_form(s)
    if snf.rank != len(s):
        raise LatticeError("sublattice basis is not linearly independent")
    rinv = int_inverse(snf.right)
    sat = [tuple(rinv[i]) for i in range(len(s))]
    index = 1
    for d in snf.diagonal:
        index *= d
    return sat, index


def orthogonal_complement(l: IntegralLattice, rows) -> list[Vector]:
    """Basis of the saturated sublattice orthogonal to every row vector."""
    l.require_nondegenerate()
    s = [list(r) for r in rows]
    if not s:
        return [tuple(int(i == j) for j in range(l.rank)) for i in range(l.rank)]
    pairing = mat_mul(s, [list(r) for r in l.gram])
    return [tuple(v) for v in kernel_basis(pairing)]


def _ldl(gram_frac):
    """G = L D L^T with L unit lower triangular; raises on non-PD input."""
    n = len(gram_frac)
    lo = [[Fraction(0)] * n for _ in range(n)]
    d = [Fraction(0)] * n
    for i in range(n):
        d[i] = gram_frac[i][i] - sum(lo[i][k] ** 2 * d[k] for k in range(i))
        if d[i] <= 0:
            raise IndefiniteLatticeError("Gram matrix is not positive definite")
        lo[i][i] = Fraction(1)
        for j in range(i + 1, n):
            lo[j][i] = (gram_frac[j][i] - sum(lo[j][k] * lo[i][k] * d[k]
                                              for k in range(i))) / d[i]
    return lo, d


def _floor_sqrt(f: Fraction) -> int:
    if f < 0:
        return -1
    return isqrt(f.numerator * f.denominator) // f.denominator


def _ellipsoid_points(gram_frac, mu, target: Fraction) -> list[Vector]:
    """All integer z with (z - mu)^T G (z - mu) = target, G positive definite."""
    n = len(gram_frac)
    if n == 0:
        return [()] if target == 0 else []
    lo, d = _ldl(gram_frac)
    out = []
    z = [0] * n

    def descend(i: int, rem: Fraction):
        if i < 0:
            if rem == 0:
                out.append(tuple(z))
            return
        c = -mu[i] + sum(lo[j][i] * (z[j] - mu[j]) for j in range(i + 1, n))
        bound = _floor_sqrt(rem / d[i]) + 1
        center = -c
        base = center.numerator // center.denominator
        for zi in range(base - bound, base + bound + 2):
            step = d[i] * (zi + c) ** 2
            if step <= rem:
                z[i] = zi
                descend(i - 1, rem - step)
        z[i] = 0

    if target < 0:
        return []
    descend(n - 1, target)
    return sorted(out)


def _canonical_sign(v: Vector) -> Vector:
    for x in v:
        if x > 0:
            return v
        if x < 0:
            return tuple(-y for y in v)
    return v


def enumerate_vectors(l: IntegralLattice, norm: int) -> list[Vector]:
    """All vectors of the given positive norm in a positive definite lattice,
    one per +/- pair, in lexicographic order with positive leading entry."""
    if norm < 0:
        raise LatticeError("norm must be nonnegative")
    l.require_nondegenerate()
    g = [[Fraction(x) for x in row] for row in l.gram]
    _ldl(g)  # raises IndefiniteLatticeError unless positive definite
    if norm == 0:
        return []
    zero = [Fraction(0)] * l.rank
    pts = _ellipsoid_points(g, zero, Fraction(norm))
    return sorted({_canonical_sign(v) for v in pts})


def vectors_with_pairings(l: IntegralLattice, fixed, pairings, norm: int) -> list[Vector]:
    """All v with v.v = norm and v.w_i = pairings[i] for the fixed vectors w_i.

    Finite whenever the orthogonal complement of the fixed vectors is
    definite, which covers positive definite lattices and hyperbolic-type
    lattices once a positive-norm vector is fixed.
    """
    l.require_nondegenerate()
    n = l.rank
    g = [list(r) for r in l.gram]
    fixed = [list(w) for w in fixed]
    if fixed:
        constraint = mat_mul(fixed, g)
        sol = solve_int(constraint, list(pairings))
        if sol is None:
            return []
        z0, ker = sol
    else:
        z0, ker = [0] * n, identity(n)
    if not ker:
        return [tuple(z0)] if l.norm(tuple(z0)) == norm else []
    nmat = transpose(ker)  # n x k, columns = kernel basis
    gz = mat_mul(mat_mul(ker, g), transpose(ker))  # k x k
    b = mat_vec(ker, mat_vec(g, z0))
    c0 = l.norm(tuple(z0))
    gw = [[Fraction(x) for x in row] for row in gz]
    bf = [Fraction(x) for x in b]
    cf, tgt = Fraction(c0), Fraction(norm)
    try:
        _ldl(gw)
        posdef = True
    except IndefiniteLatticeError:
        posdef = False
    if not posdef:
        gw = [[-x for x in row] for row in gw]
        bf = [-x for x in bf]
        cf, tgt = -cf, -tgt
        _ldl(gw)  # must be definite one way or the other
    ginv = frac_inverse(gw)
    mu = [-sum(ginv[i][j] * bf[j] for j in range(len(bf))) for i in range(len(bf))]
    # complete the square: f(w) = (w - mu)^T G (w - mu) + cf - b^T G^-1 b
    shift = tgt - cf + sum(bf[i] * sum(ginv[i][j] * bf[j] for j in range(len(bf)))
                           for i in range(len(bf)))
    pts = _ellipsoid_points(gw, mu, shift)
    out = []
    for w in pts:
        v = tuple(z0[i] + sum(nmat[i][j] * w[j] for j in range(len(w)))
                  for i in range(n))
        out.append(v)
    return sorted(out)


def _complete_primitive(v: Vector) -> list[list[int]]:
    """Basis of Z^n whose first row is the primitive vector v."""
    snf = smith_normal_form([list(v)])
    if snf.diagonal[0] != 1:
        raise LatticeError("vector is not primitive")
    rinv = int_inverse(snf.right)
    if tuple(rinv[0]) != tuple(v):
        # first row spans <v> with index 1, so it is +/- v
        rinv[0] = list(v)
    return rinv


def is_isometric_definite(l1: IntegralLattice, l2: IntegralLattice,
                          marked: tuple[Vector, Vector] | None = None):
    """Decide isometry of small lattices by vector matching.

    Supports definite lattices of rank <= 4, and indefinite lattices when a
    marked pair of positive-norm vectors is given (the witness must map the
    first to the second).  Returns (flag, witness) where witness maps
    row-coordinate vectors of l1 to l2 via v @ witness.
    """
    if l1.rank > 4 or l2.rank > 4:
        raise RankLimitError("isometry testing is limited to rank <= 4")
    if l1.rank != l2.rank:
        return False, None
    l1.require_nondegenerate()
    l2.require_nondegenerate()
    if signature(l1) != signature(l2) or determinant(l1) != determinant(l2):
        return False, None
    n = l1.rank
    if n == 0:
        return True, ()
    sig = signature(l1)
    if sig[1] == 0:
        g1, g2 = l1, l2
        flip = False
    elif sig[0] == 0:
        g1, g2 = twist(l1, -1), twist(l2, -1)
        flip = True
    else:
        if marked is None:
            raise IndefiniteLatticeError(
                "indefinite isometry testing requires marked vectors")
        g1, g2 = l1, l2
        flip = False

    if marked is not None:
        m1, m2 = tuple(marked[0]), tuple(marked[1])
        if l1.norm(m1) != l2.norm(m2):
            return False, None
        basis = _complete_primitive(m1)
        target_gram = g1.sublattice_gram(basis).gram
        forced = [m2]
    else:
        basis = identity(n)
        target_gram = g1.gram
        forced = None

    images: list[Vector] = []

    def extend(k: int) -> bool:
        if k == n:
            return True
        want_norm = target_gram[k][k]
        want_pair = [target_gram[k][j] for j in range(k)]
        if k == 0:
            if forced is not None:
                cands = [forced[0]]
            else:
                cands = []
                for v in enumerate_vectors(g2, want_norm):
                    cands.extend((v, tuple(-x for x in v)))
        else:
            cands = vectors_with_pairings(g2, images, want_pair, want_norm)
        for v in cands:
            images.append(v)
            if extend(k + 1):
                return True
            images.pop()
        return False

    if not extend(0):
        return False, None
    w_basis = [list(v) for v in images]
    binv = frac_inverse(basis)
    witness_frac = mat_mul([[x for x in row] for row in binv], w_basis)
    witness = []
    for row in witness_frac:
        witness.append(tuple(int(x) for x in row))
    # sanity: witness must carry gram1 to gram2
    check = mat_mul(mat_mul([list(r) for r in witness],
                            [list(r) for r in (twist(g2, -1) if flip else g2).gram]),
                    transpose([list(r) for r in witness]))
    base1 = (twist(g1, -1) if flip else g1).gram
    if tuple(tuple(row) for row in check) != base1:
        raise AssertionError("isometry witness failed verification")
    return True, tuple(witness)
