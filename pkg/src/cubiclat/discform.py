"""Discriminant groups, finite quadratic forms and overlattices.

The discriminant group of a nondegenerate lattice is the cokernel of its
Gram matrix; on an even lattice it carries a quadratic form valued in
Q/2Z whose Gauss sum yields the mod 8 signature (Milgram).  Isotropic
subgroups of that form classify the even finite-index overlattices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, lcm

from .cyclotomic import is_zero_root_sum, real_sum_sign
from .lattice import IntegralLattice, LatticeError, determinant, is_even
from .linalg import (
    frac_inverse,
    identity,
    int_inverse,
    mat_mul,
    row_lattice_basis,
    smith_normal_form,
    transpose,
)


class OddLatticeError(LatticeError):
    """Quadratic refinement requested for an odd lattice."""


class GroupOrderBoundError(LatticeError):
    """Subgroup enumeration refused: discriminant group too large."""


@dataclass(frozen=True)
class DiscriminantGroup:
    """Lambda^vee / Lambda as a product of cyclic groups.

    ``generator_lifts`` are integer coordinate vectors in the dual basis;
    ``rational_lifts`` gives the same elements in lattice-basis coordinates.
    """

    invariants: tuple[int, ...]
    generator_lifts: tuple[tuple[int, ...], ...]
    rational_lifts: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariants:
            n *= d
        return n

    def elements(self):
        return product(*[range(d) for d in self.invariants])


def discriminant_group(l: IntegralLattice) -> DiscriminantGroup:
    l.require_nondegenerate()
    gram = [list(r) for r in l.gram]
    snf = smith_normal_form(gram)
    linv = int_inverse([list(r) for r in snf.left])
    binv = frac_inverse(gram)
    invariants = []
    dual_lifts = []
    rat_lifts = []
    for i, d in enumerate(snf.diagonal):
        if d > 1:
            invariants.append(d)
            dual = [linv[r][i] for r in range(l.rank)]
            dual_lifts.append(tuple(dual))
            rat_lifts.append(tuple(sum(binv[r][c] * dual[c] for c in range(l.rank))
                                   for r in range(l.rank)))
    return DiscriminantGroup(tuple(invariants), tuple(dual_lifts), tuple(rat_lifts))


@dataclass(frozen=True)
class FiniteQuadraticForm:
    """Bilinear (Q/Z) and, for even lattices, quadratic (Q/2Z) values on the
    generators of a discriminant group."""

    group: DiscriminantGroup
    bilinear: tuple[tuple[Fraction, ...], ...]
    quadratic: tuple[Fraction, ...] | None

    @property
    def order(self) -> int:
        return self.group.order

    def b(self, x, y) -> Fraction:
        k = len(self.group.invariants)
        total = sum(x[i] * y[j] * self.bilinear[i][j]
                    for i in range(k) for j in range(k))
        return Fraction(total) % 1

    def q(self, x) -> Fraction:
        if self.quadratic is None:
            raise OddLatticeError("no quadratic refinement on this form")
        k = len(self.group.invariants)
        total = sum(x[i] * x[i] * self.quadratic[i] for i in range(k))
        total += sum(2 * x[i] * x[j] * self.bilinear[i][j]
                     for i in range(k) for j in range(i + 1, k))
        return Fraction(total) % 2


def _form_from_lifts(l: IntegralLattice, group: DiscriminantGroup,
                     with_quadratic: bool) -> FiniteQuadraticForm:
    k = len(group.invariants)
    gram = [list(r) for r in l.gram]
    pair = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            gi, gj = group.rational_lifts[i], group.rational_lifts[j]
            pair[i][j] = sum(gi[a] * gram[a][b] * gj[b]
                             for a in range(l.rank) for b in range(l.rank))
    bilinear = tuple(tuple(pair[i][j] % 1 for j in range(k)) for i in range(k))
    quadratic = tuple(pair[i][i] % 2 for i in range(k)) if with_quadratic else None
    return FiniteQuadraticForm(group, bilinear, quadratic)


def discriminant_bilinear_form(l: IntegralLattice) -> FiniteQuadraticForm:
    return _form_from_lifts(l, discriminant_group(l), with_quadratic=False)


def discriminant_quadratic_form(l: IntegralLattice) -> FiniteQuadraticForm:
    if not is_even(l):
        raise OddLatticeError(
            "quadratic discriminant form is defined for even lattices only")
    return _form_from_lifts(l, discriminant_group(l), with_quadratic=True)


def gauss_milgram_signature(q: FiniteQuadraticForm) -> int:
    """Mod 8 phase sigma with sum_x exp(pi*i*q(x)) = sqrt(|A|) * zeta_8^sigma.

    Evaluated exactly as a sum of roots of unity; the modulus identity
    |sum|^2 = |A| is verified as part of the computation.
    """
    if q.quadratic is None:
        raise OddLatticeError("Gauss sum needs a quadratic refinement")
    phases = []
    for x in q.group.elements():
        phases.append(q.q(x) / 2 % 1)
    n = 8
    for t in phases:
        n = lcm(n, t.denominator)
    counts = [0] * n
    for t in phases:
        counts[int(t * n)] += 1
    order = q.order
    # |S|^2 = |A|
    sq = [0] * n
    for j, cj in enumerate(counts):
        if cj:
            for k, ck in enumerate(counts):
                if ck:
                    sq[(j - k) % n] += cj * ck
    sq[0] -= order
    if not is_zero_root_sum(sq, n):
        raise ArithmeticError("Gauss sum modulus check failed")
    eighth = n // 8
    for sigma in range(8):
        shifted = [counts[(k + sigma * eighth) % n] for k in range(n)]
        imag = [shifted[k] - shifted[(n - k) % n] for k in range(n)]
        if not is_zero_root_sum(imag, n):
            continue
        if real_sum_sign(shifted, n) > 0:
            return sigma
    raise ArithmeticError("Gauss sum phase is not an eighth root of unity")


@dataclass(frozen=True)
class IsotropicSubgroup:
    """A subgroup of the discriminant group on which q vanishes."""

    elements: tuple[tuple[int, ...], ...]
    lifts: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def _lift(group: DiscriminantGroup, x) -> tuple[Fraction, ...]:
    rank = len(group.rational_lifts[0]) if group.rational_lifts else 0
    out = [Fraction(0)] * rank
    for a, g in zip(x, group.rational_lifts):
        for i in range(rank):
            out[i] += a * g[i]
    return tuple(out)


def isotropic_subgroups(q: FiniteQuadraticForm, bound: int = 10**4) -> list[IsotropicSubgroup]:
    """All subgroups on which the quadratic form vanishes, deterministically
    ordered by (order, elements)."""
    if q.quadratic is None:
        raise OddLatticeError("isotropy is defined via the quadratic refinement")
    if q.order > bound:
        raise GroupOrderBoundError(
            f"discriminant group order {q.order} exceeds bound {bound}")
    invs = q.group.invariants
    zero = tuple(0 for _ in invs)
    elems = list(q.group.elements())
    qval = {x: q.q(x) for x in elems}
    iso_elems = [x for x in elems if qval[x] == 0]

    def add(x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, invs))

    def closure(h: frozenset, x) -> frozenset:
        new = set(h)
        multiples = [zero]
        cur = x
        while cur != zero:
            multiples.append(cur)
            cur = add(cur, x)
        for hh in h:
            for m in multiples:
                new.add(add(hh, m))
        return frozenset(new)

    seen = {frozenset({zero})}
    queue = [frozenset({zero})]
    while queue:
        h = queue.pop()
        for x in iso_elems:
            if x in h:
                continue
            hx = closure(h, x)
            if hx in seen:
                continue
            if all(qval[y] == 0 for y in hx):
                seen.add(hx)
                queue.append(hx)
    out = []
    for h in sorted(seen, key=lambda s: (len(s), sorted(s))):
        elements = tuple(sorted(h))
        lifts = tuple(_lift(q.group, x) for x in elements if x != zero)
        out.append(IsotropicSubgroup(elements, lifts))
    return out


@dataclass(frozen=True)
class Overlattice:
    """A finite-index even overlattice, with the embedding of the original
    basis expressed in the overlattice basis."""

    lattice: IntegralLattice
    index: int
    embedding: tuple[tuple[int, ...], ...]


def even_overlattices(l: IntegralLattice, bound: int = 10**4) -> list[Overlattice]:
    """One even overlattice per isotropic subgroup of the discriminant form,
    including the trivial one."""
    q = discriminant_quadratic_form(l)
    n = l.rank
    det = determinant(l)
    out = []
    for sub in isotropic_subgroups(q, bound):
        rows = [[Fraction(x) for x in row] for row in identity(n)]
        rows.extend([list(v) for v in sub.lifts])
        den = 1
        for row in rows:
            for x in row:
                den = lcm(den, Fraction(x).denominator)
        scaled = [[int(x * den) for x in row] for row in rows]
        basis_scaled = row_lattice_basis(scaled)
        basis = [[Fraction(x, den) for x in row] for row in basis_scaled]
        gram = mat_mul(mat_mul(basis, [list(r) for r in l.gram]), transpose(basis))
        igram = []
        for row in gram:
            irow = []
            for x in row:
                if Fraction(x).denominator != 1:
                    raise AssertionError("overlattice Gram is not integral")
                irow.append(int(x))
            igram.append(irow)
        over = IntegralLattice(tuple(map(tuple, igram)))
        if not is_even(over):
            raise AssertionError("overlattice of an isotropic subgroup must be even")
        emb_frac = frac_inverse(basis)
        emb = tuple(tuple(int(x) for x in row) for row in emb_frac)
        index = sub.order
        if determinant(over) * index * index != det:
            raise AssertionError("overlattice determinant relation violated")
        out.append(Overlattice(over, index, emb))
    return out


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class EasyTestVerdict:
    passed: bool
    criterion: int | None
    detail: str

    def __str__(self):
        return "Pass" if self.passed else f"Reject({self.criterion}): {self.detail}"


def easy_test(l: IntegralLattice) -> EasyTestVerdict:
    """Arithmetic exclusion tests for intersection lattices of smooth cubic
    fourfolds.  A Pass is a necessary condition only, never a certificate."""
    d = abs(determinant(l))
    rho = l.rank
    if d == 1:
        return EasyTestVerdict(False, 1, "unimodular lattice")
    if rho % 2 == 1 and rho <= 11:
        if _is_prime(d) and d % 4 == rho % 4:
            return EasyTestVerdict(
                False, 2, f"discriminant is a prime {d} = rank {rho} mod 4")
        if d % 4 == 2:
            return EasyTestVerdict(False, 3, "discriminant exactly divisible by 2")
    return EasyTestVerdict(True, None, "no exclusion criterion applies")
