"""Cubic fourfold lattices: roots, discriminant-14 markings, the rank-3
normal form (b, c), and the associated rank-2 K3 lattice construction.

A marked lattice is positive definite with a distinguished square-of-the-
hyperplane class of norm 3; a discriminant 14 marking is a class T with
T.T = 10, T.h2 = 4 spanning a primitive sublattice with Gram (3,4;4,10).
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import (
    IndefiniteLatticeError,
    IntegralLattice,
    LatticeError,
    RankLimitError,
    Vector,
    _canonical_sign,
    determinant,
    is_even,
    is_isometric_definite,
    lattice,
    orthogonal_complement,
    saturation,
    signature,
    twist,
    vectors_with_pairings,
)
from .linalg import int_inverse, smith_normal_form

K14_GRAM = ((3, 4), (4, 10))


@dataclass(frozen=True)
class MarkedCubicLattice:
    lattice: IntegralLattice
    h2: Vector
    marking: Vector | None = None

    def __post_init__(self):
        l = self.lattice
        p, n, z = signature(l)
        if n or z:
            raise IndefiniteLatticeError("cubic fourfold lattice must be positive definite")
        if l.norm(self.h2) != 3:
            raise LatticeError("distinguished class must have norm 3")
        if self.marking is not None:
            t = self.marking
            if l.norm(t) != 10 or l.inner(self.h2, t) != 4:
                raise LatticeError("marking must satisfy T.T = 10 and T.h2 = 4")
            _, index = saturation(l, [self.h2, t])
            if index != 1:
                raise LatticeError("marking sublattice <h2, T> must be primitive")

    @property
    def rank(self) -> int:
        return self.lattice.rank


@dataclass(frozen=True)
class RootCertificate:
    """A short root (norm 2, orthogonal to h2) or a long root (norm 6,
    orthogonal to h2, with (v +/- h2)/3 integral)."""

    kind: str  # "short" | "long"
    vector: Vector
    witness: Vector | None = None  # (v +/- h2)/3 for long roots

    def verify(self, marked: MarkedCubicLattice) -> bool:
        l = marked.lattice
        v = self.vector
        if l.inner(v, marked.h2) != 0:
            return False
        if self.kind == "short":
            return l.norm(v) == 2
        if l.norm(v) != 6 or self.witness is None:
            return False
        w3 = tuple(3 * x for x in self.witness)
        plus = tuple(a + b for a, b in zip(v, marked.h2))
        minus = tuple(a - b for a, b in zip(v, marked.h2))
        return w3 in (plus, minus)


def find_short_roots(marked: MarkedCubicLattice) -> list[RootCertificate]:
    vecs = vectors_with_pairings(marked.lattice, [marked.h2], [0], 2)
    roots = sorted({_canonical_sign(v) for v in vecs})
    return [RootCertificate("short", v) for v in roots]


def find_long_roots(marked: MarkedCubicLattice) -> list[RootCertificate]:
    vecs = vectors_with_pairings(marked.lattice, [marked.h2], [0], 6)
    out = []
    for v in sorted({_canonical_sign(v) for v in vecs}):
        for sign in (1, -1):
            shifted = tuple(a + sign * b for a, b in zip(v, marked.h2))
            if all(x % 3 == 0 for x in shifted):
                out.append(RootCertificate("long", v, tuple(x // 3 for x in shifted)))
                break
    return out


def bc_constraint_violations(b: int, c: int) -> list[str]:
    """Constraint report for the rank-3 normal form parameters."""
    out = []
    if not 0 <= b <= 7:
        out.append("b out of range [0, 7]")
    if c % 2:
        out.append("c must be even")
    if 14 * c - 3 * b * b <= 0:
        out.append("14c - 3b^2 must be positive")
    if c <= 2:
        out.append("c must exceed 2 (norm 2 vector J otherwise)")
    return out


def lattice_from_bc(b: int, c: int) -> MarkedCubicLattice:
    """Rank-3 marked lattice in the normal basis (h2, T, J).

    c = 2 is allowed (with the violation reported by
    bc_constraint_violations) so scans can exhibit why it is excluded.
    """
    hard = [v for v in bc_constraint_violations(b, c) if "exceed 2" not in v]
    if hard:
        raise LatticeError("; ".join(hard))
    gram = ((3, 4, 0), (4, 10, b), (0, b, c))
    return MarkedCubicLattice(lattice(gram, ("h2", "T", "J")),
                              (1, 0, 0), (0, 1, 0))


@dataclass(frozen=True)
class NormalFormBC:
    b: int
    c: int
    basis_change: tuple[tuple[int, ...], ...]  # rows: h2, T, J in the old basis


def normal_form(marked: MarkedCubicLattice) -> NormalFormBC:
    """Reduce a rank-3 marked lattice to the normal basis (h2, T, J) with
    J.h2 = 0 and 0 <= J.T = b <= 7."""
    if marked.rank != 3:
        raise RankLimitError("normal form is defined for rank 3 lattices")
    if marked.marking is None:
        raise LatticeError("normal form requires a fixed marking")
    l = marked.lattice
    h2, t = marked.h2, marked.marking
    snf = smith_normal_form([list(h2), list(t)])
    if snf.diagonal != (1, 1):
        raise LatticeError("marking sublattice is not primitive")
    rinv = int_inverse([list(r) for r in snf.right])
    j = tuple(rinv[2])

    def pair(u, v):
        return l.inner(tuple(u), tuple(v))

    # clear a = J.h2 using (T - h2).h2 = 1
    a = pair(j, h2)
    j = tuple(x - a * (y - z) for x, y, z in zip(j, t, h2))
    # reduce b = J.T modulo 14 = (3T - 4h2).T, up to sign
    b = pair(j, t)
    r = b % 14
    if r > 7:
        j = tuple(-x for x in j)
        b, r = -b, (-b) % 14
    m = (b - r) // 14
    j = tuple(x - m * (3 * y - 4 * z) for x, y, z in zip(j, t, h2))
    b = r
    c = pair(j, j)
    basis = (h2, t, j)
    expected = ((3, 4, 0), (4, 10, b), (0, b, c))
    got = tuple(tuple(pair(u, v) for v in basis) for u in basis)
    if got != expected:
        raise AssertionError("normal form reduction failed")
    return NormalFormBC(b, c, basis)


@dataclass(frozen=True)
class SigmaLattice:
    """Rank-2 even indefinite lattice (14, alpha; alpha, beta) with the
    distinguished degree-14 class H = (1, 0)."""

    lattice: IntegralLattice
    alpha: int
    beta: int

    @property
    def H(self) -> Vector:
        return (1, 0)


def _sigma_from_det(d: int) -> SigmaLattice:
    alpha = next((a for a in range(8) if (a * a - d) % 14 == 0), None)
    if alpha is None:
        raise LatticeError(f"discriminant {d} is not a square modulo 14")
    beta = (alpha * alpha - d) // 14
    if beta % 2:
        raise LatticeError(f"discriminant {d} does not give an even lattice")
    gram = ((14, alpha), (alpha, beta))
    return SigmaLattice(lattice(gram, ("H", "L")), alpha, beta)


def sigma(marked: MarkedCubicLattice) -> SigmaLattice:
    """The rank-2 even indefinite lattice of discriminant -d(Lambda)
    attached to a rank-3 marked lattice."""
    nf = normal_form(marked)
    return _sigma_from_det(determinant(marked.lattice))


def closed_form_gram(b: int, c: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Raw closed-form Gram of the associated rank-2 lattice, before
    canonicalization; the off-diagonal entry is 2b or 7-2b by parity of b."""
    if b % 2 == 0:
        off, beta = 2 * b, b * b // 2 - c
    else:
        off, beta = 7 - 2 * b, (b * b - 4 * b + 7) // 2 - c
    return ((14, off), (off, beta))


def sigma_closed_form(b: int, c: int) -> SigmaLattice:
    """Closed-form construction, canonicalized to the (alpha, beta) shape;
    always equals sigma(lattice_from_bc(b, c))."""
    lattice_from_bc(b, c)  # validates the parameters
    raw = closed_form_gram(b, c)
    canonical = _sigma_from_det(-(14 * raw[1][1] - raw[0][1] ** 2))
    if determinant(canonical.lattice) != 14 * raw[1][1] - raw[0][1] ** 2:
        raise AssertionError("canonicalization changed the discriminant")
    return canonical


def find_k14_markings(marked: MarkedCubicLattice) -> list[Vector]:
    """All classes T with T.T = 10, T.h2 = 4 and <h2, T> primitive."""
    if marked.rank > 4:
        raise RankLimitError("marking search is limited to rank <= 4")
    out = []
    for t in vectors_with_pairings(marked.lattice, [marked.h2], [4], 10):
        _, index = saturation(marked.lattice, [marked.h2, t])
        if index == 1:
            out.append(t)
    return sorted(out)


@dataclass(frozen=True)
class ScanRow:
    b: int
    c: int
    det: int
    sigma_gram: tuple[tuple[int, int], tuple[int, int]]
    short_roots: tuple[Vector, ...]
    long_roots: tuple[Vector, ...]
    violations: tuple[str, ...]


def scan_bc(b_max: int, c_max: int) -> list[ScanRow]:
    """Root status and associated lattice for every valid (b, c) pair."""
    rows = []
    for b in range(0, min(7, b_max) + 1):
        for c in range(2, c_max + 1, 2):
            if 14 * c - 3 * b * b <= 0:
                continue
            marked = lattice_from_bc(b, c)
            rows.append(ScanRow(
                b, c, determinant(marked.lattice),
                sigma(marked).lattice.gram,
                tuple(r.vector for r in find_short_roots(marked)),
                tuple(r.vector for r in find_long_roots(marked)),
                tuple(bc_constraint_violations(b, c)),
            ))
    return rows


@dataclass(frozen=True)
class K3CheckReport:
    passed: bool
    even_signature_ok: bool
    degree_ok: bool
    complements_isometric: bool
    determinants_match: bool  # consistency flag, reported separately


def associated_k3_check(marked: MarkedCubicLattice, k3) -> K3CheckReport:
    """Verify that a polarized K3 lattice is compatible with a marking: the
    twisted complement of <h2, T> must match the complement of H."""
    if marked.rank not in (3, 4) or k3.lattice.rank != marked.rank - 1:
        raise RankLimitError("expected ranks (r, r-1) with r in {3, 4}")
    if marked.marking is None:
        raise LatticeError("associated K3 check requires a fixed marking")
    sig_ok = is_even(k3.lattice) and signature(k3.lattice) == (1, k3.lattice.rank - 1, 0)
    deg_ok = k3.lattice.norm(k3.H) == 14
    comp_cubic = orthogonal_complement(marked.lattice, [marked.h2, marked.marking])
    comp_k3 = orthogonal_complement(k3.lattice, [k3.H])
    cubic_side = twist(marked.lattice.sublattice_gram(comp_cubic), -1)
    k3_side = k3.lattice.sublattice_gram(comp_k3)
    iso, _ = is_isometric_definite(cubic_side, k3_side)
    det_ok = abs(determinant(k3.lattice)) == abs(determinant(marked.lattice))
    return K3CheckReport(sig_ok and deg_ok and iso, sig_ok, deg_ok, iso, det_ok)
