"""Degree-14 polarized K3 lattices and Brill-Noether special classes.

A Picard-type lattice of signature (1, rho-1) with a distinguished
polarization class H of square 14 is Brill-Noether special exactly when
one of five rank-2 marker lattices embeds primitively; each marker caps
the Clifford index gamma of the smooth genus-8 curves in |H|.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import (
    IntegralLattice,
    LatticeError,
    RankLimitError,
    Vector,
    determinant,
    is_even,
    lattice,
    saturation,
    signature,
    vectors_with_pairings,
)
from .linalg import int_inverse, smith_normal_form

TABLE1_GRAMS = {
    "0": ((14, 2), (2, 0)),
    "1": ((14, 3), (3, 0)),
    "2E": ((14, 4), (4, 0)),
    "2L": ((14, 6), (6, 2)),
    "3": ((14, 7), (7, 2)),
}

# marker kind -> (norm, degree, clifford bound); sections carry no bound
MARKER_KINDS = {
    "EllipticSection": (0, 1, None),
    "Gamma0": (0, 2, 0),
    "Gamma1": (0, 3, 1),
    "Gamma2E": (0, 4, 2),
    "Gamma2L": (2, 6, 2),
    "Gamma3": (2, 7, 3),
}


@dataclass(frozen=True)
class PolarizedK3Lattice:
    lattice: IntegralLattice
    H: Vector
    degree: int = 14

    def __post_init__(self):
        l = self.lattice
        if not is_even(l):
            raise LatticeError("polarized K3 lattice must be even")
        if signature(l) != (1, l.rank - 1, 0):
            raise LatticeError("polarized K3 lattice must have signature (1, rho-1)")
        if l.norm(self.H) != self.degree:
            raise LatticeError(f"polarization class must have square {self.degree}")
        _, index = saturation(l, [self.H])
        if index != 1:
            raise LatticeError("polarization class must be primitive")

    @property
    def rank(self) -> int:
        return self.lattice.rank


def table1_lattice(column: str) -> PolarizedK3Lattice:
    """The rank-2 lattice of the named Clifford-index column (0, 1, 2E,
    2L or 3), polarized by its first basis vector."""
    if column not in TABLE1_GRAMS:
        raise KeyError(f"unknown column {column!r}; expected one of "
                       + ", ".join(TABLE1_GRAMS))
    labels = ("H", "E" if column in ("0", "1", "2E") else "L")
    return PolarizedK3Lattice(lattice(TABLE1_GRAMS[column], labels), (1, 0))


def canonical_rank2_form(k3: PolarizedK3Lattice) -> tuple[int, int]:
    """The pair (alpha, beta) with Gram (14, alpha; alpha, beta) reachable
    from (H, L) by L -> +/-L + k*H, normalized to 0 <= alpha <= 7."""
    if k3.rank != 2:
        raise RankLimitError("canonical form is defined for rank 2 lattices")
    snf = smith_normal_form([list(k3.H)])
    comp = tuple(int_inverse([list(r) for r in snf.right])[1])
    l = k3.lattice
    alpha = l.inner(k3.H, comp)
    r = alpha % 14
    if r > 7:
        comp = tuple(-x for x in comp)
        alpha, r = -alpha, (-alpha) % 14
    k = (alpha - r) // 14
    comp = tuple(x - k * h for x, h in zip(comp, k3.H))
    alpha = r
    beta = l.norm(comp)
    if 14 * beta - alpha * alpha != determinant(l):
        raise AssertionError("canonical form does not preserve the determinant")
    return alpha, beta


def find_classes(k3: PolarizedK3Lattice, norm: int, degree: int) -> list[Vector]:
    """All classes v with v.v = norm and v.H = degree, in canonical order."""
    if k3.rank > 4:
        raise RankLimitError("class search is limited to rank <= 4")
    return vectors_with_pairings(k3.lattice, [k3.H], [degree], norm)


@dataclass(frozen=True)
class BNMarker:
    kind: str
    witness: Vector
    primitive_span: bool


@dataclass(frozen=True)
class BNReport:
    markers: tuple[BNMarker, ...]
    verdict: str  # "General" | "Special" | "EllipticWithSection"
    gamma_bound: int | None

    def describe(self) -> str:
        if self.verdict == "Special":
            return f"Special({self.gamma_bound})"
        return self.verdict


def bn_classify(k3: PolarizedK3Lattice) -> BNReport:
    """Search for the five marker lattices (and section classes) inside a
    degree-14 polarized lattice and bound the Clifford index.

    "General" is a lattice-level statement: no marker embeds primitively.
    """
    if k3.degree != 14:
        raise LatticeError("classification is specific to degree 14")
    if k3.rank > 4:
        raise RankLimitError("classification is limited to rank <= 4")
    markers = []
    for kind, (norm, degree, _) in MARKER_KINDS.items():
        for v in find_classes(k3, norm, degree):
            _, index = saturation(k3.lattice, [k3.H, v])
            if index == 1:
                markers.append(BNMarker(kind, v, True))
                break  # one witness per kind
    has_section = any(m.kind == "EllipticSection" for m in markers)
    bounds = [MARKER_KINDS[m.kind][2] for m in markers
              if m.kind != "EllipticSection"]
    if has_section:
        return BNReport(tuple(markers), "EllipticWithSection", None)
    if bounds:
        return BNReport(tuple(markers), "Special", min(bounds))
    return BNReport((), "General", None)


def brill_noether_rho(g: int, r: int, d: int) -> int:
    """The Brill-Noether number rho(g, r, d) = g - (r+1)(g-d+r)."""
    if g < 0 or r < 0 or d < 0:
        raise ValueError("g, r, d must be nonnegative")
    return g - (r + 1) * (g - d + r)


@dataclass(frozen=True)
class DivisorRow:
    gamma: int
    r: int
    d: int
    rho: int


def genus8_divisor_table() -> list[DivisorRow]:
    """Special linear series on genus-8 curves by Clifford index
    gamma = d - 2r, with the Brill-Noether number of each."""
    series = [(3, [(1, 5), (2, 7)]),
              (2, [(1, 4), (2, 6)]),
              (1, [(1, 3), (2, 5), (3, 7)]),
              (0, [(1, 2), (2, 4), (3, 6)])]
    rows = []
    for gamma, pairs in series:
        for r, d in pairs:
            assert d - 2 * r == gamma
            rows.append(DivisorRow(gamma, r, d, brill_noether_rho(8, r, d)))
    return rows
