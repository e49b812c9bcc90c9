"""Shared oracles and random-lattice generators for the test suite.

The oracles here are deliberately naive and independent of the library
internals: cofactor-expansion determinants, box searches bounded by
rational Cauchy-Schwarz estimates, and exhaustive subgroup enumeration.
"""

import random
from fractions import Fraction

import pytest

from cubiclat.linalg import frac_inverse

_ACCEPTANCE_LINES = []


def record_criterion(number: int, description: str, passed: bool = True):
    status = "PASS" if passed else "FAIL"
    _ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {description}")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


def det_cofactor(m) -> int:
    """Determinant by cofactor expansion along the first row."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            minor = [[row[k] for k in range(n) if k != j] for row in m[1:]]
            total += (-1) ** j * m[0][j] * det_cofactor(minor)
    return total


def frac_isqrt(x: Fraction) -> int:
    """floor(sqrt(x)) for a nonnegative rational."""
    if x < 0:
        raise ValueError("negative")
    lo, hi = 0, 1
    while Fraction(hi * hi) <= x:
        hi *= 2
    while lo < hi - 1:
        mid = (lo + hi) // 2
        if Fraction(mid * mid) <= x:
            lo = mid
        else:
            hi = mid
    return lo


def box_bounds(pd_frac_gram, radius: Fraction) -> list[int]:
    """Per-coordinate bounds: any x with x^T G x <= radius has
    x_i^2 <= radius * (G^-1)_ii for positive definite G."""
    inv = frac_inverse(pd_frac_gram)
    return [frac_isqrt(radius * inv[i][i]) for i in range(len(inv))]


def box_norm_vectors(gram, norm: int) -> set:
    """All +/- classes of vectors of the given norm in a positive definite
    integer Gram, by exhaustive box search, canonical representative only."""
    from itertools import product

    n = len(gram)
    if norm <= 0:
        return set()
    bounds = box_bounds([[Fraction(x) for x in row] for row in gram],
                        Fraction(norm))
    out = set()
    for v in product(*[range(-b, b + 1) for b in bounds]):
        if sum(v[i] * gram[i][j] * v[j] for i in range(n) for j in range(n)) == norm:
            lead = next((x for x in v if x), 0)
            out.add(v if lead > 0 else tuple(-x for x in v))
    return out


def box_polarized_classes(gram, h, norm: int, degree: int) -> set:
    """All v with v.v = norm and v.h = degree in a lattice of signature
    (1, n-1), by box search over a provably sufficient region.

    On the hyperplane v.h = degree the flipped form
    P(x) = -x.x + (2/h.h)(x.h)^2 is positive definite, and every solution
    satisfies P(v) = 2*degree^2/h.h - norm.
    """
    from itertools import product

    n = len(gram)
    gh = [sum(gram[i][j] * h[j] for j in range(n)) for i in range(n)]
    hh = sum(h[i] * gh[i] for i in range(n))
    flip = [[Fraction(-gram[i][j]) + Fraction(2 * gh[i] * gh[j], hh)
             for j in range(n)] for i in range(n)]
    radius = Fraction(2 * degree * degree, hh) - norm
    if radius < 0:
        return set()
    bounds = box_bounds(flip, radius)
    out = set()
    for v in product(*[range(-b, b + 1) for b in bounds]):
        if sum(v[i] * gh[i] for i in range(n)) != degree:
            continue
        if sum(v[i] * gram[i][j] * v[j] for i in range(n) for j in range(n)) == norm:
            out.add(v)
    return out


def all_subgroups_brute(invariants):
    """Every subgroup of prod Z/d_i, as a frozenset of element tuples.
    Feasible for group order <= ~64."""
    from itertools import product

    elems = list(product(*[range(d) for d in invariants]))

    def add(x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, invariants))

    def closure(gens):
        seen = {tuple(0 for _ in invariants)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = add(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    # subgroups of a 2-generated abelian group are 2-generated
    assert len(invariants) <= 2
    subs = set()
    for g1 in elems:
        for g2 in elems:
            subs.add(closure([g1, g2]))
    return subs


def random_unimodular(rng: random.Random, n: int, shears: int = 6):
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    if n < 2:
        return u
    for _ in range(shears):
        i, j = rng.sample(range(n), 2)
        k = rng.choice([-2, -1, 1, 2])
        for col in range(n):
            u[i][col] += k * u[j][col]
    if rng.random() < 0.5:
        i, j = rng.sample(range(n), 2)
        u[i], u[j] = u[j], u[i]
    return u


def conjugate(gram, u):
    n = len(gram)
    g = [[sum(u[i][a] * gram[a][b] * u[j][b] for a in range(n) for b in range(n))
          for j in range(n)] for i in range(n)]
    return tuple(map(tuple, g))


def random_even_gram(rng: random.Random, rank: int):
    """U^T D U with D even diagonal: even, nondegenerate, small disc group."""
    d = [rng.choice([-6, -4, -2, 2, 4, 6]) for _ in range(rank)]
    u = random_unimodular(rng, rank, shears=4)
    diag = [[d[i] if i == j else 0 for j in range(rank)] for i in range(rank)]
    ut = [[u[j][i] for j in range(rank)] for i in range(rank)]
    return conjugate(diag, ut)


def random_symmetric_gram(rng: random.Random, rank: int, bound: int = 10):
    g = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        for j in range(i, rank):
            g[i][j] = g[j][i] = rng.randint(-bound, bound)
    return tuple(map(tuple, g))


def random_positive_definite_gram(rng: random.Random, rank: int, bound: int = 10):
    """A^T A + small diagonal, clipped to the entry bound by retrying."""
    while True:
        a = [[rng.randint(-2, 2) for _ in range(rank)] for _ in range(rank)]
        g = [[sum(a[k][i] * a[k][j] for k in range(rank)) + int(i == j)
              for j in range(rank)] for i in range(rank)]
        if all(abs(x) <= bound for row in g for x in row):
            return tuple(map(tuple, g))


@pytest.fixture
def rng():
    return random.Random(20260823)
