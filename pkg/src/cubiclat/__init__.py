"""Exact integral-lattice toolkit for discriminant-14 cubic fourfolds.

All arithmetic is exact (integers, rationals and sums of roots of
unity); no floating point is used anywhere.
"""

from .cubic import (
    MarkedCubicLattice,
    NormalFormBC,
    RootCertificate,
    SigmaLattice,
    associated_k3_check,
    bc_constraint_violations,
    find_k14_markings,
    find_long_roots,
    find_short_roots,
    lattice_from_bc,
    normal_form,
    scan_bc,
    sigma,
    sigma_closed_form,
)
from .discform import (
    DiscriminantGroup,
    EasyTestVerdict,
    FiniteQuadraticForm,
    IsotropicSubgroup,
    Overlattice,
    discriminant_bilinear_form,
    discriminant_group,
    discriminant_quadratic_form,
    easy_test,
    even_overlattices,
    gauss_milgram_signature,
    isotropic_subgroups,
)
from .k3 import (
    BNMarker,
    BNReport,
    PolarizedK3Lattice,
    bn_classify,
    brill_noether_rho,
    canonical_rank2_form,
    find_classes,
    genus8_divisor_table,
    table1_lattice,
)
from .lattice import (
    DegenerateLatticeError,
    IndefiniteLatticeError,
    IntegralLattice,
    LatticeError,
    RankLimitError,
    determinant,
    enumerate_vectors,
    is_even,
    is_isometric_definite,
    lattice,
    orthogonal_complement,
    saturation,
    signature,
    twist,
    vectors_with_pairings,
)
from .repro import (
    Report,
    ReportCell,
    clifford3_certificates,
    example_a2,
    pi_presentations,
    render_text,
    reproduce_table1,
    run_all,
)

__version__ = "0.1.0"
