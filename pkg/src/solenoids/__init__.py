"""Invariants and homeomorphism verdicts for weak solenoids and adic surfaces."""

from .bundles import (
    AdicSurface,
    CoveringDatum,
    SurfaceGroupWord,
    cover_of,
    euler_characteristic,
    h0,
    holonomy,
    relator,
    suspension_orbit,
)
from .classify import (
    adic_surfaces_return_equivalent,
    classify_adic_surfaces,
    classify_vietoris,
    generate_counterexample,
)
from .odometer import ClopenSet, TowerPoint, TruncatedTower, add_one, canonicalize, diameter, orbit, translate
from .pseudogroup import (
    IsotropyDescriptor,
    NotCollapsible,
    RestrictedAction,
    collapsible_refinement,
    interleaving_consistent,
    is_collapsible,
    isotropy,
    translates_partition,
)
from .supernatural import (
    BondingSequence,
    SupernaturalNumber,
    characteristic,
    characteristics_equal,
    factor,
    sequences_return_equivalent,
)
from .toral import (
    LatticeInvariants,
    MatrixChain,
    SmithForm,
    kernel_lattice_at_depth,
    lattice_invariants,
    quotient_invariants,
    smith_normal_form,
    toral_consistency,
)
from .verdict import Outcome, Verdict

__version__ = "0.1.0"
