"""Pure Tate motives of iterated fibre-bundle towers."""

from .cellular import (
    ExplicitCellular,
    Grassmannian,
    Homogeneous,
    ProjectiveSpace,
    fibre_dimension,
    fibre_motive,
    parse_fibre,
)
from .errors import DomainError, InvariantViolation, MotcalcError, OrbitCapExceeded, ParseError
from .leray_hirsch import (
    CKComponent,
    FreeChowBase,
    Point,
    RankTable,
    TateBase,
    TowerSpec,
    ck_assemble,
    higher_chow_table,
    tower_chow_ranks,
    tower_motive,
)
from .roots import ParabolicSpec, RootSystem, build_root_system, coset_lengths, gp_motive, weyl_order
from .tate import TateMotive, chow_rank, direct_sum, is_self_dual, rank, render, tensor, twist, unit, zero

__version__ = "0.1.0"
