"""Construct and verify M-shellings of discrete polymatroids."""

from .errors import (
    DimensionError,
    DomainError,
    InvariantError,
    MembershipError,
    PathError,
    PolyshellError,
    SizeError,
)
from .hvector import (
    SearchBounds,
    SearchOutcome,
    f_to_h,
    find_pm_witness,
    find_pure_order_ideal_witness,
    find_shellable_witness,
    h_to_f,
)
from .lpm import (
    LatticePath,
    LatticePathMatroid,
    build_matroid,
    check_base_exchange,
    corollary3_check,
    enumerate_between,
    matroid_h_vector,
    never_above,
    north_steps,
    parse_path,
)
from .monomials import (
    OrderIdeal,
    degree,
    degree_sequence,
    divides,
    ideal_from_generators,
    interval_members,
    is_pure,
    quotient,
)
from .polymatroid import PolymatroidReport, enumerate_discrete_polymatroids, is_discrete_polymatroid
from .shelling import (
    MShelling,
    ShellingInterval,
    VerificationReport,
    is_m_shellable_bruteforce,
    shell_polymatroid,
    shelling_degree_polynomial,
    verify_m_shelling,
)

__version__ = "0.1.0"
