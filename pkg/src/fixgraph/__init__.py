"""Exact spectra of the k-point fixing graphs F(n, k) on the symmetric group."""

from .excited import ExcitedDiagramSet, apply_move, enumerate_excited, excited_hook_sum, hook_product, is_active
from .oracle import CycleType, class_size, convolution_moment, fixed_point_count, mn_character, oracle_eta
from .partitions import (
    Cell,
    Diagram,
    Partition,
    conjugate,
    contains,
    diagram_of,
    format_partition,
    hook_length,
    parse_partition,
    partitions_of,
    subpartitions_of_size,
)
from .spectra import (
    GraphParams,
    SpectrumEntry,
    binomial_identity_check,
    derangement_count,
    eta,
    eta0,
    eta0_renteln,
    eta_hook,
    eta_transposition,
    interval_check,
    least_eigenvalue_check,
    m_k_bound,
    s_nk_size,
    spectrum,
    transposition_multiplicity,
)
from .tableaux import IntegralityError, enumerate_syt, f_skew, f_straight

__version__ = "0.1.0"
