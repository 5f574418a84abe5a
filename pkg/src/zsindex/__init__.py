"""Exact index computation and exhaustive verification for minimal
zero-sum sequences of length 4 over finite cyclic groups."""

__version__ = "0.1.0"

from .modarith import (
    GroupContext,
    check_prime_intervals,
    euler_phi,
    is_prime,
    mod_inverse,
    prime_in_bertrand,
    prime_in_half_open,
    reduce_mod,
    units,
)
from .singular import (
    DescentParams,
    GoodKReport,
    SingularReport,
    descent_params,
    explicit_forms,
    f_val,
    good_report,
    interval_witness,
    is_singular,
    boundary_quadruple,
    successor_reduction,
    verify_singular_theorem,
)
from .verifier import (
    VerifyRecord,
    enumerate_minimal,
    verify_n,
    verify_range,
)
from .zseq import (
    IndexResult,
    ZsSeq,
    canonical_orbit_rep,
    count_large_residues,
    g_norm,
    index_with_witness,
    is_minimal_zero_sum,
    is_zero_sum,
    new_seq,
    residue_sum,
    unit_transform,
)
