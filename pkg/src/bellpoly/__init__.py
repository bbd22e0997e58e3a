"""Exact Bell polynomials, Adomian polynomials and decomposition-series identities."""
from .exactnum import ALPHA, BETA, E, X, MultiPoly, U, factorial, falling
from .partitions import (
    PartitionVector,
    embed_lambda_in_theta,
    enum_lambda,
    enum_theta,
    lambda_via_recurrence,
    partition_count,
    theta_via_recurrence,
)
from .bell import *  # noqa: F401,F403
from .adomian import (
    METHODS,
    AdomianPoly,
    Exp,
    Linear,
    PolyCoeffs,
    Power,
    TaylorAtU0,
    adomian_complete_exp,
    adomian_duan_rec1,
    adomian_duan_rec2,
    adomian_evaluate,
    adomian_evaluate_cleared,
    adomian_from_bell,
    adomian_from_ord_bell,
    adomian_param_oracle,
    adomian_rach,
    c_kn,
)
from .identities import (
    IDENTITIES,
    IdentityReport,
    run_identity,
    verify_binomial_identity,
    verify_complete_bell_remark,
    verify_exp_identity,
    verify_exp_specializations,
    verify_falling_factorial_identity,
    verify_ord_identity,
    verify_ord_specializations,
    verify_stirling_connection,
)
from .adm import (
    SeriesSolution,
    adm_solve,
    closed_form_exp_series,
    closed_form_power_series,
    compare_series,
)

__version__ = "0.1.0"
