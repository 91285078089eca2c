from ._core import (
    DomainError,
    HurstFit,
    IoError,
    LazinessSpec,
    NumericalError,
    OptimalInterval,
    ProfitCurve,
    expected_profit,
    exploitable_move,
    fbm_covariance,
    fgn_autocovariance,
    fit_scaling,
    kappa_from_sigma,
    optimal_interval,
    optimize_profit_curve,
    sample_path,
)

__all__ = [
    "DomainError",
    "HurstFit",
    "IoError",
    "LazinessSpec",
    "NumericalError",
    "OptimalInterval",
    "ProfitCurve",
    "expected_profit",
    "exploitable_move",
    "fbm_covariance",
    "fgn_autocovariance",
    "fit_scaling",
    "kappa_from_sigma",
    "optimal_interval",
    "optimize_profit_curve",
    "sample_path",
]
