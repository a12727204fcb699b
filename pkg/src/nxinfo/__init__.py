"""Parameter-free non-extensive entropies and their information-theoretic uses."""
from ._backend import BACKEND
from .errors import ConvergenceError, DomainError, InvalidDistributionError
from .genfun import (
    COEFFICIENTS,
    Convention,
    Sign,
    gen_exp_exact,
    gen_exp_series,
    gen_log,
    gen_log_base,
    upper_incomplete_gamma,
)

__all__ = [
    "BACKEND",
    "COEFFICIENTS",
    "Convention",
    "ConvergenceError",
    "DomainError",
    "InvalidDistributionError",
    "Sign",
    "gen_exp_exact",
    "gen_exp_series",
    "gen_log",
    "gen_log_base",
    "upper_incomplete_gamma",
]
__version__ = "0.1.0"
