"""Bivariate Mittag-Leffler-type functions: evaluation, convergence regions and identity checks."""
from .convergence import ConvergenceReport, classify, horn_exponents, radius_functionals, univariate_radius
from .errors import (
    DegenerateExponent,
    DomainError,
    ML2Error,
    NonConvergence,
    NonFinite,
    NonIntegerExponent,
    PoleError,
    PreconditionViolated,
    UnknownPreset,
)
from .gamma import gamma, log_gamma, pochhammer, rgamma
from .identities import IdentityCase, IdentityReport, VerifyOptions, random_case, verify
from .pde import coefficient_recurrence_check, operator_residual
from .presets import catalog, preset
from .quadrature import build_rule, integrate
from .series import DenFactor, EvalOptions, EvalResult, NumFactor, SeriesSpec, evaluate, evaluate_many

__all__ = [
    "ConvergenceReport", "classify", "horn_exponents", "radius_functionals", "univariate_radius",
    "DegenerateExponent", "DomainError", "ML2Error", "NonConvergence", "NonFinite",
    "NonIntegerExponent", "PoleError", "PreconditionViolated", "UnknownPreset",
    "gamma", "log_gamma", "pochhammer", "rgamma",
    "IdentityCase", "IdentityReport", "VerifyOptions", "random_case", "verify",
    "coefficient_recurrence_check", "operator_residual",
    "catalog", "preset", "build_rule", "integrate",
    "DenFactor", "EvalOptions", "EvalResult", "NumFactor", "SeriesSpec", "evaluate", "evaluate_many",
]
