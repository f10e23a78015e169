"""The differential system of D1 with integer index coefficients.

With theta = x d/dx, phi = y d/dy and the shorthand

    P_x(m, n) = prod_{i=1}^{alpha3} (delta1 + alpha3 - i + alpha3 m + beta3 n)
                * prod_{i=1}^{alpha4} (delta2 + alpha4 - i + alpha4 m)
    Q_x(m, n) = prod_{i=1}^{alpha1} (gamma1 + alpha1 - i + alpha1 m + beta1 n)
                * prod_{i=1}^{alpha2} (gamma2 + alpha2 - i + alpha2 m)

the x-equation  P_x(theta, phi) x^-1 D1 = Q_x(theta, phi) D1  is, coefficient-wise,

    A(m+1, n) P_x(m, n) = A(m, n) Q_x(m, n).

The y-equation swaps the roles of (m, alpha) and (n, beta); its single-index
products use (delta3, beta4) and (gamma3, beta2) ("corrected" reading) or
(delta2, beta4) and (gamma2, beta2) ("printed" reading).  For the x-equation
the "printed" reading evaluates P_x at m + 1 instead of m.

The x^-1 shift leaves a boundary series at m = -1,
x^-1 sum_n A(0, n) P_x(-1, n) y^n, which vanishes iff prod_{i<=alpha4}(delta2 - i)
does (delta2 in {1, .., alpha4}) or the delta1 factor does;
:func:`operator_residual` reports it separately.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import NonIntegerExponent
from .presets import preset, preset_params
from .series import log_term

REL_TOL = 1e-12
READINGS = ("corrected", "printed")
EQUATIONS = ("x", "y")
_EXPONENTS = tuple(f"alpha{i}" for i in range(1, 5)) + tuple(f"beta{i}" for i in range(1, 5))
_EPS = np.finfo(float).eps


def _check_integer(params):
    for k in _EXPONENTS:
        v = params[k]
        if isinstance(v, complex) or float(v) != round(float(v)) or float(v) < 1:
            raise NonIntegerExponent(f"{k} must be a positive integer, got {v!r}")


def _ints(params):
    return {k: int(round(float(params[k]))) for k in _EXPONENTS}


def _prod(base, count):
    """log prod_{i=1}^{count} (base + count - i), elementwise and complex."""
    out = np.zeros(np.shape(base), dtype=complex)
    with np.errstate(divide="ignore"):
        for i in range(1, count + 1):
            out = out + np.log(np.asarray(base + count - i, dtype=complex))
    return out


def _factors(params, equation, reading, m, n):
    """(log P, log Q) at integer grids m, n; P pairs with the shifted coefficient."""
    k = _ints(params)
    g1, g2, g3 = (complex(params[f"gamma{i}"]) for i in (1, 2, 3))
    d1, d2, d3 = (complex(params[f"delta{i}"]) for i in (1, 2, 3))
    if equation == "x":
        mp = m + 1 if reading == "printed" else m
        a1, b1, a2, a3, b3, a4 = k["alpha1"], k["beta1"], k["alpha2"], k["alpha3"], k["beta3"], k["alpha4"]
        logp = _prod(d1 + a3 * mp + b3 * n, a3) + _prod(d2 + a4 * mp, a4)
        logq = _prod(g1 + a1 * m + b1 * n, a1) + _prod(g2 + a2 * m, a2)
    else:
        dd, gg = (d2, g2) if reading == "printed" else (d3, g3)
        a1, b1, b2, a3, b3, b4 = k["alpha1"], k["beta1"], k["beta2"], k["alpha3"], k["beta3"], k["beta4"]
        logp = _prod(d1 + a3 * m + b3 * n, b3) + _prod(dd + b4 * n, b4)
        logq = _prod(g1 + a1 * m + b1 * n, b1) + _prod(gg + b2 * n, b2)
    return logp, logq


@dataclass
class RecurrenceReport:
    equation: str
    reading: str
    max_rel_error: float
    worst_cell: tuple
    passed: bool
    tolerance: float = REL_TOL
    bound: tuple = (0, 0)

    def to_dict(self):
        return {
            "equation": self.equation,
            "max_rel_error": self.max_rel_error,
            "worst_cell": list(self.worst_cell),
            "pass": self.passed,
        }

    def to_json(self):
        return json.dumps(self.to_dict())


def d1_spec(params):
    return preset("D1", {k: params[k] for k in preset_params("D1")})


def coefficient_recurrence_check(params, M=50, N=50, equation="x", reading="corrected",
                                 tol=REL_TOL) -> RecurrenceReport:
    """Check the coefficient recurrence of one equation on 0 <= m <= M, 0 <= n <= N.

    Both sides are formed in log space from independent Gamma evaluations of
    A(m, n) and A(m+1, n) (or A(m, n+1)); cells where both sides vanish count
    as exact.
    """
    if equation not in EQUATIONS:
        raise ValueError(f"equation must be 'x' or 'y', got {equation!r}")
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}, got {reading!r}")
    _check_integer(params)
    spec = d1_spec(params)
    m, n = np.meshgrid(np.arange(M + 1, dtype=float), np.arange(N + 1, dtype=float), indexing="ij")
    la = log_term(spec, m, n)
    la_shift = log_term(spec, m + 1, n) if equation == "x" else log_term(spec, m, n + 1)
    logp, logq = _factors(params, equation, reading, m, n)
    lhs = la_shift + logp
    rhs = la + logq
    with np.errstate(invalid="ignore", over="ignore"):
        both_zero = np.isneginf(lhs.real) & np.isneginf(rhs.real)
        diff = np.where(both_zero, 0.0, lhs - rhs)
        rel = np.abs(np.expm1(diff))
    rel = np.where(np.isnan(rel), np.inf, rel)
    i, j = np.unravel_index(int(np.argmax(rel)), rel.shape)
    worst = float(rel[i, j])
    return RecurrenceReport(equation, reading, worst, (int(i), int(j)), bool(worst <= tol), tol, (M, N))


def satisfied_readings(params, M=50, N=50, equation="y", tol=REL_TOL):
    """The readings under which the recurrence holds, with their reports."""
    reps = {r: coefficient_recurrence_check(params, M, N, equation, r, tol) for r in READINGS}
    return [r for r, rep in reps.items() if rep.passed], reps


@dataclass
class OperatorResidual:
    equation: str
    T: int
    residual: complex
    tail: float
    rounding: float
    boundary: complex
    value: complex

    @property
    def bound(self):
        return self.tail + self.rounding

    @property
    def passed(self):
        return bool(abs(self.residual) <= 10.0 * self.bound)

    def to_dict(self):
        return {
            "equation": self.equation,
            "T": self.T,
            "residual": abs(self.residual),
            "tail": self.tail,
            "rounding": self.rounding,
            "boundary": abs(self.boundary),
            "pass": self.passed,
        }


def _csum(vals):
    vals = np.asarray(vals, dtype=complex).ravel()
    return complex(math.fsum(vals.real), math.fsum(vals.imag))


def operator_residual(params, x, y, T, equation="x", reading="corrected") -> OperatorResidual:
    """Apply the operator termwise to the truncation D1_T = sum_{m+n<=T} A x^m y^n.

    theta and phi act as index multipliers on stored terms.  After the index
    shift the interior residual is the image of the first omitted anti-diagonal,
    which is returned as ``tail``; ``rounding`` bounds the floating error of the
    individual terms.  The boundary series left at the shifted-out index is
    returned separately and excluded from ``residual``.
    """
    _check_integer(params)
    if equation not in EQUATIONS:
        raise ValueError(f"equation must be 'x' or 'y', got {equation!r}")
    x, y = complex(x), complex(y)
    if (x if equation == "x" else y) == 0:
        raise ValueError(f"{equation} must be nonzero for the {equation}^-1 shift")
    spec = d1_spec(params)
    idx = np.arange(T + 2, dtype=float)
    m, n = np.meshgrid(idx, idx, indexing="ij")
    la = log_term(spec, m, n)
    keep = (m + n) <= T
    with np.errstate(divide="ignore"):
        lx, ly = np.log(x) if x != 0 else -np.inf, np.log(y) if y != 0 else -np.inf
    with np.errstate(invalid="ignore"):
        pw = np.where(m > 0, m * lx, 0.0) + np.where(n > 0, n * ly, 0.0)

    logp, logq = _factors(params, equation, reading, m, n)
    # Q D1_T: sum A(m, n) Q(m, n) x^m y^n
    q_terms = np.where(keep, np.exp(la + logq + pw), 0.0)
    # P x^-1 D1_T, re-indexed: coefficient of x^m y^n is A(m+1, n) P(m, n), kept when m+1+n <= T
    if equation == "x":
        la_s = np.vstack([la[1:], np.full((1, la.shape[1]), -np.inf)])
        keep_s = (m + 1 + n) <= T
    else:
        la_s = np.hstack([la[:, 1:], np.full((la.shape[0], 1), -np.inf)])
        keep_s = (m + n + 1) <= T
    with np.errstate(invalid="ignore"):
        p_terms = np.where(keep_s, np.exp(la_s + logp + pw), 0.0)

    residual = _csum(np.concatenate([p_terms.ravel(), -q_terms.ravel()]))
    # terms on m + n = T have no P partner: they are the image of diagonal T + 1
    last = keep & ((m + n) == T)
    tail = float(np.sum(np.abs(q_terms[last])))
    finite = np.isfinite(la.real) & keep
    width = 16.0 + 2.0 * float(np.max(np.abs(la[finite]))) if finite.any() else 16.0
    rounding = float(width * _EPS * (np.sum(np.abs(p_terms)) + np.sum(np.abs(q_terms))))

    # boundary: shifted index -1 of the x^-1 (or y^-1) series
    one_idx = idx[: T + 1]
    if equation == "x":
        lb = log_term(spec, np.zeros_like(one_idx), one_idx)
        lpb, _ = _factors(params, "x", reading, -np.ones_like(one_idx), one_idx)
        with np.errstate(divide="ignore", invalid="ignore"):
            bterms = np.exp(lb + lpb + np.where(one_idx > 0, one_idx * ly, 0.0)) / x
    else:
        lb = log_term(spec, one_idx, np.zeros_like(one_idx))
        lpb, _ = _factors(params, "y", reading, one_idx, -np.ones_like(one_idx))
        with np.errstate(divide="ignore", invalid="ignore"):
            bterms = np.exp(lb + lpb + np.where(one_idx > 0, one_idx * lx, 0.0)) / y
    boundary = _csum(np.nan_to_num(bterms))
    value = _csum(np.where(keep, np.exp(la + pw), 0.0))
    return OperatorResidual(equation, int(T), residual, tail, rounding, boundary, value)


def random_params(rng, max_exponent=3):
    """Random D1 bindings with integer index coefficients in 1..max_exponent.

    Exponents are redrawn until Delta, Delta' >= 0 so the series has a region.
    """
    p = {f"gamma{i}": round(float(rng.uniform(0.3, 1.5)), 4) for i in (1, 2, 3)}
    p.update({f"delta{i}": round(float(rng.uniform(0.8, 2.5)), 4) for i in (1, 2, 3)})
    while True:
        e = {k: int(rng.integers(1, max_exponent + 1)) for k in _EXPONENTS}
        if (e["alpha3"] + e["alpha4"] >= e["alpha1"] + e["alpha2"]
                and e["beta3"] + e["beta4"] >= e["beta1"] + e["beta2"]):
            p.update(e)
            return p
