"""Gaussian quadrature on [0, 1] and [0, inf).

Nodes come from the Jacobi matrix of the monic three-term recurrence
(Golub-Welsch); weights from the Christoffel function evaluated with a
normalised recurrence, which keeps the tiny Laguerre weights accurate.

Families:
    legendre          weight 1 on [0, 1]
    jacobi(a, b)      weight xi**a (1 - xi)**b on [0, 1], a, b > -1
    laguerre(a)       weight t**a exp(-t) on [0, inf), a > -1

A Jacobi rule can be *graded* with ``grading=k``: the substitution
xi = s**k / (s**k + (1 - s)**k) clusters nodes at both ends so that
integrands carrying non-integer powers xi**(c m) stay smooth in s.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

from .errors import DegenerateExponent, NonFinite
from .gamma import log_gamma

MIN_ORDER = 1
MAX_ORDER = 512
DEFAULT_ORDER = 64
DOUBLING_TOL = 1e-10


@dataclass(frozen=True)
class QuadratureRule:
    family: str
    order: int
    nodes: np.ndarray
    weights: np.ndarray
    a_exp: float = 0.0
    b_exp: float = 0.0
    grading: int = 1

    @property
    def domain(self):
        return (0.0, math.inf) if self.family == "laguerre" else (0.0, 1.0)

    def moment(self):
        """Exact integral of the weight function."""
        if self.family == "laguerre":
            return math.exp(log_gamma(self.a_exp + 1.0).real)
        return beta_fn(self.a_exp + 1.0, self.b_exp + 1.0)


def beta_fn(a, b):
    return math.exp((log_gamma(a) + log_gamma(b) - log_gamma(a + b)).real)


def _recurrence(family, n, a=0.0, b=0.0):
    """Monic recurrence (diag, offdiag**2) for the weight on its standard interval.

    jacobi: weight (1-x)**b (1+x)**a on [-1, 1] (mapped to xi = (1+x)/2 later)
    laguerre: t**a exp(-t).
    """
    k = np.arange(n, dtype=float)
    if family == "laguerre":
        diag = 2 * k + a + 1
        off2 = k[1:] * (k[1:] + a)
        return diag, off2
    # Jacobi in the (alpha, beta) = (b, a) convention of (1-x)^alpha (1+x)^beta
    al, be = b, a
    s = 2 * k + al + be
    with np.errstate(divide="ignore", invalid="ignore"):
        diag = (be**2 - al**2) / (s * (s + 2))
    # k = 0 has a removable singularity when alpha + beta = 0
    diag[0] = (be - al) / (al + be + 2)
    kk = k[1:]
    s1 = 2 * kk + al + be
    with np.errstate(divide="ignore", invalid="ignore"):
        off2 = 4 * kk * (kk + al) * (kk + be) * (kk + al + be) / (s1**2 * (s1 + 1) * (s1 - 1))
    if n > 1 and abs(al + be + 1) < 1e-14:
        # (s1 - 1) vanishes at k = 1 only in the limit; closed form there
        off2[0] = 4 * (1 + al) * (1 + be) / ((2 + al + be) ** 2 * (3 + al + be))
    return diag, off2


def _log_christoffel_weights(nodes, diag, off2, log_mu0):
    """w_i = 1 / sum_k p_k(x_i)**2 with orthonormal p_k, computed in log scale."""
    n = diag.size
    x = nodes
    b = np.sqrt(off2)
    p_prev = np.zeros_like(x)
    p = np.full_like(x, 1.0)
    # track p_k / exp(logscale) to avoid overflow
    logscale = np.full_like(x, -0.5 * log_mu0)
    total = np.ones_like(x)
    for k in range(n - 1):
        p_next = ((x - diag[k]) * p - (b[k - 1] if k > 0 else 0.0) * p_prev) / b[k]
        p_prev, p = p, p_next
        total += p * p
        big = np.abs(p) > 1e100
        if big.any():
            f = np.where(big, np.abs(p), 1.0)
            p = p / f
            p_prev = p_prev / f
            total = total / (f * f)
            logscale = logscale + np.log(f)
    # sum p_k^2 = total * exp(2 logscale), p_0 = mu0**-1/2
    return -np.log(total) - 2 * logscale


def _golub_welsch(family, order, a=0.0, b=0.0):
    diag, off2 = _recurrence(family, order, a, b)
    nodes = eigvalsh_tridiagonal(diag, np.sqrt(off2)) if order > 1 else diag.copy()
    if family == "laguerre":
        log_mu0 = log_gamma(a + 1.0).real
    else:
        log_mu0 = (a + b + 1) * math.log(2.0) + math.log(beta_fn(a + 1.0, b + 1.0))
    w = np.exp(_log_christoffel_weights(nodes, diag, off2, log_mu0))
    # pin the zeroth moment; removes the slow drift of the Christoffel sums
    w *= math.exp(log_mu0) / math.fsum(w)
    return nodes, w


def _check_exp(value, name):
    if not math.isfinite(value) or value <= -1.0:
        raise DegenerateExponent(f"{name} exponent must be > -1, got {value}")


def build_rule(family: str, order: int = DEFAULT_ORDER, a_exp: float = 0.0, b_exp: float = 0.0,
               grading: int = 1) -> QuadratureRule:
    """Gauss rule of the given family; exact for polynomials of degree 2*order - 1.

    For ``jacobi`` the weight is ``xi**a_exp (1 - xi)**b_exp``; for
    ``laguerre`` it is ``t**a_exp exp(-t)``.
    """
    order = int(order)
    if not MIN_ORDER <= order <= MAX_ORDER:
        raise ValueError(f"order must be in [{MIN_ORDER}, {MAX_ORDER}], got {order}")
    if family == "legendre":
        a_exp = b_exp = 0.0
        family_tag = "legendre"
    elif family == "jacobi":
        _check_exp(a_exp, "jacobi left")
        _check_exp(b_exp, "jacobi right")
        family_tag = "jacobi"
    elif family == "laguerre":
        _check_exp(a_exp, "laguerre")
        b_exp = 0.0
        grading = 1
        family_tag = "laguerre"
    else:
        raise ValueError(f"unknown quadrature family {family!r}")
    if grading < 1:
        raise ValueError("grading must be >= 1")

    if family_tag == "laguerre":
        nodes, weights = _golub_welsch("laguerre", order, a_exp)
    elif grading == 1:
        x, w = _golub_welsch("jacobi", order, a_exp, b_exp)
        nodes, weights = (1 + x) / 2, w / 2 ** (a_exp + b_exp + 1)
    else:
        # xi = s^k / D, D = s^k + (1-s)^k; dxi = k s^(k-1) (1-s)^(k-1) / D^2 ds
        # xi^a (1-xi)^b dxi = k s^(k(a+1)-1) (1-s)^(k(b+1)-1) D^-(a+b+2) ds
        k = grading
        ea, eb = k * (a_exp + 1) - 1, k * (b_exp + 1) - 1
        x, w = _golub_welsch("jacobi", order, ea, eb)
        s = (1 + x) / 2
        W = w / 2 ** (ea + eb + 1)
        sk, tk = s**k, (1 - s) ** k
        D = sk + tk
        nodes = sk / D
        weights = W * k * D ** -(a_exp + b_exp + 2)
    order_idx = np.argsort(nodes)
    return QuadratureRule(
        family_tag, order, nodes[order_idx], weights[order_idx], float(a_exp), float(b_exp), int(grading)
    )


def _apply(rule, f):
    vals = np.asarray(f(rule.nodes))
    if vals.shape == ():
        vals = np.full(rule.nodes.shape, vals)
    if not np.all(np.isfinite(vals)):
        bad = rule.nodes[~np.isfinite(vals)][0]
        raise NonFinite(f"integrand is not finite at node {bad!r}")
    return complex(np.sum(rule.weights * vals))


@dataclass
class IntegrationResult:
    value: complex
    error_estimate: float
    order: int
    history: list = field(default_factory=list)


def integrate(rule: QuadratureRule, f, adaptive: bool = False, rel_tol: float = DOUBLING_TOL):
    """Sum w_i f(x_i).  ``f`` receives the whole node array.

    With ``adaptive=True`` the order is doubled (up to MAX_ORDER) until two
    consecutive results agree to ``rel_tol``; an IntegrationResult is returned.
    """
    if not adaptive:
        return _apply(rule, f)
    prev = _apply(rule, f)
    history = [(rule.order, prev)]
    err = math.inf
    order = rule.order
    while order < MAX_ORDER:
        order = min(2 * order, MAX_ORDER)
        nxt = build_rule(rule.family, order, rule.a_exp, rule.b_exp, rule.grading)
        cur = _apply(nxt, f)
        history.append((order, cur))
        err = abs(cur - prev)
        prev = cur
        if err <= rel_tol * max(abs(cur), 1e-300):
            break
    return IntegrationResult(prev, err, order, history)


@dataclass(frozen=True)
class TensorRule:
    """Product of one-dimensional rules; nodes as an (npts, dim) array."""

    rules: tuple

    @property
    def nodes(self):
        grids = np.meshgrid(*[r.nodes for r in self.rules], indexing="ij")
        return np.stack([g.ravel() for g in grids], axis=1)

    @property
    def weights(self):
        grids = np.meshgrid(*[r.weights for r in self.rules], indexing="ij")
        w = np.ones(grids[0].size)
        for g in grids:
            w = w * g.ravel()
        return w


def tensor(*rules: QuadratureRule) -> TensorRule:
    return TensorRule(tuple(rules))


def integrate_tensor(trule: TensorRule, f):
    """Sum of w * f(*columns) over the product grid."""
    pts = trule.nodes
    vals = np.asarray(f(*pts.T))
    if not np.all(np.isfinite(vals)):
        raise NonFinite("integrand is not finite at a tensor node")
    return complex(np.sum(trule.weights * vals))
