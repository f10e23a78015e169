"""Numerical checks of the integral identities satisfied by D1 and its relatives.

Every identity has a *series side* (``lhs``: a direct series evaluation) and a
*quadrature side* (``rhs``: Gauss rules applied to an integrand built from
other series).  The two sides share no code beyond the coefficient engine.

Catalog keys:

    euler1 .. euler10   Beta-kernel representations of D1 (euler10 is the
                        double integral whose proof expands both kernels)
    lemma1, lemma2      representations of E2 with Prabhakar-type and
                        Wright-type kernels
    laplace22 .. 25     one- and two-dimensional Laplace transforms

Bindings are real.  A few printed forms only hold under a correction; the
``variant`` of an IdentityCase selects ``"corrected"`` (default) or
``"printed"``, and each catalog entry's ``note`` says what differs.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .convergence import classify, univariate_radius
from .errors import NonConvergence, PreconditionViolated
from .gamma import gamma
from .presets import preset
from .quadrature import MAX_ORDER, build_rule
from .series import EvalOptions, evaluate_many

D1_KEYS = (
    "gamma1", "alpha1", "beta1", "gamma2", "alpha2", "gamma3", "beta2",
    "delta1", "alpha3", "beta3", "delta2", "alpha4", "delta3", "beta4",
)
E2_KEYS = (
    "gamma1", "alpha1", "beta1", "gamma2", "alpha2",
    "delta1", "alpha3", "beta2", "delta2", "alpha4", "delta3", "beta3",
)
E1_KEYS = (
    "gamma1", "alpha1", "gamma2", "beta1",
    "delta1", "alpha2", "beta2", "delta2", "alpha3", "delta3", "beta3",
)
E8_KEYS = ("gamma1", "alpha1", "beta1", "delta1", "alpha2", "beta2", "delta2", "alpha3", "delta3", "beta3")
D2_KEYS = (
    "gamma1", "alpha1", "beta1", "gamma2", "alpha2", "gamma3", "beta2",
    "delta1", "alpha3", "delta2", "beta3", "delta3", "alpha4", "delta4", "beta4",
)

# sample grid: fractions of the (half-)radius along each axis
GRID_FRACTIONS = (-0.9, 0.35, 1.0)
# stand-in radius when the classified radius is infinite
DEFAULT_RADIUS = 1.0
SMALL_LHS = 1e-10
GRADING = 4


def _gamma(z):
    return gamma(z).real


def _take(b, keys, **rename):
    """Preset parameters from bindings; ``rename`` maps preset key -> value."""
    out = {k: b[k] for k in keys}
    out.update(rename)
    return out


@dataclass
class VerifyOptions:
    tol: float = 1e-6
    order: int = 64
    max_order: int = MAX_ORDER
    # tensor rules stop doubling here to keep node counts manageable
    max_order_2d: int = 128
    doubling_tol: float = 1e-10
    series_rel_tol: float = 1e-14
    # identity tolerances are far above double rounding; longdouble terms cost ~2x
    series_precision: str = "double"
    # False: use ``order`` as given, no doubling
    adaptive: bool = True

    @property
    def eval_opts(self):
        return EvalOptions(rel_tol=self.series_rel_tol, precision=self.series_precision)


@dataclass
class IdentityCase:
    id: str
    bindings: dict
    samples: list = field(default_factory=list)
    variant: str = "corrected"


@dataclass
class SampleResult:
    x: float
    y: float
    lhs: float
    rhs: float
    abs_residual: float
    rel_residual: float


@dataclass
class IdentityReport:
    id: str
    bindings: dict
    samples: list
    passed: bool
    tolerance: float
    variant: str = "corrected"
    quad_order: int = 0
    quad_error: float = 0.0

    def to_dict(self):
        return {
            "id": self.id,
            "bindings": dict(sorted(self.bindings.items())),
            "samples": [
                {"x": s.x, "y": s.y, "lhs": s.lhs, "rhs": s.rhs, "rel_residual": s.rel_residual}
                for s in self.samples
            ],
            "pass": self.passed,
            "tolerance": self.tolerance,
            "variant": self.variant,
            "quad_order": self.quad_order,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=False)

    @property
    def max_rel_residual(self):
        return max((s.rel_residual for s in self.samples), default=0.0)


# -- quadrature drivers ------------------------------------------------------------
#
# Each integrand callback receives node arrays and returns shape (nodes, samples).


def _series(spec, X, Y, opts):
    X = np.asarray(X, dtype=float)
    Y = np.broadcast_to(np.asarray(Y, dtype=float), X.shape)
    vals = evaluate_many(spec, X.ravel(), Y.ravel(), opts.eval_opts).values
    return vals.real.reshape(X.shape)


def _converge(build, opts, two_d):
    """Run ``build(order)`` with order doubling until successive results settle."""
    cap = opts.max_order_2d if two_d else opts.max_order
    order = min(opts.order, cap)
    prev = build(order)
    err = math.inf
    if not opts.adaptive:
        return prev, order, err
    while order < cap:
        order = min(2 * order, cap)
        cur = build(order)
        err = float(np.max(np.abs(cur - prev) / np.maximum(np.abs(cur), 1e-300)))
        prev = cur
        if err <= opts.doubling_tol:
            break
    return prev, order, err


def _jacobi(a, b, integrand, opts):
    def build(n):
        r = build_rule("jacobi", n, a, b, grading=GRADING)
        return r.weights @ integrand(r.nodes)

    return _converge(build, opts, False)


def _jacobi2(ab1, ab2, integrand, opts):
    def build(n):
        r1 = build_rule("jacobi", n, *ab1, grading=GRADING)
        r2 = build_rule("jacobi", n, *ab2, grading=GRADING)
        X1, X2 = np.meshgrid(r1.nodes, r2.nodes, indexing="ij")
        W = np.outer(r1.weights, r2.weights).ravel()
        return W @ integrand(X1.ravel(), X2.ravel())

    return _converge(build, opts, True)


def _laguerre(a, integrand, opts):
    def build(n):
        r = build_rule("laguerre", n, a)
        return r.weights @ integrand(r.nodes)

    return _converge(build, opts, False)


def _laguerre2(a1, a2, integrand, opts):
    def build(n):
        r1 = build_rule("laguerre", n, a1)
        r2 = build_rule("laguerre", n, a2)
        U1, U2 = np.meshgrid(r1.nodes, r2.nodes, indexing="ij")
        W = np.outer(r1.weights, r2.weights).ravel()
        return W @ integrand(U1.ravel(), U2.ravel())

    return _converge(build, opts, True)


def _jacobi_laguerre(ab, a_lag, integrand, opts):
    def build(n):
        r1 = build_rule("jacobi", n, *ab, grading=GRADING)
        r2 = build_rule("laguerre", n, a_lag)
        X, U = np.meshgrid(r1.nodes, r2.nodes, indexing="ij")
        W = np.outer(r1.weights, r2.weights).ravel()
        return W @ integrand(X.ravel(), U.ravel())

    return _converge(build, opts, True)


# -- identity catalog --------------------------------------------------------------


def _d1(b):
    return preset("D1", **_take(b, D1_KEYS))


def _require(cond, msg):
    if not cond:
        raise PreconditionViolated(msg)


def _positive(b, *keys):
    for k in keys:
        _require(b[k] > 0, f"{k} must be > 0, got {b[k]}")


@dataclass(frozen=True)
class _Identity:
    id: str
    family: str
    note: str
    keys: tuple
    check: object
    series_side: object  # (b, xs, ys, opts, variant) -> values
    quad_side: object  # (b, xs, ys, opts, variant) -> (values, order, err)
    region_specs: object  # b -> list of (spec, x-scale, y-scale)
    sampler: object  # rng -> bindings
    extras: tuple = ()


_CATALOG: dict[str, _Identity] = {}


def _register(ident):
    _CATALOG[ident.id] = ident
    return ident


# shared random pieces -------------------------------------------------------------

_EXP_GRID = np.array([0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0])


def _pick(rng, grid=_EXP_GRID):
    return float(grid[rng.integers(len(grid))])


def _unif(rng, lo, hi):
    # rounded so that bindings print compactly and reproduce exactly
    return round(float(rng.uniform(lo, hi)), 4)


def _random_d1(rng, constrain=None, tries=1000):
    """D1 bindings with Delta, Delta' >= 0 (a nonempty convergence region)."""
    for _ in range(tries):
        b = {f"gamma{i}": _unif(rng, 0.4, 1.6) for i in (1, 2, 3)}
        b.update({f"delta{i}": _unif(rng, 0.8, 2.4) for i in (1, 2, 3)})
        b.update({f"alpha{i}": _pick(rng) for i in (1, 2, 3, 4)})
        b.update({f"beta{i}": _pick(rng) for i in (1, 2, 3, 4)})
        if constrain:
            constrain(b)
        d = b["alpha3"] + b["alpha4"] - b["alpha1"] - b["alpha2"]
        dp = b["beta3"] + b["beta4"] - b["beta1"] - b["beta2"]
        if d >= 0 and dp >= 0:
            return b
    raise RuntimeError("could not draw admissible D1 bindings")


def _d1_regions(b):
    return [(_d1(b), 1.0, 1.0)]


# euler1: Beta integral over the gamma2 slot ---------------------------------------


def _e1_check(b):
    _require(b["mu"] > b["gamma2"] > 0, "needs Re mu > Re gamma2 > 0")


def _e1_series(b, xs, ys, opts, variant):
    return _series(_d1(b), xs, ys, opts)


def _e1_quad(b, xs, ys, opts, variant):
    inner = preset("D1", **_take(b, D1_KEYS, gamma2=b["mu"]))
    c = _gamma(b["mu"]) / (_gamma(b["gamma2"]) * _gamma(b["mu"] - b["gamma2"]))

    def f(xi):
        X = xs[None, :] * xi[:, None] ** b["alpha2"]
        return _series(inner, X, ys[None, :] + 0 * X, opts)

    v, n, e = _jacobi(b["gamma2"] - 1, b["mu"] - b["gamma2"] - 1, f, opts)
    return c * v, n, e


def _e1_sample(rng):
    b = _random_d1(rng)
    b["mu"] = round(b["gamma2"] + _unif(rng, 0.3, 1.5), 4)
    return b


_register(_Identity(
    "euler1", "euler", "gamma2 -> mu with x xi^alpha2; Jacobi weight xi^(gamma2-1) (1-xi)^(mu-gamma2-1)",
    D1_KEYS, _e1_check, _e1_series, _e1_quad, _d1_regions, _e1_sample, ("mu",),
))


# euler2: Beta integral over the gamma3 slot ---------------------------------------


def _e2_check(b):
    _require(b["mu"] > b["gamma3"] > 0, "needs Re mu > Re gamma3 > 0")


def _e2_quad(b, xs, ys, opts, variant):
    inner = preset("D1", **_take(b, D1_KEYS, gamma3=b["mu"]))
    c = _gamma(b["mu"]) / (_gamma(b["gamma3"]) * _gamma(b["mu"] - b["gamma3"]))

    def f(xi):
        Y = ys[None, :] * xi[:, None] ** b["beta2"]
        return _series(inner, xs[None, :] + 0 * Y, Y, opts)

    v, n, e = _jacobi(b["gamma3"] - 1, b["mu"] - b["gamma3"] - 1, f, opts)
    return c * v, n, e


def _e2_sample(rng):
    b = _random_d1(rng)
    b["mu"] = round(b["gamma3"] + _unif(rng, 0.3, 1.5), 4)
    return b


_register(_Identity(
    "euler2", "euler", "gamma3 -> mu with y xi^beta2",
    D1_KEYS, _e2_check, _e1_series, _e2_quad, _d1_regions, _e2_sample, ("mu",),
))


# euler3: double Beta integral over gamma2 and gamma3 ------------------------------


def _e3_check(b):
    _require(b["mu1"] > b["gamma2"] > 0, "needs Re mu1 > Re gamma2 > 0")
    _require(b["mu2"] > b["gamma3"] > 0, "needs Re mu2 > Re gamma3 > 0")


def _e3_quad(b, xs, ys, opts, variant):
    inner = preset("D1", **_take(b, D1_KEYS, gamma2=b["mu1"], gamma3=b["mu2"]))
    c = _gamma(b["mu1"]) * _gamma(b["mu2"]) / (
        _gamma(b["gamma2"]) * _gamma(b["gamma3"])
        * _gamma(b["mu1"] - b["gamma2"]) * _gamma(b["mu2"] - b["gamma3"])
    )

    def f(xi, eta):
        X = xs[None, :] * xi[:, None] ** b["alpha2"]
        Y = ys[None, :] * eta[:, None] ** b["beta2"]
        return _series(inner, X, Y, opts)

    v, n, e = _jacobi2(
        (b["gamma2"] - 1, b["mu1"] - b["gamma2"] - 1),
        (b["gamma3"] - 1, b["mu2"] - b["gamma3"] - 1),
        f, opts,
    )
    return c * v, n, e


def _e3_sample(rng):
    b = _random_d1(rng)
    b["mu1"] = round(b["gamma2"] + _unif(rng, 0.3, 1.5), 4)
    b["mu2"] = round(b["gamma3"] + _unif(rng, 0.3, 1.5), 4)
    return b


_register(_Identity(
    "euler3", "euler", "gamma2 -> mu1, gamma3 -> mu2; tensor Jacobi rule",
    D1_KEYS, _e3_check, _e1_series, _e3_quad, _d1_regions, _e3_sample, ("mu1", "mu2"),
))


# euler4: integrating over the delta2, delta3 slots --------------------------------


def _e4_check(b):
    _positive(b, "sigma1", "sigma2", "delta2", "delta3")


def _e4_series(b, xs, ys, opts, variant):
    spec = preset("D1", **_take(b, D1_KEYS, delta2=b["delta2"] + b["sigma1"], delta3=b["delta3"] + b["sigma2"]))
    return _gamma(b["sigma1"]) * _gamma(b["sigma2"]) * _series(spec, xs, ys, opts)


def _e4_quad(b, xs, ys, opts, variant):
    inner = _d1(b)

    def f(xi, eta):
        X = xs[None, :] * xi[:, None] ** b["alpha4"]
        Y = ys[None, :] * eta[:, None] ** b["beta4"]
        return _series(inner, X, Y, opts)

    return _jacobi2((b["delta2"] - 1, b["sigma1"] - 1), (b["delta3"] - 1, b["sigma2"] - 1), f, opts)


def _e4_regions(b):
    spec = preset("D1", **_take(b, D1_KEYS, delta2=b["delta2"] + b["sigma1"], delta3=b["delta3"] + b["sigma2"]))
    return [(spec, 1.0, 1.0), (_d1(b), 1.0, 1.0)]


def _e4_sample(rng):
    b = _random_d1(rng)
    b["sigma1"] = _unif(rng, 0.3, 1.5)
    b["sigma2"] = _unif(rng, 0.3, 1.5)
    return b


_register(_Identity(
    "euler4", "euler",
    "series side Gamma(sigma1) Gamma(sigma2) D1[delta2+sigma1, delta3+sigma2]; also needs delta2, delta3 > 0",
    D1_KEYS, _e4_check, _e4_series, _e4_quad, _e4_regions, _e4_sample, ("sigma1", "sigma2"),
))


# euler5: Beta integral over the gamma1 slot ---------------------------------------


def _e5_check(b):
    _require(b["mu"] > b["gamma1"] > 0, "needs Re mu > Re gamma1 > 0")


def _e5_quad(b, xs, ys, opts, variant):
    inner = preset("D1", **_take(b, D1_KEYS, gamma1=b["mu"]))
    c = _gamma(b["mu"]) / (_gamma(b["gamma1"]) * _gamma(b["mu"] - b["gamma1"]))

    def f(xi):
        X = xs[None, :] * xi[:, None] ** b["alpha1"]
        Y = ys[None, :] * xi[:, None] ** b["beta1"]
        return _series(inner, X, Y, opts)

    v, n, e = _jacobi(b["gamma1"] - 1, b["mu"] - b["gamma1"] - 1, f, opts)
    return c * v, n, e


def _e5_sample(rng):
    b = _random_d1(rng)
    b["mu"] = round(b["gamma1"] + _unif(rng, 0.3, 1.5), 4)
    return b


_register(_Identity(
    "euler5", "euler", "gamma1 -> mu with (x xi^alpha1, y xi^beta1)",
    D1_KEYS, _e5_check, _e1_series, _e5_quad, _d1_regions, _e5_sample, ("mu",),
))


# euler6: delta1 = mu1 + mu2 split into a D2 kernel --------------------------------


def _e6_lhs_spec(b):
    return preset("D1", **_take(b, D1_KEYS, delta1=b["mu1"] + b["mu2"]))


def _e6_kernel(b):
    return preset(
        "D2",
        gamma1=b["gamma1"], alpha1=b["alpha1"], beta1=b["beta1"],
        gamma2=b["gamma2"], alpha2=b["alpha2"], gamma3=b["gamma3"], beta2=b["beta2"],
        delta1=b["mu1"], alpha3=b["alpha3"], delta2=b["mu2"], beta3=b["beta3"],
        delta3=b["delta2"], alpha4=b["alpha4"], delta4=b["delta3"], beta4=b["beta4"],
    )


def _e6_check(b):
    _positive(b, "mu1", "mu2")


def _e6_series(b, xs, ys, opts, variant):
    return _series(_e6_lhs_spec(b), xs, ys, opts)


def _e6_quad(b, xs, ys, opts, variant):
    inner = _e6_kernel(b)

    def f(xi):
        X = xs[None, :] * xi[:, None] ** b["alpha3"]
        Y = ys[None, :] * (1 - xi[:, None]) ** b["beta3"]
        return _series(inner, X, Y, opts)

    return _jacobi(b["mu1"] - 1, b["mu2"] - 1, f, opts)


def _e6_sample(rng):
    b = _random_d1(rng)
    b["mu1"] = _unif(rng, 0.4, 1.4)
    b["mu2"] = _unif(rng, 0.4, 1.4)
    b["delta1"] = round(b["mu1"] + b["mu2"], 4)
    return b


_register(_Identity(
    "euler6", "euler", "D1 with delta1 = mu1 + mu2 against a D2 kernel at (x xi^alpha3, y (1-xi)^beta3)",
    D1_KEYS, _e6_check, _e6_series, _e6_quad,
    lambda b: [(_e6_lhs_spec(b), 1.0, 1.0), (_e6_kernel(b), 1.0, 1.0)],
    _e6_sample, ("mu1", "mu2"),
))


# euler7: product of two Prabhakar-type kernels ------------------------------------


def _e7_check(b):
    _require(b["alpha3"] == b["alpha1"] and b["beta3"] == b["beta1"],
             "needs alpha3 = alpha1 and beta3 = beta1 (denominator row delta1, alpha1, beta1)")
    _require(b["delta1"] > b["gamma1"] > 0, "needs Re delta1 > Re gamma1 > 0")


def _e7_kernels(b):
    kx = preset("EK", gamma=b["gamma2"], alpha=b["alpha2"], delta=b["delta2"], kappa=b["alpha4"])
    ky = preset("EK", gamma=b["gamma3"], alpha=b["beta2"], delta=b["delta3"], kappa=b["beta4"])
    return kx, ky


def _e7_quad(b, xs, ys, opts, variant):
    kx, ky = _e7_kernels(b)
    c = 1.0 / (_gamma(b["gamma1"]) * _gamma(b["delta1"] - b["gamma1"]))

    def f(xi):
        X = xs[None, :] * xi[:, None] ** b["alpha1"]
        Y = ys[None, :] * xi[:, None] ** b["beta1"]
        return _series(kx, X, 0, opts) * _series(ky, Y, 0, opts)

    v, n, e = _jacobi(b["gamma1"] - 1, b["delta1"] - b["gamma1"] - 1, f, opts)
    return c * v, n, e


def _e7_sample(rng):
    def fix(b):
        b["alpha3"], b["beta3"] = b["alpha1"], b["beta1"]
        b["delta1"] = round(b["gamma1"] + _unif(rng, 0.3, 1.5), 4)

    return _random_d1(rng, fix)


def _e7_regions(b):
    kx, ky = _e7_kernels(b)
    return [(_d1(b), 1.0, 1.0), (kx, 1.0, None), (ky, None, 1.0)]


_register(_Identity(
    "euler7", "euler", "valid only under alpha3 = alpha1, beta3 = beta1",
    D1_KEYS, _e7_check, _e1_series, _e7_quad, _e7_regions, _e7_sample,
))


# euler8: D5 kernel with gamma2 + gamma3 -------------------------------------------


def _e8_kernel(b):
    return preset(
        "D5",
        gamma1=b["gamma1"], alpha1=b["alpha1"], beta1=b["beta1"],
        gamma2=b["gamma2"] + b["gamma3"], alpha2=b["alpha2"], beta2=b["beta2"],
        delta1=b["delta1"], alpha3=b["alpha3"], beta3=b["beta3"],
        delta2=b["delta2"], alpha4=b["alpha4"], delta3=b["delta3"], beta4=b["beta4"],
    )


def _e8_check(b):
    _positive(b, "gamma2", "gamma3")


def _e8_quad(b, xs, ys, opts, variant):
    inner = _e8_kernel(b)
    g2, g3 = b["gamma2"], b["gamma3"]
    c = _gamma(g2 + g3) / (_gamma(g2) * _gamma(g3))

    def f(xi):
        X = xs[None, :] * xi[:, None] ** b["alpha2"]
        Y = ys[None, :] * (1 - xi[:, None]) ** b["beta2"]
        return _series(inner, X, Y, opts)

    v, n, e = _jacobi(g2 - 1, g3 - 1, f, opts)
    return c * v, n, e


_register(_Identity(
    "euler8", "euler", "D5 kernel with numerator (gamma2 + gamma3)_{alpha2 m + beta2 n}",
    D1_KEYS, _e8_check, _e1_series, _e8_quad,
    lambda b: [(_d1(b), 1.0, 1.0), (_e8_kernel(b), 1.0, 1.0)],
    lambda rng: _random_d1(rng),
))


# euler9: E2 kernel -----------------------------------------------------------------


def _e9_kernel(b, variant):
    last = b["beta3"] if variant == "printed" else b["beta4"]
    return preset(
        "E2",
        gamma1=b["gamma1"], alpha1=b["alpha1"], beta1=b["beta1"],
        gamma2=b["gamma2"], alpha2=b["alpha2"],
        delta1=b["delta1"] - b["gamma3"], alpha3=b["alpha3"], beta2=b["beta3"] - b["beta2"],
        delta2=b["delta2"], alpha4=b["alpha4"], delta3=b["delta3"], beta3=last,
    )


def _e9_check(b):
    _require(b["delta1"] > b["gamma3"] > 0, "needs Re delta1 > Re gamma3 > 0")
    _require(b["beta3"] > b["beta2"], "needs beta3 > beta2 (E2 kernel coefficient beta3 - beta2 > 0)")


def _e9_quad(b, xs, ys, opts, variant):
    inner = _e9_kernel(b, variant)
    c = 1.0 / _gamma(b["gamma3"])

    def f(xi):
        om = 1 - xi[:, None]
        X = xs[None, :] * om ** b["alpha3"]
        Y = ys[None, :] * xi[:, None] ** b["beta2"] * om ** (b["beta3"] - b["beta2"])
        return _series(inner, X, Y, opts)

    v, n, e = _jacobi(b["gamma3"] - 1, b["delta1"] - b["gamma3"] - 1, f, opts)
    return c * v, n, e


def _e9_sample(rng):
    def fix(b):
        if b["beta3"] <= b["beta2"]:
            b["beta3"] = b["beta2"] + 0.5
        b["delta1"] = round(b["gamma3"] + _unif(rng, 0.5, 1.5), 4)

    return _random_d1(rng, fix)


_register(_Identity(
    "euler9", "euler",
    "E2 kernel; its last denominator slot is (delta3, beta4) (printed variant: (delta3, beta3))",
    D1_KEYS, _e9_check, _e1_series, _e9_quad,
    lambda b: [(_d1(b), 1.0, 1.0), (_e9_kernel(b, "corrected"), 1.0, 1.0)],
    _e9_sample,
))


# euler10: double integral with a two-parameter ML kernel and a Prabhakar kernel ----


def _e10_lhs_spec(b):
    return preset("D1", **_take(b, D1_KEYS, alpha1=b["alpha3"] - b["alpha2"], beta3=b["beta1"]))


def _e10_kernels(b, variant):
    if variant == "printed":
        kx = preset("EK", gamma=b["gamma3"], alpha=b["beta2"], delta=b["delta2"], kappa=b["alpha4"])
        ky = preset("ML2", alpha=b["beta4"], beta=b["delta3"])
    else:
        kx = preset("ML2", alpha=b["alpha4"], beta=b["delta2"])
        ky = preset("EK", gamma=b["gamma3"], alpha=b["beta2"], delta=b["delta3"], kappa=b["beta4"])
    return kx, ky


def _e10_check(b):
    _positive(b, "gamma1", "gamma2")
    _require(b["delta1"] - b["gamma1"] - b["gamma2"] > 0, "needs Re(delta1 - gamma1 - gamma2) > 0")
    _require(b["alpha3"] - b["alpha2"] > 0, "needs alpha3 - alpha2 > 0")


def _e10_series(b, xs, ys, opts, variant):
    return _series(_e10_lhs_spec(b), xs, ys, opts)


def _e10_quad(b, xs, ys, opts, variant):
    kx, ky = _e10_kernels(b, variant)
    g1, g2, d1 = b["gamma1"], b["gamma2"], b["delta1"]
    c = 1.0 / (_gamma(g1) * _gamma(g2) * _gamma(d1 - g1 - g2))
    da = b["alpha3"] - b["alpha2"]

    def f(xi, eta):
        w = ((1 - xi) * eta)[:, None]
        X = xs[None, :] * xi[:, None] ** b["alpha2"] * w**da
        Y = ys[None, :] * w ** b["beta1"]
        return _series(kx, X, 0, opts) * _series(ky, Y, 0, opts)

    v, n, e = _jacobi2((g2 - 1, d1 - g2 - 1), (g1 - 1, d1 - g1 - g2 - 1), f, opts)
    return c * v, n, e


def _e10_sample(rng):
    def fix(b):
        if b["alpha3"] <= b["alpha2"]:
            b["alpha3"] = b["alpha2"] + 0.5
        # the series side has alpha1 -> alpha3 - alpha2 and beta3 -> beta1
        if b["beta4"] < b["beta2"]:
            b["beta4"] = b["beta2"]
        b["delta1"] = round(b["gamma1"] + b["gamma2"] + _unif(rng, 0.3, 1.5), 4)

    return _random_d1(rng, fix)


def _e10_regions(b):
    kx, ky = _e10_kernels(b, "corrected")
    return [(_e10_lhs_spec(b), 1.0, 1.0), (kx, 1.0, None), (ky, None, 1.0)]


_register(_Identity(
    "euler10", "euler",
    "series side D1(gamma1, alpha3-alpha2, beta1; ...; delta1, alpha3, beta1; ...); kernels "
    "E_{alpha4,delta2} at x xi^alpha2 [(1-xi) eta]^(alpha3-alpha2) and E^{gamma3,beta2}_{beta4,delta3} "
    "at y [(1-xi) eta]^beta1 (printed variant swaps the kernels)",
    D1_KEYS, _e10_check, _e10_series, _e10_quad, _e10_regions, _e10_sample,
))


# lemma1: E2 with Prabhakar-type and two-parameter ML kernels -----------------------


def _e2(b):
    return preset("E2", **_take(b, E2_KEYS))


def _l1_kernels(b):
    kx = preset("EK", gamma=b["gamma2"], alpha=b["alpha2"], delta=b["delta2"], kappa=b["alpha4"])
    ky = preset("ML2", alpha=b["beta3"], beta=b["delta3"])
    return kx, ky


def _l1_check(b):
    _require(b["delta1"] > b["gamma1"] > 0, "needs Re delta1 > Re gamma1 > 0")
    _require(b["alpha3"] == b["alpha1"] and b["beta2"] == b["beta1"], "needs alpha3 = alpha1 and beta2 = beta1")


def _e2_series(b, xs, ys, opts, variant):
    return _series(_e2(b), xs, ys, opts)


def _l1_quad(b, xs, ys, opts, variant):
    kx, ky = _l1_kernels(b)
    c = 1.0 / (_gamma(b["gamma1"]) * _gamma(b["delta1"] - b["gamma1"]))

    def f(xi):
        X = xs[None, :] * xi[:, None] ** b["alpha1"]
        Y = ys[None, :] * xi[:, None] ** b["beta1"]
        return _series(kx, X, 0, opts) * _series(ky, Y, 0, opts)

    v, n, e = _jacobi(b["gamma1"] - 1, b["delta1"] - b["gamma1"] - 1, f, opts)
    return c * v, n, e


def _random_e2(rng, constrain, tries=1000):
    for _ in range(tries):
        b = {"gamma1": _unif(rng, 0.4, 1.6), "gamma2": _unif(rng, 0.4, 1.6)}
        b.update({f"delta{i}": _unif(rng, 0.8, 2.4) for i in (1, 2, 3)})
        b.update({f"alpha{i}": _pick(rng) for i in (1, 2, 3, 4)})
        b.update({f"beta{i}": _pick(rng) for i in (1, 2, 3)})
        constrain(b)
        d = b["alpha3"] + b["alpha4"] - b["alpha1"] - b["alpha2"]
        dp = b["beta2"] + b["beta3"] - b["beta1"]
        if d >= 0 and dp >= 0:
            return b
    raise RuntimeError("could not draw admissible E2 bindings")


def _l1_sample(rng):
    def fix(b):
        b["alpha3"], b["beta2"] = b["alpha1"], b["beta1"]
        b["delta1"] = round(b["gamma1"] + _unif(rng, 0.3, 1.5), 4)

    return _random_e2(rng, fix)


def _l1_regions(b):
    kx, ky = _l1_kernels(b)
    return [(_e2(b), 1.0, 1.0), (kx, 1.0, None), (ky, None, 1.0)]


_register(_Identity(
    "lemma1", "lemma", "E2 under alpha3 = alpha1, beta2 = beta1",
    E2_KEYS, _l1_check, _e2_series, _l1_quad, _l1_regions, _l1_sample,
))


# lemma2: Wright-type kernels, Jacobi x Laguerre ------------------------------------


def _l2_kernels(b):
    h = b["delta1"] / 2
    kx = preset("WRIGHT", mu=h, alpha=b["alpha3"], delta=b["delta2"], beta=-b["alpha4"])
    ky = preset("WRIGHT", mu=h, alpha=b["beta2"], delta=b["delta3"], beta=-b["beta3"])
    return kx, ky


def _l2_check(b):
    _require(b["alpha3"] > b["alpha4"] and b["alpha3"] > 0, "needs alpha3 > alpha4, alpha3 > 0")
    _require(b["beta2"] > b["beta3"] and b["beta2"] > 0, "needs beta2 > beta3, beta2 > 0")
    _positive(b, "gamma1", "delta1")


def _l2_quad(b, xs, ys, opts, variant):
    kx, ky = _l2_kernels(b)
    c = 1.0 / (_gamma(b["gamma1"]) * _gamma(b["gamma2"]))
    h = b["delta1"] / 2

    def f(xi, eta):
        X = xs[None, :] * (eta ** b["alpha1"] * xi ** b["alpha3"])[:, None]
        Y = ys[None, :] * (eta ** b["beta1"] * (1 - xi) ** b["beta2"])[:, None]
        return _series(kx, X, 0, opts) * _series(ky, Y, 0, opts)

    v, n, e = _jacobi_laguerre((h - 1, h - 1), b["gamma1"] - 1, f, opts)
    return c * v, n, e


def _l2_sample(rng):
    def fix(b):
        # the representation drops (gamma2)_{alpha2 m} and keeps 1/Gamma(gamma2):
        # it matches E2 only for alpha2 = 0, Gamma(gamma2) = 1
        b["gamma2"], b["alpha2"] = 1.0, 0.0
        b["alpha1"], b["beta1"] = 1.0, 1.0
        b["alpha3"] = _pick(rng, np.array([1.25, 1.5, 1.75, 2.0]))
        b["alpha4"] = _pick(rng, np.array([0.5, 0.75, 1.0]))
        b["beta2"] = _pick(rng, np.array([1.25, 1.5, 1.75, 2.0]))
        b["beta3"] = _pick(rng, np.array([0.5, 0.75, 1.0]))

    return _random_e2(rng, fix)


def _l2_regions(b):
    return [(_e2(b), 1.0, 1.0)]


_register(_Identity(
    "lemma2", "lemma",
    "holds as printed only when alpha2 = 0 and Gamma(gamma2) = 1; bindings enforce gamma2 = 1, alpha2 = 0",
    E2_KEYS, _l2_check, _e2_series, _l2_quad, _l2_regions, _l2_sample,
))


# Laplace pairs -----------------------------------------------------------------------


def _pq_check(b, two_d):
    _require(b["p"] > 0, "needs Re p > 0")
    if two_d:
        _require(b["q"] > 0, "needs Re q > 0")


def _l22_rhs_spec(b):
    return preset(
        "E11",
        gamma1=b["gamma1"], alpha1=b["alpha1"], beta1=b["beta1"], gamma2=b["gamma2"], alpha2=b["alpha2"],
        gamma3=b["gamma3"], beta2=b["beta2"], delta1=b["delta2"], alpha3=b["alpha4"],
        delta2=b["delta3"], beta3=b["beta4"],
    )


def _l22_check(b):
    _pq_check(b, False)
    _positive(b, "delta1")


def _l22_series(b, xs, ys, opts, variant):
    p = b["p"]
    spec = _l22_rhs_spec(b)
    return p ** -b["delta1"] * _series(spec, xs / p ** b["alpha3"], ys / p ** b["beta3"], opts)


def _l22_quad(b, xs, ys, opts, variant):
    p = b["p"]
    inner = _d1(b)

    # t = u / p: integral = p^-delta1 * int u^(delta1-1) e^-u D1(x (u/p)^alpha3, y (u/p)^beta3) du
    def f(u):
        s = (u / p)[:, None]
        return _series(inner, xs[None, :] * s ** b["alpha3"], ys[None, :] * s ** b["beta3"], opts)

    v, n, e = _laguerre(b["delta1"] - 1, f, opts)
    return p ** -b["delta1"] * v, n, e


def _l22_sample(rng):
    def fix(b):
        b["alpha3"] = _pick(rng, np.array([1.0, 2.0]))
        b["beta3"] = _pick(rng, np.array([1.0, 2.0]))
        # keep the integrand of exponential order <= 1/2 in t
        b["alpha4"] = b["alpha1"] + b["alpha2"] + b["alpha3"] + _pick(rng, np.array([0.0, 0.5]))
        b["beta4"] = b["beta1"] + b["beta2"] + b["beta3"] + _pick(rng, np.array([0.0, 0.5]))

    b = _random_d1(rng, fix)
    b["p"] = 2.0
    return b


def _laplace_regions_1d(spec_fn, sx, sy):
    def regions(b):
        return [(spec_fn(b), sx(b), sy(b))]

    return regions


_register(_Identity(
    "laplace22", "laplace",
    "admissible when alpha4 >= alpha1 + alpha2 + alpha3 and likewise for beta (entire integrand of order <= 1/2)",
    D1_KEYS, _l22_check, _l22_series, _l22_quad,
    _laplace_regions_1d(_l22_rhs_spec, lambda b: b["p"] ** -b["alpha3"], lambda b: b["p"] ** -b["beta3"]),
    _l22_sample, ("p",),
))


def _e1(b):
    return preset("E1", **_take(b, E1_KEYS))


def _l23_rhs_spec(b):
    return preset(
        "D1",
        gamma1=b["rho"], alpha1=b["mu1"], beta1=b["mu2"], gamma2=b["gamma1"], alpha2=b["alpha1"],
        gamma3=b["gamma2"], beta2=b["beta1"], delta1=b["delta1"], alpha3=b["alpha2"], beta3=b["beta2"],
        delta2=b["delta2"], alpha4=b["alpha3"], delta3=b["delta3"], beta4=b["beta3"],
    )


def _l23_check(b):
    _pq_check(b, False)
    _positive(b, "rho", "mu1", "mu2")


def _l23_series(b, xs, ys, opts, variant):
    p, rho = b["p"], b["rho"]
    spec = _l23_rhs_spec(b)
    return _gamma(rho) * p**-rho * _series(spec, xs / p ** b["mu1"], ys / p ** b["mu2"], opts)


def _l23_quad(b, xs, ys, opts, variant):
    p, rho = b["p"], b["rho"]
    inner = _e1(b)

    def f(u):
        s = (u / p)[:, None]
        return _series(inner, xs[None, :] * s ** b["mu1"], ys[None, :] * s ** b["mu2"], opts)

    v, n, e = _laguerre(rho - 1, f, opts)
    return p**-rho * v, n, e


def _l23_sample(rng):
    for _ in range(1000):
        b = {"gamma1": _unif(rng, 0.4, 1.6), "gamma2": _unif(rng, 0.4, 1.6)}
        b.update({f"delta{i}": _unif(rng, 0.8, 2.4) for i in (1, 2, 3)})
        b.update({k: _pick(rng) for k in ("alpha1", "alpha2", "alpha3", "beta1", "beta2", "beta3")})
        b["rho"] = _unif(rng, 0.5, 2.0)
        b["mu1"] = b["mu2"] = 1.0
        b["p"] = 2.0
        if b["alpha2"] + b["alpha3"] - b["alpha1"] >= 2 * b["mu1"] and b["beta2"] + b["beta3"] - b["beta1"] >= 2 * b["mu2"]:
            return b
    raise RuntimeError("could not draw admissible E1 bindings")


_register(_Identity(
    "laplace23", "laplace",
    "E1 slots bound in print order (gamma1, alpha1; gamma2, beta1; delta1, alpha2, beta2; delta2, alpha3; delta3, beta3)",
    E1_KEYS, _l23_check, _l23_series, _l23_quad,
    _laplace_regions_1d(_l23_rhs_spec, lambda b: b["p"] ** -b["mu1"], lambda b: b["p"] ** -b["mu2"]),
    _l23_sample, ("rho", "mu1", "mu2", "p"),
))


def _e8(b):
    return preset("E8", **_take(b, E8_KEYS))


def _l24_rhs_spec(b):
    return preset(
        "D1",
        gamma1=b["gamma1"], alpha1=b["alpha1"], beta1=b["beta1"], gamma2=b["rho1"], alpha2=b["mu1"],
        gamma3=b["rho2"], beta2=b["mu2"], delta1=b["delta1"], alpha3=b["alpha2"], beta3=b["beta2"],
        delta2=b["delta2"], alpha4=b["alpha3"], delta3=b["delta3"], beta4=b["beta3"],
    )


def _l24_check(b):
    _pq_check(b, True)
    _positive(b, "rho1", "rho2", "mu1", "mu2")


def _l24_series(b, xs, ys, opts, variant):
    p, q = b["p"], b["q"]
    spec = _l24_rhs_spec(b)
    if variant == "printed":
        X, Y = xs, ys
    else:
        X, Y = xs / p ** b["mu1"], ys / q ** b["mu2"]
    c = _gamma(b["rho1"]) * _gamma(b["rho2"]) * p ** -b["rho1"] * q ** -b["rho2"]
    return c * _series(spec, X, Y, opts)


def _l24_quad(b, xs, ys, opts, variant):
    p, q = b["p"], b["q"]
    inner = _e8(b)

    def f(u1, u2):
        X = xs[None, :] * (u1 / p)[:, None] ** b["mu1"]
        Y = ys[None, :] * (u2 / q)[:, None] ** b["mu2"]
        return _series(inner, X, Y, opts)

    v, n, e = _laguerre2(b["rho1"] - 1, b["rho2"] - 1, f, opts)
    return p ** -b["rho1"] * q ** -b["rho2"] * v, n, e


def _l24_sample(rng):
    for _ in range(1000):
        b = {"gamma1": _unif(rng, 0.4, 1.6)}
        b.update({f"delta{i}": _unif(rng, 0.8, 2.4) for i in (1, 2, 3)})
        b.update({k: _pick(rng) for k in ("alpha1", "alpha2", "alpha3", "beta1", "beta2", "beta3")})
        b["rho1"], b["rho2"] = _unif(rng, 0.5, 2.0), _unif(rng, 0.5, 2.0)
        b["mu1"] = b["mu2"] = 1.0
        b["p"], b["q"] = 2.0, 2.0
        if b["alpha2"] + b["alpha3"] - b["alpha1"] >= 2 * b["mu1"] and b["beta2"] + b["beta3"] - b["beta1"] >= 2 * b["mu2"]:
            return b
    raise RuntimeError("could not draw admissible E8 bindings")


_register(_Identity(
    "laplace24", "laplace",
    "closed form evaluated at (x / p^mu1, y / q^mu2); the printed arguments (x, y) agree only at p = q = 1",
    E8_KEYS, _l24_check, _l24_series, _l24_quad,
    _laplace_regions_1d(_l24_rhs_spec, lambda b: b["p"] ** -b["mu1"], lambda b: b["q"] ** -b["mu2"]),
    _l24_sample, ("rho1", "rho2", "mu1", "mu2", "p", "q"),
))


def _d2(b):
    return preset("D2", **_take(b, D2_KEYS))


def _l25_rhs_spec(b):
    return preset(
        "E11",
        gamma1=b["gamma1"], alpha1=b["alpha1"], beta1=b["beta1"], gamma2=b["gamma2"], alpha2=b["alpha2"],
        gamma3=b["gamma3"], beta2=b["beta2"], delta1=b["delta3"], alpha3=b["alpha4"],
        delta2=b["delta4"], beta3=b["beta4"],
    )


def _l25_check(b):
    _pq_check(b, True)
    _positive(b, "delta1", "delta2")


def _l25_series(b, xs, ys, opts, variant):
    p, q = b["p"], b["q"]
    spec = _l25_rhs_spec(b)
    c = p ** -b["delta1"] * q ** -b["delta2"]
    return c * _series(spec, xs / p ** b["alpha3"], ys / q ** b["beta3"], opts)


def _l25_quad(b, xs, ys, opts, variant):
    p, q = b["p"], b["q"]
    inner = _d2(b)

    def f(u1, u2):
        X = xs[None, :] * (u1 / p)[:, None] ** b["alpha3"]
        Y = ys[None, :] * (u2 / q)[:, None] ** b["beta3"]
        return _series(inner, X, Y, opts)

    v, n, e = _laguerre2(b["delta1"] - 1, b["delta2"] - 1, f, opts)
    return p ** -b["delta1"] * q ** -b["delta2"] * v, n, e


def _l25_sample(rng):
    for _ in range(1000):
        b = {f"gamma{i}": _unif(rng, 0.4, 1.6) for i in (1, 2, 3)}
        b.update({f"delta{i}": _unif(rng, 0.8, 2.4) for i in (1, 2, 3, 4)})
        b.update({k: _pick(rng) for k in ("alpha1", "alpha2", "beta1", "beta2")})
        b["alpha3"] = _pick(rng, np.array([1.0, 2.0]))
        b["beta3"] = _pick(rng, np.array([1.0, 2.0]))
        b["alpha4"] = b["alpha1"] + b["alpha2"] + b["alpha3"] + _pick(rng, np.array([0.0, 0.5]))
        b["beta4"] = b["beta1"] + b["beta2"] + b["beta3"] + _pick(rng, np.array([0.0, 0.5]))
        b["p"], b["q"] = 2.0, 2.0
        return b
    raise RuntimeError("unreachable")


_register(_Identity(
    "laplace25", "laplace",
    "integrand D2(x t1^alpha3, y t2^beta3) and closed form E11(x / p^alpha3, y / q^beta3); "
    "the printed case is x = y = 1",
    D2_KEYS, _l25_check, _l25_series, _l25_quad,
    _laplace_regions_1d(_l25_rhs_spec, lambda b: b["p"] ** -b["alpha3"], lambda b: b["q"] ** -b["beta3"]),
    _l25_sample, ("p", "q"),
))


IDENTITY_IDS = tuple(_CATALOG)
EULER_IDS = tuple(k for k, v in _CATALOG.items() if v.family == "euler")
LEMMA_IDS = tuple(k for k, v in _CATALOG.items() if v.family == "lemma")
LAPLACE_IDS = tuple(k for k, v in _CATALOG.items() if v.family == "laplace")


def identity_note(identity_id):
    return _lookup(identity_id).note


def _lookup(identity_id):
    try:
        return _CATALOG[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}; known: {', '.join(IDENTITY_IDS)}") from None


def required_keys(identity_id):
    ident = _lookup(identity_id)
    return ident.keys + ident.extras


# -- sampling --------------------------------------------------------------------------


def sample_radii(identity_id, bindings):
    """Half-radius box (rx, ry) inside the convergence regions of every series involved."""
    ident = _lookup(identity_id)
    rx = ry = math.inf
    for spec, sx, sy in ident.region_specs(bindings):
        if spec.arity == 1:
            r = univariate_radius(spec)
            if sx is not None:
                rx = min(rx, r)
            if sy is not None:
                ry = min(ry, r)
            continue
        rep = classify(spec)
        # series evaluated at (x * sx, y * sy): radii in the sample variable scale by 1/s
        rx = min(rx, rep.rho / sx)
        ry = min(ry, rep.rho_prime / sy)
    rx = DEFAULT_RADIUS if math.isinf(rx) else rx
    ry = DEFAULT_RADIUS if math.isinf(ry) else ry
    return rx, ry


def sample_grid(rx, ry, half=0.5, fractions=GRID_FRACTIONS):
    """3x3 grid of points in the box |x| <= half*rx, |y| <= half*ry."""
    return [(half * rx * fx, half * ry * fy) for fx in fractions for fy in fractions]


def random_case(identity_id, rng, grid=True, half=0.5, **overrides):
    """An admissible IdentityCase with random bindings and a half-radius sample grid.

    ``overrides`` replace drawn bindings (typically the transform variables p, q).
    """
    ident = _lookup(identity_id)
    b = ident.sampler(rng)
    unknown = set(overrides) - set(b)
    if unknown:
        raise KeyError(f"{identity_id} has no bindings {sorted(unknown)}")
    b.update({k: float(v) for k, v in overrides.items()})
    rx, ry = sample_radii(identity_id, b)
    if ident.family == "laplace":
        # three arguments per transform parameter, inside the closed form's region
        pts = [(half * rx * fx, half * ry * fy) for fx, fy in ((0.8, 0.5), (-0.9, 0.35), (0.35, -1.0))]
    else:
        pts = sample_grid(rx, ry, half) if grid else [(0.0, 0.0)]
    return IdentityCase(identity_id, b, pts)


def check_preconditions(case: IdentityCase):
    ident = _lookup(case.id)
    missing = [k for k in required_keys(case.id) if k not in case.bindings]
    if missing:
        raise PreconditionViolated(f"{case.id} is missing bindings {missing}")
    for k, v in case.bindings.items():
        if isinstance(v, complex) or not math.isfinite(float(v)):
            raise PreconditionViolated(f"binding {k}={v!r} must be a finite real number")
    ident.check(case.bindings)


# -- verification ----------------------------------------------------------------------


def _verify(case: IdentityCase, opts: VerifyOptions | None, family: str | None):
    opts = opts or VerifyOptions()
    ident = _lookup(case.id)
    if family and ident.family != family:
        raise ValueError(f"{case.id} is a {ident.family} identity, not {family}")
    if case.variant not in ("corrected", "printed"):
        raise ValueError(f"unknown variant {case.variant!r}")
    check_preconditions(case)
    b = {k: float(v) for k, v in case.bindings.items()}
    pts = case.samples or [(0.0, 0.0)]
    xs = np.array([p[0] for p in pts], dtype=float)
    ys = np.array([p[1] for p in pts], dtype=float)

    lhs = np.asarray(ident.series_side(b, xs, ys, opts, case.variant), dtype=float)
    rhs, order, qerr = ident.quad_side(b, xs, ys, opts, case.variant)
    rhs = np.asarray(rhs, dtype=float)

    samples = []
    ok = True
    for x, y, l, r in zip(xs, ys, lhs, rhs):
        ab = abs(l - r)
        rel = ab / abs(l) if l != 0 else (0.0 if ab == 0 else math.inf)
        good = ab <= opts.tol if abs(l) < SMALL_LHS else rel <= opts.tol
        ok &= bool(good)
        samples.append(SampleResult(float(x), float(y), float(l), float(r), float(ab), float(rel)))
    return IdentityReport(case.id, dict(case.bindings), samples, ok, opts.tol, case.variant, order, qerr)


def verify_euler(case, opts=None):
    return _verify(case, opts, "euler")


def verify_lemma(case, opts=None):
    return _verify(case, opts, "lemma")


def verify_laplace(case, opts=None):
    return _verify(case, opts, "laplace")


def verify(case, opts=None):
    """Dispatch on the identity family."""
    return _verify(case, opts, None)


def verify_random(identity_id, seed=0, n_bindings=5, opts=None, half=0.5, **overrides):
    """Verify ``n_bindings`` random admissible cases; returns the list of reports."""
    rng = np.random.default_rng(seed)
    reports = []
    for _ in range(n_bindings):
        case = random_case(identity_id, rng, half=half, **overrides)
        try:
            reports.append(verify(case, opts))
        except NonConvergence as exc:
            reports.append(IdentityReport(
                case.id, case.bindings,
                [SampleResult(x, y, math.nan, math.nan, math.inf, math.inf) for x, y in case.samples],
                False, (opts or VerifyOptions()).tol, case.variant,
            ))
            reports[-1].error = str(exc)
    return reports
