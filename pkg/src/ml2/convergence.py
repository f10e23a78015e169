"""Horn-type convergence regions of double series.

For a spec with factors ``(c, a, b)`` the ratio ``A(m+1, n)/A(m, n)`` along the
ray ``(m, n) = (mu t, nu t)`` behaves like ``t**-Delta / E(mu, nu)`` with

    E(mu, nu)  = prod_den (a mu + b nu)**a / prod_num (a mu + b nu)**a
    Delta      = sum_den a - sum_num a

and ``E'``, ``Delta'`` the same with the exponent ``b``.  ``E`` is homogeneous
of degree ``Delta``, so on the finite-radius axis the minimum over the ray
``mu + nu = 1`` is the minimum over the whole quadrant.
"""
from __future__ import annotations

import io
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .series import SeriesSpec

SIGN_TOL = 1e-12
CURVE_POINTS = 64
# logit range of the ray scan; mu = 1/(1+exp(-s)) reaches ~1e-17 at the ends
_SCAN = np.linspace(-38.0, 38.0, 4001)
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0

CASE_LABELS = {
    1: "case 1: converges for all x, y",
    2: "case 2: converges for |x| < rho, |y| < rho'",
    3: "case 3: converges only at x = y = 0",
    4: "case 4: converges for |x| < rho, all y",
    5: "case 5: converges for all x, |y| < rho'",
}


def _sign(v):
    if v > SIGN_TOL:
        return 1
    if v < -SIGN_TOL:
        return -1
    return 0


def _rows(spec):
    """(sign, a, b) per factor: +1 for denominators, -1 for numerators."""
    out = [(-1.0, f.a, f.b) for f in spec.numerators]
    out += [(1.0, f.a, f.b) for f in spec.denominators]
    return out


def horn_exponents(spec: SeriesSpec):
    """(Delta, Delta') = (sum_den a - sum_num a, sum_den b - sum_num b)."""
    if spec.arity != 2:
        raise ValueError("Horn analysis needs a bivariate spec")
    d = math.fsum(s * a for s, a, _ in _rows(spec))
    dp = math.fsum(s * b for s, _, b in _rows(spec))
    return d, dp


def _log_functional(rows, mu, nu, which):
    """log E (which=0) or log E' (which=1) at arrays mu, nu > 0."""
    den = np.zeros(np.shape(mu))
    num = np.zeros(np.shape(mu))
    for s, a, b in rows:
        ex = a if which == 0 else b
        if ex == 0.0:
            continue
        lin = a * mu + b * nu
        if np.any(lin <= 0):
            raise DomainError(f"linear form {a}*mu + {b}*nu is not positive")
        if s > 0:
            den = den + ex * np.log(lin)
        else:
            num = num + ex * np.log(lin)
    return den - num


def radius_functionals(spec: SeriesSpec, mu: float, nu: float):
    """(E, E') at a direction (mu, nu).

    A zero component is taken as the limit from inside the quadrant; the
    result may then be 0 or inf.
    """
    if spec.arity != 2:
        raise ValueError("Horn analysis needs a bivariate spec")
    mu, nu = float(mu), float(nu)
    if mu < 0 or nu < 0 or (mu == 0 and nu == 0) or not (math.isfinite(mu) and math.isfinite(nu)):
        raise DomainError(f"direction ({mu}, {nu}) outside the closed quadrant")
    rows = _rows(spec)
    if mu > 0 and nu > 0:
        return (
            float(np.exp(_log_functional(rows, mu, nu, 0))),
            float(np.exp(_log_functional(rows, mu, nu, 1))),
        )
    return _edge_limit(rows, mu, nu, 0), _edge_limit(rows, mu, nu, 1)


def _edge_limit(rows, mu, nu, which):
    """Limit of E (or E') as the direction approaches an axis."""
    # the vanishing variable is eps; factors whose linear form vanishes with it
    # contribute eps**(+-ex), the rest evaluate at eps = 0
    log_val = 0.0
    eps_power = 0.0
    for s, a, b in rows:
        ex = a if which == 0 else b
        if ex == 0.0:
            continue
        lin = a * mu + b * nu
        if lin == 0.0:
            coef = a if mu == 0 else b
            eps_power += s * ex
            log_val += s * ex * math.log(coef)
        else:
            log_val += s * ex * math.log(lin)
    p = _sign(eps_power)
    if p > 0:
        return 0.0
    if p < 0:
        return math.inf
    return math.exp(log_val)


def _minimize_on_ray(spec, which):
    """min over mu in (0, 1), nu = 1 - mu, of E (which=0) or E' (which=1)."""
    rows = _rows(spec)
    mu = 1.0 / (1.0 + np.exp(-_SCAN))
    nu = 1.0 / (1.0 + np.exp(_SCAN))
    vals = _log_functional(rows, mu, nu, which)
    i = int(np.argmin(vals))
    best = float(vals[i])

    lo = _SCAN[max(i - 1, 0)]
    hi = _SCAN[min(i + 1, _SCAN.size - 1)]

    def f(s):
        m = 1.0 / (1.0 + math.exp(-s))
        n = 1.0 / (1.0 + math.exp(s))
        return float(_log_functional(rows, np.array(m), np.array(n), which))

    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(80):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = f(d)
    best = min(best, fc, fd)
    edges = [_edge_limit(rows, 0.0, 1.0, which), _edge_limit(rows, 1.0, 0.0, which)]
    return min([math.exp(best)] + edges)


@dataclass
class ConvergenceReport:
    delta: float
    delta_prime: float
    case: int | None
    label: str
    G: float
    G_prime: float
    rho: float
    rho_prime: float
    curve: list = field(default_factory=list)
    note: str = ""

    def curve_csv(self):
        buf = io.StringIO()
        buf.write("mu,nu,r,s\n")
        for mu, nu, r, s in self.curve:
            buf.write(f"{mu:.17g},{nu:.17g},{r:.17g},{s:.17g}\n")
        return buf.getvalue()

    def to_dict(self):
        return {
            "delta": self.delta,
            "delta_prime": self.delta_prime,
            "case": self.case,
            "label": self.label,
            "G": self.G,
            "G_prime": self.G_prime,
            "rho": self.rho,
            "rho_prime": self.rho_prime,
            "curve": [list(p) for p in self.curve],
            "note": self.note,
        }

    def contains(self, x, y):
        """True when (x, y) lies strictly inside the polydisk |x| < rho, |y| < rho'."""
        return abs(x) < self.rho and abs(y) < self.rho_prime


def classify(spec: SeriesSpec) -> ConvergenceReport:
    """Case label and radii from the signs of (Delta, Delta')."""
    d, dp = horn_exponents(spec)
    sd, sdp = _sign(d), _sign(dp)
    rows = _rows(spec)
    G = _edge_limit(rows, 1.0, 0.0, 0)
    Gp = _edge_limit(rows, 0.0, 1.0, 1)
    inf = math.inf

    def radius(s, which):
        if s > 0:
            return inf
        if s < 0:
            return 0.0
        return _minimize_on_ray(spec, which)

    rho, rho_p = radius(sd, 0), radius(sdp, 1)
    case = {(1, 1): 1, (0, 0): 2, (-1, -1): 3, (0, 1): 4, (1, 0): 5}.get((sd, sdp))
    curve = []
    note = ""
    if case is not None:
        label = CASE_LABELS[case]
    else:
        # the sign patterns (+,-), (-,+), (0,-), (-,0)
        axis = "y" if sdp < 0 else "x"
        label = f"divergent-{axis}"
        note = (
            f"Delta={d:.17g}, Delta'={dp:.17g}: terms grow along the {axis}-axis, so the "
            f"series diverges for {axis} != 0; outside cases 1-5, no region is claimed"
        )
    if case == 2:
        mus = (np.arange(CURVE_POINTS) + 0.5) / CURVE_POINTS
        nus = 1.0 - mus
        r = np.exp(_log_functional(rows, mus, nus, 0))
        s = np.exp(_log_functional(rows, mus, nus, 1))
        curve = [(float(a), float(b), float(c), float(e)) for a, b, c, e in zip(mus, nus, r, s)]
        note = "boundary |x| = rho or |y| = rho' is unclassified"
    return ConvergenceReport(d, dp, case, label, G, Gp, rho, rho_p, curve, note)


def horn_limit_oracle(spec: SeriesSpec, mu: float, nu: float, t: float = 1e6, richardson: bool = True):
    """Numeric E, E' from raw coefficient ratios at (mu t, nu t).

    Independent of the closed form: uses only log A at real indices.  The raw
    ratio carries an O(1/t) bias; ``richardson`` combines t and 2t to cancel it.
    """
    from .series import log_term

    d, dp = horn_exponents(spec)

    def logs(tt):
        m, n = mu * tt, nu * tt
        base = log_term(spec, m, n)
        lf = (log_term(spec, m + 1, n) - base).real
        lg = (log_term(spec, m, n + 1) - base).real
        # f ~ t**-Delta / E  =>  log E = -Delta log t - log f
        return -d * math.log(tt) - lf, -dp * math.log(tt) - lg

    le, lep = logs(t)
    if richardson:
        le2, lep2 = logs(2 * t)
        le, lep = 2 * le2 - le, 2 * lep2 - lep
    return math.exp(le), math.exp(lep)


def univariate_radius(spec: SeriesSpec) -> float:
    """Radius of a one-variable series from the same asymptotics.

    Delta > 0 gives inf, Delta < 0 gives 0, Delta = 0 gives prod_den a**a / prod_num a**a.
    Negative coefficients (Wright-type kernels) contribute |a|**|a|.
    """
    if spec.arity != 1:
        raise ValueError("univariate_radius needs an arity-1 spec")
    d = math.fsum(abs(f.a) for f in spec.denominators) - math.fsum(f.a for f in spec.numerators)
    s = _sign(d)
    if s > 0:
        return math.inf
    if s < 0:
        return 0.0
    log_r = math.fsum(abs(f.a) * math.log(abs(f.a)) for f in spec.denominators if f.a != 0)
    log_r -= math.fsum(f.a * math.log(f.a) for f in spec.numerators if f.a != 0)
    return math.exp(log_r)


def d1_functionals(params, mu: float, nu: float):
    """Closed-form (E, E') for D1 at mu, nu > 0; a cross-check of :func:`radius_functionals`."""
    a1, a2, a3, a4 = (float(params[f"alpha{i}"]) for i in range(1, 5))
    b1, b2, b3, b4 = (float(params[f"beta{i}"]) for i in range(1, 5))
    E = (mu ** (a4 - a2) * (a3 * mu + b3 * nu) ** a3 * a4**a4
         / ((a1 * mu + b1 * nu) ** a1 * a2**a2))
    Ep = (nu ** (b4 - b2) * (a3 * mu + b3 * nu) ** b3 * b4**b4
          / ((a1 * mu + b1 * nu) ** b1 * b2**b2))
    return E, Ep


def random_case2_d1(rng, tries=1000):
    """Random D1 bindings with Delta = Delta' = 0 and a nondegenerate polydisk (rho, rho' > 0).

    alpha4 > alpha2 (or beta4 > beta2) sends E to 0 on an edge and collapses
    the polydisk, so those draws are rejected.
    """
    from .presets import preset

    def u(lo, hi, nd=2):
        return round(float(rng.uniform(lo, hi)), nd)

    for _ in range(tries):
        a1, a2, a3, b1, b2, b3 = (u(0.5, 2.0) for _ in range(6))
        a4, b4 = round(a1 + a2 - a3, 2), round(b1 + b2 - b3, 2)
        if not (0.3 <= a4 <= a2 and 0.3 <= b4 <= b2):
            continue
        p = dict(alpha1=a1, alpha2=a2, alpha3=a3, alpha4=a4, beta1=b1, beta2=b2, beta3=b3, beta4=b4)
        p.update({f"gamma{i}": u(0.3, 1.5, 3) for i in (1, 2, 3)})
        p.update({f"delta{i}": u(0.8, 2.5, 3) for i in (1, 2, 3)})
        if classify(preset("D1", p)).rho > 0:
            return p
    raise RuntimeError("no admissible case-2 binding found")
