"""Generic evaluator for Mittag-Leffler-type double (and single) power series.

A series is described by a :class:`SeriesSpec`: a product of generalized
Pochhammer numerators ``(gamma)_{a m + b n}`` and reciprocal-Gamma
denominators ``1/Gamma(delta + a m + b n)``, times ``x**m y**n``.  Every
preset in :mod:`ml2.presets` is one of these.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import NonConvergence, PoleError
from .gamma import is_pole_array, log_gamma_array

ABS_FLOOR = 1e-300
# terms this much larger than the running sum leave no significant digits
_BLOWUP_RATIO = 1e30
_CHUNK = 4096
GROWTH_START = 128
GROWTH_FACTOR = 1e6


@dataclass(frozen=True)
class NumFactor:
    """Numerator factor ``(gamma)_{a m + b n}``."""

    gamma: complex
    a: float
    b: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "gamma", complex(self.gamma))
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ValueError("non-finite index coefficient")
        if self.a < 0 or self.b < 0:
            raise ValueError(f"numerator coefficients must be >= 0, got ({self.a}, {self.b})")


@dataclass(frozen=True)
class DenFactor:
    """Denominator factor ``1/Gamma(delta + a m + b n)``."""

    delta: complex
    a: float
    b: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "delta", complex(self.delta))
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ValueError("non-finite index coefficient")


@dataclass(frozen=True)
class SeriesSpec:
    numerators: tuple[NumFactor, ...] = ()
    denominators: tuple[DenFactor, ...] = ()
    arity: int = 2
    note: str = ""
    # constant multiplier for presets whose printed form has Gamma prefactors
    scale: complex = 1.0

    def __post_init__(self):
        object.__setattr__(self, "numerators", tuple(self.numerators))
        object.__setattr__(self, "denominators", tuple(self.denominators))
        object.__setattr__(self, "scale", complex(self.scale))
        if self.arity not in (1, 2):
            raise ValueError(f"arity must be 1 or 2, got {self.arity}")
        if self.arity == 1 and any(f.b != 0 for f in self.factors):
            raise ValueError("univariate spec with a nonzero n-coefficient")

    @property
    def factors(self):
        return self.numerators + self.denominators

    def to_dict(self):
        d = {
            "arity": self.arity,
            "numerators": [
                {"gamma": [f.gamma.real, f.gamma.imag], "a": f.a, "b": f.b} for f in self.numerators
            ],
            "denominators": [
                {"delta": [f.delta.real, f.delta.imag], "a": f.a, "b": f.b}
                for f in self.denominators
            ],
            "note": self.note,
        }
        if self.scale != 1:
            d["scale"] = [self.scale.real, self.scale.imag]
        return d

    @classmethod
    def from_dict(cls, d):
        def cplx(v):
            if isinstance(v, (list, tuple)):
                re, im = v
                return complex(re, im)
            return complex(v)

        return cls(
            numerators=[NumFactor(cplx(f["gamma"]), f["a"], f.get("b", 0.0)) for f in d["numerators"]],
            denominators=[
                DenFactor(cplx(f["delta"]), f["a"], f.get("b", 0.0)) for f in d["denominators"]
            ],
            arity=int(d.get("arity", 2)),
            note=d.get("note", ""),
            scale=cplx(d.get("scale", 1.0)),
        )

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def swap_axes(spec: SeriesSpec) -> SeriesSpec:
    """Exchange the roles of m and n (and therefore of x and y)."""
    if spec.arity != 2:
        raise ValueError("swap_axes needs a bivariate spec")
    return replace(
        spec,
        numerators=tuple(NumFactor(f.gamma, f.b, f.a) for f in spec.numerators),
        denominators=tuple(DenFactor(f.delta, f.b, f.a) for f in spec.denominators),
    )


@dataclass(frozen=True)
class EvalOptions:
    rel_tol: float = 1e-14
    max_terms_per_index: int = 10_000
    summation: str = "diagonal"
    compensated: bool = True
    # False: return converged=False instead of raising NonConvergence
    strict: bool = True
    # "extended" forms terms and sums in longdouble; cancellation near |sum| << sum |terms|
    # then costs ~1e-19 per term instead of ~1e-16 (no gain where longdouble is double)
    precision: str = "extended"

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be > 0")
        if self.max_terms_per_index < 1:
            raise ValueError("max_terms_per_index must be >= 1")
        if self.summation not in ("diagonal", "row-major"):
            raise ValueError(f"unknown summation order {self.summation!r}")
        if self.precision not in ("double", "extended"):
            raise ValueError(f"unknown precision {self.precision!r}")

    @property
    def dtypes(self):
        """(real, complex) working dtypes."""
        if self.precision == "extended":
            return np.longdouble, np.clongdouble
        return np.float64, np.complex128


@dataclass(frozen=True)
class EvalResult:
    value: complex
    terms_used: int
    tail_estimate: float
    converged: bool


@dataclass
class BatchResult:
    values: np.ndarray
    terms_used: np.ndarray
    tail_estimate: np.ndarray
    converged: np.ndarray = field(repr=False)

    def __getitem__(self, i):
        return EvalResult(
            complex(self.values[i]),
            int(self.terms_used[i]),
            float(self.tail_estimate[i]),
            bool(self.converged[i]),
        )


# -- coefficients --------------------------------------------------------------


class _Coefficients:
    """Log-space coefficient evaluator for one spec (constants cached)."""

    def __init__(self, spec: SeriesSpec, extended: bool = False):
        self.spec = spec
        self.extended = extended
        rdt, cdt = (np.longdouble, np.clongdouble) if extended else (np.float64, np.complex128)
        self.rdt, self.cdt = rdt, cdt
        gam = np.array([f.gamma for f in spec.numerators], dtype=complex)
        if gam.size and is_pole_array(gam).any():
            bad = gam[is_pole_array(gam)][0]
            raise PoleError(f"numerator parameter {bad!r} is a pole of Gamma")
        self.num_base = gam.astype(cdt)
        self.num_lg0 = log_gamma_array(self.num_base, extended) if gam.size else self.num_base
        self.num_ab = np.array([[f.a, f.b] for f in spec.numerators], dtype=rdt).reshape(-1, 2)
        self.den_base = np.array([f.delta for f in spec.denominators], dtype=complex).astype(cdt)
        self.den_ab = np.array([[f.a, f.b] for f in spec.denominators], dtype=rdt).reshape(-1, 2)
        scale = cdt(spec.scale)
        self.log_scale = np.log(scale) if spec.scale != 0 else cdt(-np.inf)

    def log_terms(self, m, n):
        """log A(m, n) (complex) and a mask of exact zeros from 1/Gamma poles.

        ``m`` and ``n`` may be real-valued (used by the Horn-limit oracle).
        """
        m = np.asarray(m, dtype=self.rdt)
        n = np.asarray(n, dtype=self.rdt)
        out = np.full(np.broadcast(m, n).shape, self.log_scale, dtype=self.cdt)
        zero = np.zeros(out.shape, dtype=bool)
        for g, lg0, (a, b) in zip(self.num_base, self.num_lg0, self.num_ab):
            off = a * m + b * n
            top = g + off
            if is_pole_array(top).any():
                raise PoleError(f"(gamma)_offset is infinite for gamma={complex(g)!r}")
            out += np.where(off == 0.0, 0.0, log_gamma_array(top, self.extended) - lg0)
        for d, (a, b) in zip(self.den_base, self.den_ab):
            arg = d + a * m + b * n
            pole = is_pole_array(arg)
            zero |= pole
            out -= log_gamma_array(np.where(pole, 1.0, arg), self.extended)
        return out, zero

    def values(self, m, n, log_shift=0.0):
        lt, zero = self.log_terms(m, n)
        with np.errstate(over="ignore", under="ignore"):
            v = np.exp(lt + log_shift)
        v[zero] = 0.0
        return v


def term(spec: SeriesSpec, m, n=0) -> complex:
    """The general coefficient A(m, n) (without the powers of x and y)."""
    if m < 0 or n < 0:
        raise ValueError("indices must be >= 0")
    if spec.arity == 1 and n != 0:
        raise ValueError("univariate spec has no n index")
    return complex(_Coefficients(spec).values(np.array([m]), np.array([n]))[0])


# -- summation -----------------------------------------------------------------


class _Neumaier:
    """Elementwise compensated accumulator for complex arrays."""

    def __init__(self, size, compensated=True, dtype=np.float64):
        self.re = np.zeros(size, dtype=dtype)
        self.im = np.zeros(size, dtype=dtype)
        self.c_re = np.zeros(size, dtype=dtype)
        self.c_im = np.zeros(size, dtype=dtype)
        self.compensated = compensated

    @staticmethod
    def _add(s, c, v):
        t = s + v
        big = np.abs(s) >= np.abs(v)
        c += np.where(big, (s - t) + v, (v - t) + s)
        return t

    def add(self, v, idx=slice(None)):
        if self.compensated:
            re, cre = self.re[idx], self.c_re[idx]
            im, cim = self.im[idx], self.c_im[idx]
            self.re[idx] = self._add(re, cre, v.real)
            self.im[idx] = self._add(im, cim, v.imag)
            self.c_re[idx] = cre
            self.c_im[idx] = cim
        else:
            self.re[idx] += v.real
            self.im[idx] += v.imag

    def total(self, idx=slice(None)):
        return (self.re[idx] + self.c_re[idx]) + 1j * (self.im[idx] + self.c_im[idx])


def _rescale(v, rdt):
    """(v / s, log s) with s = max|v| when that exceeds 1, else s = 1.

    Only large arguments are shrunk; small ones need no help and may be subnormal.
    """
    mx = np.max(np.abs(v)) if v.size else 0.0
    if mx > 1:
        return v / mx, np.log(rdt(mx))
    return v, rdt(0.0)


def _finite_radius(spec):
    """True when every axis has Delta <= 0, so sustained geometric term growth means divergence."""
    d = sum(abs(f.a) for f in spec.denominators) - sum(f.a for f in spec.numerators)
    if spec.arity == 1:
        return d <= 1e-12
    dp = sum(abs(f.b) for f in spec.denominators) - sum(f.b for f in spec.numerators)
    return max(d, dp) <= 1e-12


def _diagonal_chunk(coef, spec, x, y, opts, stall=3):
    npts = x.size
    bivariate = spec.arity == 2
    rdt, cdt = opts.dtypes
    x, y = x.astype(cdt), y.astype(cdt)
    # rescale so every |u|, |v| <= 1; the scale goes into the coefficients
    u, ls_x = _rescale(x, rdt)
    v, ls_y = _rescale(y, rdt) if bivariate else (np.zeros_like(x), rdt(0.0))

    acc = _Neumaier(npts, opts.compensated, rdt)
    active = np.arange(npts)
    quiet = np.zeros(npts, dtype=int)
    tail = np.zeros(npts)
    used = np.zeros(npts, dtype=np.int64)
    conv = np.zeros(npts, dtype=bool)
    diverged = np.zeros(npts, dtype=bool)
    # sustained growth: the diagonal magnitude at k = 2 k0 exceeds the one at a
    # checkpoint k0 >= GROWTH_START by more than GROWTH_FACTOR
    watch_growth = _finite_radius(spec)
    checkpoint = np.full(npts, np.inf)
    # running peak of |partial|: an exact cancellation to 0 must not look like blowup
    peak = np.zeros(npts, dtype=rdt)

    # powers u^m v^(k-m) for the current diagonal, one row per active point
    pw = np.ones((npts, 1), dtype=cdt)
    u_pow = np.ones(npts, dtype=cdt)
    kmax = opts.max_terms_per_index
    for k in range(kmax + 1):
        if bivariate:
            m = np.arange(k + 1, dtype=rdt)
            n = k - m
            if k > 0:
                u_pow = u_pow * u[active]
                pw = np.concatenate([pw * v[active, None], u_pow[:, None]], axis=1)
            c = coef.values(m, n, m * ls_x + n * ls_y)
            terms = pw * c[None, :]
            diag = terms.sum(axis=1)
            mag = np.abs(terms).sum(axis=1)
        else:
            if k > 0:
                u_pow = u_pow * u[active]
            c = coef.values(np.array([k], dtype=rdt), np.zeros(1, dtype=rdt), k * ls_x)[0]
            diag = u_pow * c
            mag = np.abs(diag)
        acc.add(diag, active)
        used[active] += k + 1 if bivariate else 1
        partial = np.abs(acc.total(active))
        peak[active] = np.maximum(peak[active], partial)

        with np.errstate(invalid="ignore"):
            bad = ~np.isfinite(mag) | (mag > _BLOWUP_RATIO * np.maximum(peak[active], ABS_FLOOR))
        if watch_growth and k >= GROWTH_START and (k & (k - 1)) == 0:
            with np.errstate(invalid="ignore", over="ignore"):
                bad |= mag > GROWTH_FACTOR * checkpoint[active]
            checkpoint[active] = mag
        small = (mag <= opts.rel_tol * partial) | ((partial < ABS_FLOOR) & (mag < ABS_FLOOR))
        quiet[active] = np.where(small, quiet[active] + 1, 0)
        tail[active] = np.where(small, mag, tail[active])
        if k == 0:
            tail[active] = mag
        done = quiet[active] >= stall
        conv[active[done]] = True
        diverged[active[bad]] = True
        keep = ~(done | bad)
        if not keep.all():
            active = active[keep]
            pw = pw[keep]
            u_pow = u_pow[keep]
            if not active.size:
                break
    tail[~conv] = np.inf
    return acc.total().astype(complex), used, tail, conv, diverged


def _rowmajor_chunk(coef, spec, x, y, opts, stall=3):
    """Square truncations summed row by row, doubled until the edge strip is negligible."""
    npts = x.size
    bivariate = spec.arity == 2
    rdt, cdt = opts.dtypes
    x, y = x.astype(cdt), y.astype(cdt)
    u, ls_x = _rescale(x, rdt)
    v, ls_y = _rescale(y, rdt) if bivariate else (np.zeros_like(x), rdt(0.0))
    kmax = opts.max_terms_per_index
    size = 16
    while True:
        size = min(size, kmax + 1)
        idx = np.arange(size, dtype=rdt)
        if bivariate:
            mm, nn = np.meshgrid(idx, idx, indexing="ij")
            vpow = v[:, None] ** idx[None, :]
        else:
            mm, nn = idx[:, None], np.zeros((size, 1), dtype=rdt)
            vpow = np.ones((npts, 1), dtype=cdt)
        c = coef.values(mm, nn, mm * ls_x + nn * ls_y)
        upow = u[:, None] ** idx[None, :]
        lo = max(size - stall, 0)
        acc = _Neumaier(npts, opts.compensated, rdt)
        edge = np.zeros(npts, dtype=rdt)
        with np.errstate(over="ignore", invalid="ignore"):
            for r in range(size):
                row = c[r][None, :] * vpow * upow[:, r, None]
                acc.add(row.sum(axis=1))
                absrow = np.abs(row)
                edge += absrow.sum(axis=1) if r >= lo else absrow[:, lo:].sum(axis=1)
        total = acc.total()
        partial = np.abs(total)
        conv = (edge <= opts.rel_tol * partial) | ((partial < ABS_FLOOR) & (edge < ABS_FLOOR))
        diverged = ~np.isfinite(edge) | ~np.isfinite(partial)
        if conv.all() or diverged.any() or size > kmax:
            used = np.full(npts, c.size, dtype=np.int64)
            tail = np.where(conv, edge, np.inf)
            return total.astype(complex), used, tail, conv, diverged
        size *= 2


def evaluate_many(spec: SeriesSpec, x, y=None, opts: EvalOptions | None = None) -> BatchResult:
    """Evaluate ``spec`` at many points sharing one set of coefficients."""
    opts = opts or EvalOptions()
    x = np.atleast_1d(np.asarray(x, dtype=complex)).ravel()
    if y is None:
        y = np.zeros_like(x)
    y = np.atleast_1d(np.asarray(y, dtype=complex)).ravel()
    x, y = np.broadcast_arrays(x, y)
    if not (np.isfinite(x).all() and np.isfinite(y).all()):
        raise ValueError("non-finite evaluation point")
    coef = _Coefficients(spec, opts.precision == "extended")
    runner = _diagonal_chunk if opts.summation == "diagonal" else _rowmajor_chunk

    vals = np.empty(x.size, dtype=complex)
    used = np.empty(x.size, dtype=np.int64)
    tail = np.empty(x.size)
    conv = np.empty(x.size, dtype=bool)
    div = np.empty(x.size, dtype=bool)
    for s in range(0, x.size, _CHUNK):
        sl = slice(s, s + _CHUNK)
        # divergent points overflow on purpose; they are flagged, not warned about
        with np.errstate(over="ignore", invalid="ignore"):
            out = runner(coef, spec, x[sl].copy(), y[sl].copy(), opts)
        vals[sl], used[sl], tail[sl], conv[sl], div[sl] = out
    if opts.strict and not conv.all():
        i = int(np.flatnonzero(~conv)[0])
        why = "terms grow without bound" if div[i] else "max_terms_per_index reached"
        raise NonConvergence(
            f"series did not converge at x={complex(x[i])}, y={complex(y[i])}: {why}",
            partial=complex(vals[i]),
        )
    return BatchResult(vals, used, tail, conv)


def evaluate(spec: SeriesSpec, x, y=0.0, opts: EvalOptions | None = None) -> EvalResult:
    """Evaluate a single point; see :func:`evaluate_many`."""
    return evaluate_many(spec, [x], [y], opts)[0]


def powers_table(spec: SeriesSpec, size: int) -> np.ndarray:
    """Coefficient grid A(m, n) for 0 <= m, n < size (n-axis of length 1 if univariate)."""
    idx = np.arange(size, dtype=float)
    coef = _Coefficients(spec)
    if spec.arity == 1:
        return coef.values(idx, np.zeros(size))[:, None]
    mm, nn = np.meshgrid(idx, idx, indexing="ij")
    return coef.values(mm, nn)


def log_term(spec: SeriesSpec, m, n=0.0):
    """log A(m, n) at real-valued indices (for asymptotic ratio checks)."""
    lt, zero = _Coefficients(spec).log_terms(np.asarray(m, float), np.asarray(n, float))
    return np.where(zero, -np.inf, lt)

