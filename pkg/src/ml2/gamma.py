"""Complex log-Gamma, reciprocal Gamma and generalized Pochhammer symbols.

Everything here works on numpy arrays internally (``*_array`` functions) and
exposes scalar wrappers taking/returning Python ``complex``.

The log-Gamma is Stirling's series evaluated at ``z + N`` with the upward
recurrence ``log G(z) = log G(z+N) - sum log(z+k)``; summing principal logs
keeps the result on the principal branch off the real axis.  On the negative
real axis the imaginary part is ``pi`` times the number of negative factors,
so ``exp`` of it carries the correct sign of Gamma.

``log_gamma_array(z, extended=True)`` repeats the computation in numpy's
``longdouble`` (64-bit mantissa on x86-64; plain double elsewhere) for the
series engine, where cancellation can amplify coefficient errors by 1e4.
"""
import math
from fractions import Fraction

import numpy as np

from .errors import PoleError

POLE_TOL = 1e-12

_STIRLING_MIN = 20.0
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
# B_{2k} / (2k (2k-1)), k = 1..10
_STIRLING_COEF = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
)
_STIRLING_FRAC = (
    Fraction(1, 12), Fraction(-1, 360), Fraction(1, 1260), Fraction(-1, 1680), Fraction(1, 1188),
    Fraction(-691, 360360), Fraction(1, 156), Fraction(-3617, 122400), Fraction(43867, 244188),
    Fraction(-174611, 125400),
)
_LD = np.longdouble
_STIRLING_COEF_LD = tuple(_LD(f.numerator) / _LD(f.denominator) for f in _STIRLING_FRAC)
_HALF_LOG_2PI_LD = _LD("0.91893853320467274178032973640561763986")
_EULER_GAMMA = 0.57721566490153286061
_TAYLOR_RADIUS = 0.5
_TAYLOR_TERMS = 64


def _zeta_values(kmax):
    """zeta(k) for k = 2..kmax by Euler-Maclaurin with 100 explicit terms."""
    n0 = 100
    out = {}
    for k in range(2, kmax + 1):
        s = math.fsum(n ** -float(k) for n in range(1, n0))
        # tail sum_{n >= n0} n^-k
        tail = n0 ** (1.0 - k) / (k - 1) + 0.5 * n0 ** -float(k)
        tail += k * n0 ** (-k - 1.0) / 12.0
        tail -= k * (k + 1) * (k + 2) * n0 ** (-k - 3.0) / 720.0
        tail += k * (k + 1) * (k + 2) * (k + 3) * (k + 4) * n0 ** (-k - 5.0) / 30240.0
        out[k] = s + tail
    return out


# Taylor coefficients of log Gamma(1 + w) = -gamma*w + sum_k (-1)^k zeta(k)/k w^k
_ZETA = _zeta_values(_TAYLOR_TERMS)
_TAYLOR1 = np.array(
    [0.0, -_EULER_GAMMA] + [(-1) ** k * _ZETA[k] / k for k in range(2, _TAYLOR_TERMS + 1)]
)


def is_pole_array(z):
    """Mask of entries within POLE_TOL of a non-positive integer."""
    z = np.asarray(z, dtype=complex)
    re = z.real
    near = np.abs(z - np.round(re)) <= POLE_TOL
    return near & (np.round(re) <= 0)


def _stirling(z, extended=False):
    coef, half_log_2pi = (_STIRLING_COEF_LD, _HALF_LOG_2PI_LD) if extended else (_STIRLING_COEF, _HALF_LOG_2PI)
    zinv = 1.0 / z
    zinv2 = zinv * zinv
    corr = np.zeros_like(z)
    for c in reversed(coef):
        corr = corr * zinv2 + c
    return (z - 0.5) * np.log(z) - z + half_log_2pi + corr * zinv


def _shifted_stirling(zr, extended=False):
    """Stirling at z + N, N bringing Re z up to _STIRLING_MIN, minus sum log(z + k)."""
    shift = np.maximum(np.ceil(_STIRLING_MIN - zr.real.astype(float)), 0.0).astype(int)
    nmax = int(shift.max()) if shift.size else 0
    acc = np.zeros_like(zr)
    for k in range(nmax):
        active = shift > k
        acc[active] += np.log(zr[active] + k)
    return _stirling(zr + shift, extended) - acc


def _taylor_near_one(w):
    # |w| < 0.5, so 64 terms reach 0.5**64/64 ~ 1e-21
    acc = np.zeros_like(w)
    for c in _TAYLOR1[:0:-1]:
        acc = (acc + c) * w
    return acc


def log_gamma_array(z, extended=False):
    """Principal log-Gamma of a complex array; poles come back as nan.

    ``extended`` returns complex longdouble and skips the double-precision
    Taylor tables, using the shifted Stirling series everywhere.
    """
    if extended:
        z = np.asarray(z, dtype=np.clongdouble)
        out = np.full(z.shape, np.nan, dtype=np.clongdouble)
        ok = ~is_pole_array(z)
        if ok.any():
            out[ok] = _shifted_stirling(z[ok], True)
        return out
    z = np.asarray(z, dtype=complex)
    out = np.empty_like(z)
    poles = is_pole_array(z)

    near1 = np.abs(z - 1.0) < _TAYLOR_RADIUS
    near2 = np.abs(z - 2.0) < _TAYLOR_RADIUS
    rest = ~(poles | near1 | near2)

    if near1.any():
        out[near1] = _taylor_near_one(z[near1] - 1.0)
    if near2.any():
        w = z[near2] - 2.0
        out[near2] = _taylor_near_one(w) + np.log1p(w)
    if rest.any():
        out[rest] = _shifted_stirling(z[rest])
    out[poles] = np.nan
    return out


def rgamma_array(z):
    """1/Gamma(z) elementwise, exactly zero at the poles of Gamma."""
    z = np.asarray(z, dtype=complex)
    poles = is_pole_array(z)
    lg = log_gamma_array(np.where(poles, 1.0, z))
    out = np.exp(-lg)
    out[poles] = 0.0
    return out


def _check_finite(z):
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite argument {z!r}")
    return z


def log_gamma(z):
    """Principal-branch log Gamma(z); raises PoleError at non-positive integers."""
    z = _check_finite(z)
    if is_pole_array(z):
        raise PoleError(f"Gamma has a pole at {z!r}")
    return complex(log_gamma_array(np.array([z]))[0])


def rgamma(z):
    """Reciprocal Gamma function (entire)."""
    z = _check_finite(z)
    return complex(rgamma_array(np.array([z]))[0])


def gamma(z):
    return complex(np.exp(log_gamma(z)))


def log_pochhammer_array(base, offset):
    """log of (base)_offset = log Gamma(base+offset) - log Gamma(base).

    ``base`` must be pole-free; entries where ``base + offset`` hits a pole
    come back as +inf (the symbol is infinite there).
    """
    base = np.asarray(base, dtype=complex)
    offset = np.asarray(offset, dtype=float)
    top = base + offset
    top_pole = is_pole_array(top)
    out = log_gamma_array(np.where(top_pole, 1.0, top)) - log_gamma_array(base)
    out = np.where(offset == 0.0, 0.0, out)
    return np.where(top_pole, np.inf, out)


def pochhammer(base, offset):
    """Generalized rising factorial Gamma(base+offset)/Gamma(base).

    ``offset`` is a real number >= 0.  Small integer offsets use the plain
    product, everything else goes through log space.
    """
    base = _check_finite(base)
    offset = float(offset)
    if not math.isfinite(offset) or offset < 0:
        raise ValueError(f"offset must be finite and >= 0, got {offset}")
    if is_pole_array(base):
        raise PoleError(f"Pochhammer base {base!r} is a pole of Gamma")
    if offset == 0.0:
        return 1.0 + 0.0j
    if offset.is_integer() and offset <= 64:
        p = 1.0 + 0.0j
        for k in range(int(offset)):
            p *= base + k
        return p
    if is_pole_array(base + offset):
        raise PoleError(f"(base)_offset is infinite: base+offset={base + offset!r} is a pole")
    return complex(np.exp(log_pochhammer_array(np.array([base]), np.array([offset]))[0]))
