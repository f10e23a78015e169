"""Independent reference implementations used by the tests.

Nothing here imports the package: every value is built from plain float
recurrences or mpmath.
"""
import math

import mpmath


def appell_f1(a, b1, b2, c, x, y, cutoff=1e-15, max_index=4000):
    """Brute-force F1 double sum; rows are added until a row's largest term drops below ``cutoff``."""
    total = 0.0
    row_lead = 1.0  # term (m, 0)
    for m in range(max_index):
        if m:
            row_lead *= (a + m - 1) * (b1 + m - 1) / ((c + m - 1) * m) * x
        t = row_lead
        row_sum, row_max = 0.0, 0.0
        for n in range(max_index):
            if n:
                t *= (a + m + n - 1) * (b2 + n - 1) / ((c + m + n - 1) * n) * y
            row_sum += t
            row_max = max(row_max, abs(t))
            if abs(t) < cutoff * max(1.0, abs(total + row_sum)) and n > 2:
                break
        total += row_sum
        if row_max < cutoff * max(1.0, abs(total)) and m > 2:
            break
    return total


def hyp2f1(a, b, c, x, cutoff=1e-15, max_index=10000):
    total, t = 0.0, 1.0
    for k in range(max_index):
        if k:
            t *= (a + k - 1) * (b + k - 1) / ((c + k - 1) * k) * x
        total += t
        if abs(t) < cutoff * abs(total) and k > 2:
            break
    return total


def d1_term(p, m, n):
    """A(m, n) of D1 at 30 digits."""
    rf, rg = mpmath.rf, mpmath.rgamma
    return (
        rf(p["gamma1"], p["alpha1"] * m + p["beta1"] * n)
        * rf(p["gamma2"], p["alpha2"] * m)
        * rf(p["gamma3"], p["beta2"] * n)
        * rg(p["delta1"] + p["alpha3"] * m + p["beta3"] * n)
        * rg(p["delta2"] + p["alpha4"] * m)
        * rg(p["delta3"] + p["beta4"] * n)
    )


def d1_brute(p, x, y, size=80):
    with mpmath.workdps(30):
        return float(mpmath.fsum(d1_term(p, m, n) * mpmath.mpf(x) ** m * mpmath.mpf(y) ** n
                                 for m in range(size) for n in range(size)))


def lg2_brute(beta, a1, a2, x, y, kmax=60):
    """sum_k sum_{l1+l2=k} k!/(l1! l2!) x^l1 y^l2 / Gamma(beta + a1 l1 + a2 l2)."""
    s = 0.0
    for k in range(kmax):
        for l1 in range(k + 1):
            l2 = k - l1
            s += math.comb(k, l1) * x**l1 * y**l2 / math.gamma(beta + a1 * l1 + a2 * l2)
    return s


def horn_ratio(spec_dict, mu, nu, t=1e6, richardson=True):
    """(E, E') from mpmath loggamma term ratios at (mu t, nu t).

    ``spec_dict`` is SeriesSpec.to_dict() with real offsets; numerators add
    log Gamma(gamma + a m + b n) and denominators subtract log Gamma(delta + a m + b n).
    """
    with mpmath.workdps(40):
        def log_a(m, n):
            s = mpmath.mpf(0)
            for f in spec_dict["numerators"]:
                s += mpmath.loggamma(f["gamma"][0] + f["a"] * m + f["b"] * n)
            for f in spec_dict["denominators"]:
                s -= mpmath.loggamma(f["delta"][0] + f["a"] * m + f["b"] * n)
            return s

        def logs(tt):
            tt = mpmath.mpf(tt)
            m, n = mu * tt, nu * tt
            base = log_a(m, n)
            d = sum(f["a"] for f in spec_dict["denominators"]) - sum(f["a"] for f in spec_dict["numerators"])
            dp = sum(f["b"] for f in spec_dict["denominators"]) - sum(f["b"] for f in spec_dict["numerators"])
            return (-d * mpmath.log(tt) - (log_a(m + 1, n) - base),
                    -dp * mpmath.log(tt) - (log_a(m, n + 1) - base))

        le, lep = logs(t)
        if richardson:
            le2, lep2 = logs(2 * t)
            le, lep = 2 * le2 - le, 2 * lep2 - lep
        return float(mpmath.exp(le)), float(mpmath.exp(lep))
