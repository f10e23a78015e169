"""Acceptance criteria 1-9, each at its stated tolerance.

Every test records a one-line verdict in ``RESULTS``; conftest prints them
in the terminal summary.  Run alone with ``python -m tests.test_acceptance``.
"""
import math
import subprocess
import sys
from concurrent.futures import ThreadPoolExecutor

import mpmath
import numpy as np
import pytest

from ml2.convergence import classify, radius_functionals, random_case2_d1
from ml2.errors import NonConvergence
from ml2.gamma import log_gamma_array
from ml2.identities import (
    EULER_IDS,
    IdentityCase,
    verify,
    verify_random,
)
from ml2.pde import coefficient_recurrence_check, operator_residual, random_params
from ml2.presets import preset
from ml2.series import evaluate, evaluate_many

from .conftest import load_catalog
from .oracles import appell_f1, horn_ratio, hyp2f1

RESULTS = {}


def record(n, ok, detail):
    RESULTS[n] = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    assert ok, RESULTS[n]


# -- 1: Gamma identities -------------------------------------------------------


def _gamma_points(rng, n, near):
    """n points with |z| <= 50 and distance > 0.1 from every integer in ``near``."""
    out = []
    while len(out) < n:
        z = 50 * np.sqrt(rng.random(4 * n)) * np.exp(2j * np.pi * rng.random(4 * n))
        k = np.round(z.real)
        ok = (np.abs(z - k) > 0.1) | ~near(k)
        out.extend(z[ok])
    return np.array(out[:n])


def test_criterion_1_gamma():
    rng = np.random.default_rng(1)
    # recurrence: z and z + 1 both away from the poles 0, -1, -2, ...
    z = _gamma_points(rng, 10_000, lambda k: k <= 0)
    rec = np.abs(np.exp(log_gamma_array(z + 1) - log_gamma_array(z)) / z - 1)
    # reflection: z and 1 - z away from poles means away from every integer
    w = _gamma_points(rng, 10_000, lambda k: np.ones(k.shape, bool))
    sin = np.array([complex(mpmath.sinpi(mpmath.mpc(c.real, c.imag))) for c in w])
    ref = np.abs(np.exp(log_gamma_array(w) + log_gamma_array(1 - w)) * sin / np.pi - 1)
    worst = max(rec.max(), ref.max())
    record(1, worst <= 1e-11, f"max rel: recurrence {rec.max():.2e}, reflection {ref.max():.2e} (tol 1e-11)")


# -- 2: seed values ---------------------------------------------------------------


def _random_d1(rng):
    p = {f"{g}{i}": round(float(rng.uniform(0.3, 2.0)), 3) for g in ("alpha", "beta") for i in range(1, 5)}
    p.update({f"gamma{i}": round(float(rng.uniform(0.1, 3.0)), 3) for i in (1, 2, 3)})
    for i in (1, 2, 3):
        # negative deltas allowed, kept off the zeros of 1/Gamma
        while True:
            d = round(float(rng.uniform(-2.9, 5.0)), 3)
            if d > 0 or abs(d - round(d)) > 0.05:
                break
        p[f"delta{i}"] = d
    return p


def test_criterion_2_seed_values():
    rng = np.random.default_rng(2)
    worst_d1 = 0.0
    with mpmath.workdps(30):
        for _ in range(100):
            p = _random_d1(rng)
            got = evaluate(preset("D1", p), 0.0, 0.0).value
            want = complex(mpmath.rgamma(p["delta1"]) * mpmath.rgamma(p["delta2"]) * mpmath.rgamma(p["delta3"]))
            worst_d1 = max(worst_d1, abs(got - want) / abs(want))
    z = 5 * np.sqrt(rng.random(4000)) * np.exp(2j * np.pi * rng.random(4000))
    z = np.concatenate([z, 5 * np.exp(2j * np.pi * np.arange(64) / 64), [0.0, -5.0, 5.0]])
    v = evaluate_many(preset("ML2", alpha=1.0, beta=1.0), z).values
    want = np.array([complex(mpmath.exp(mpmath.mpc(c.real, c.imag))) for c in z])
    worst_e = float(np.max(np.abs(v - want) / np.abs(want)))
    ok = worst_d1 <= 1e-13 and worst_e <= 1e-12
    record(2, ok, f"D1(0,0) max rel {worst_d1:.2e} (tol 1e-13); E11 = exp max rel {worst_e:.2e} (tol 1e-12)")


# -- 3: reduction to F1 and 2F1 ------------------------------------------------------


def test_criterion_3_reduction():
    p = load_catalog("d1_allones.json")["params"]
    s = preset("D1", p)
    g = math.gamma(p["delta1"])
    grid = np.linspace(-0.5, 0.5, 5)
    xs, ys = (a.ravel() for a in np.meshgrid(grid, grid, indexing="ij"))
    vals = evaluate_many(s, xs, ys).values.real
    f1 = np.array([appell_f1(p["gamma1"], p["gamma2"], p["gamma3"], p["delta1"], x, y) / g
                   for x, y in zip(xs, ys)])
    e_f1 = float(np.max(np.abs(vals - f1) / np.abs(f1)))
    sl = evaluate_many(s, grid, np.zeros_like(grid)).values.real
    f21 = np.array([hyp2f1(p["gamma1"], p["gamma2"], p["delta1"], x) / g for x in grid])
    e_21 = float(np.max(np.abs(sl - f21) / np.abs(f21)))
    ok = e_f1 <= 1e-10 and e_21 <= 1e-10
    record(3, ok, f"F1 5x5 max rel {e_f1:.2e}; 2F1 slice max rel {e_21:.2e} (tol 1e-10)")


# -- 4: convergence classifier --------------------------------------------------------


def _d1(**exps):
    p = dict(gamma1=0.5, gamma2=0.7, gamma3=0.9, delta1=1.8, delta2=1.0, delta3=1.0)
    p.update({k: 1.0 for k in ("alpha1", "alpha2", "alpha3", "alpha4", "beta1", "beta2", "beta3", "beta4")})
    p.update(exps)
    return preset("D1", p)


def test_criterion_4_convergence():
    patterns = [(dict(alpha3=2, beta3=2), 1), (dict(), 2), (dict(alpha1=2, beta1=2), 3),
                (dict(beta3=2), 4), (dict(alpha3=2), 5)]
    cases_ok = all(classify(_d1(**e)).case == c for e, c in patterns)

    rep = classify(_d1())
    exact = rep.rho == 1.0 and rep.rho_prime == 1.0

    rng = np.random.default_rng(4)
    specs = [_d1(alpha3=2), _d1(alpha3=1.5, beta4=0.5), preset("D1", load_catalog("sample.json")["params"])]
    specs += [preset("D1", random_case2_d1(rng)) for _ in range(3)]
    horn = 0.0
    for s in specs:
        for mu in (0.2, 0.5, 0.8):
            E = radius_functionals(s, mu, 1 - mu)
            O = horn_ratio(s.to_dict(), mu, 1 - mu)
            horn = max(horn, *(abs(a - b) / b for a, b in zip(E, O)))

    rng = np.random.default_rng(11)
    empirical = 0
    for _ in range(5):
        s = preset("D1", random_case2_d1(rng))
        r = classify(s)
        inside = evaluate(s, 0.9 * r.rho, 0.9 * r.rho_prime).converged
        try:
            evaluate(s, 1.5 * r.rho, 1.5 * r.rho_prime)
            outside = False
        except NonConvergence:
            outside = True
        empirical += r.case == 2 and inside and outside

    ok = cases_ok and exact and horn <= 1e-6 and empirical == 5
    record(4, ok, f"cases {'ok' if cases_ok else 'WRONG'}; all-ones rho=({rep.rho:g}, {rep.rho_prime:g}); "
                  f"Horn oracle max rel {horn:.2e} (tol 1e-6); 0.9x/1.5x confirmed {empirical}/5")


# -- 5-7: integral identities ------------------------------------------------------------


def _summ(reports):
    bad = [r.id for r in reports if not r.passed]
    worst = max(r.max_rel_residual for r in reports)
    return bad, worst


def test_criterion_5_euler():
    reports = []
    collapse = 0.0
    for iid in EULER_IDS:
        reps = verify_random(iid, seed=5, n_bindings=5)
        reports += reps
        for r in reps:
            z = verify(IdentityCase(iid, r.bindings, [(0.0, 0.0)]))
            collapse = max(collapse, z.samples[0].rel_residual)
    bad, worst = _summ(reports)
    samples = sum(len(r.samples) for r in reports)
    ok = not bad and samples == 10 * 5 * 9 and collapse <= 1e-12
    record(5, ok, f"{len(reports)} bindings, {samples} samples, max rel {worst:.2e} (tol 1e-6); "
                  f"x=y=0 collapse max {collapse:.2e} (tol 1e-12); failing {sorted(set(bad)) or 'none'}")


def test_criterion_6_lemmas():
    l1 = verify_random("lemma1", seed=6, n_bindings=3)
    l2 = verify_random("lemma2", seed=6, n_bindings=3)
    bad, worst = _summ(l1 + l2)
    order = max(r.quad_order for r in l2)
    ok = not bad and order <= 256
    record(6, ok, f"6 bindings, max rel {worst:.2e} (tol 1e-6); lemma2 quadrature order {order} (cap 256)")


def test_criterion_7_laplace():
    vals = (1.0, 2.0, 5.0)
    reports = []
    for iid in ("laplace22", "laplace23"):
        for p in vals:
            reports += verify_random(iid, seed=7, n_bindings=1, p=p)
    for iid in ("laplace24", "laplace25"):
        for p in vals:
            for q in vals:
                reports += verify_random(iid, seed=7, n_bindings=1, p=p, q=q)
    bad, worst = _summ(reports)
    three = all(len(r.samples) == 3 for r in reports)
    ok = not bad and three and len(reports) == 24
    record(7, ok, f"{len(reports)} (identity, p, q) cases x 3 arguments, max rel {worst:.2e} (tol 1e-6); "
                  f"failing {sorted(set(bad)) or 'none'}")


# -- 8: PDE system ------------------------------------------------------------------------


def test_criterion_8_pde():
    rng = np.random.default_rng(8)
    params = [random_params(rng) for _ in range(5)]
    rec = 0.0
    rec_ok = True
    for p in params:
        for eq in ("x", "y"):
            r = coefficient_recurrence_check(p, 50, 50, eq)
            rec = max(rec, r.max_rel_error)
            rec_ok &= r.passed
    ratio = 0.0
    for p in params:
        for eq in ("x", "y"):
            for pt in ((0.3, -0.2), (-0.25, 0.35), (0.2 + 0.1j, 0.15 - 0.2j)):
                for T in (10, 20, 30):
                    r = operator_residual(p, *pt, T, eq)
                    ratio = max(ratio, abs(r.residual) / r.bound)
    ok = rec_ok and rec <= 1e-12 and ratio <= 10
    record(8, ok, f"recurrence max rel {rec:.2e} over (50, 50) (tol 1e-12); "
                  f"operator residual <= {ratio:.2f} x tail bound (limit 10)")


# -- 9: determinism -------------------------------------------------------------------------


def _verify_all():
    cmd = [sys.executable, "-m", "ml2.cli", "verify", "--all", "--seed", "7"]
    return subprocess.run(cmd, capture_output=True, timeout=600)


def test_criterion_9_determinism():
    with ThreadPoolExecutor(2) as pool:
        a, b = pool.map(lambda _: _verify_all(), range(2))
    same = a.stdout == b.stdout and a.returncode == b.returncode
    ok = same and a.returncode == 0 and len(a.stdout) > 0
    record(9, ok, f"two runs, {len(a.stdout)} bytes, identical={same}, exit codes {a.returncode}/{b.returncode}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
