import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ml2.convergence import (
    CURVE_POINTS,
    classify,
    d1_functionals,
    horn_exponents,
    horn_limit_oracle,
    radius_functionals,
    random_case2_d1,
    univariate_radius,
)
from ml2.errors import DomainError, NonConvergence
from ml2.presets import preset
from ml2.series import DenFactor, NumFactor, SeriesSpec, evaluate

from .oracles import horn_ratio

BASE = dict(gamma1=0.5, gamma2=0.7, gamma3=0.9, delta1=1.8, delta2=1.0, delta3=1.0)


def d1(**exps):
    p = {k: 1.0 for k in ("alpha1", "alpha2", "alpha3", "alpha4", "beta1", "beta2", "beta3", "beta4")}
    p.update(BASE)
    p.update(exps)
    return p


def spec(**exps):
    return preset("D1", d1(**exps))


def test_horn_exponents_examples():
    assert horn_exponents(spec()) == (0.0, 0.0)
    assert horn_exponents(spec(alpha3=2, beta3=2)) == (1.0, 1.0)
    assert horn_exponents(spec(alpha1=2, beta1=2)) == (-1.0, -1.0)


@pytest.mark.parametrize("exps,case", [
    (dict(alpha3=2, beta3=2), 1),
    (dict(), 2),
    (dict(alpha1=2, beta1=2), 3),
    (dict(beta3=2), 4),
    (dict(alpha3=2), 5),
])
def test_sign_patterns(exps, case):
    rep = classify(spec(**exps))
    assert rep.case == case
    assert bool(rep.curve) == (case == 2)
    if case == 1:
        assert rep.rho == rep.rho_prime == math.inf
    if case == 3:
        assert rep.rho == rep.rho_prime == 0.0
    if case == 4:
        assert math.isfinite(rep.rho) and rep.rho_prime == math.inf
    if case == 5:
        assert rep.rho == math.inf and math.isfinite(rep.rho_prime)


@pytest.mark.parametrize("exps,label", [
    (dict(alpha3=2, beta1=2), "divergent-y"),
    (dict(alpha1=2, beta3=2), "divergent-x"),
    (dict(beta1=2), "divergent-y"),
    (dict(alpha1=2), "divergent-x"),
])
def test_mixed_signs_labelled(exps, label):
    rep = classify(spec(**exps))
    assert rep.case is None and rep.label == label
    assert "no region is claimed" in rep.note
    assert rep.curve == []


def test_allones_exact():
    rep = classify(spec())
    assert rep.rho == 1.0 and rep.rho_prime == 1.0
    assert rep.G == 1.0 and rep.G_prime == 1.0
    assert len(rep.curve) == CURVE_POINTS
    assert all(r == 1.0 and s == 1.0 for _, _, r, s in rep.curve)


def test_allones_edge_limit():
    assert radius_functionals(spec(), 1.0, 0.0)[0] == 1.0


def test_asymmetric_functionals():
    s = spec(alpha3=2)
    E, Ep = radius_functionals(s, 0.5, 0.5)
    assert E == pytest.approx(2.25, rel=1e-14) and Ep == pytest.approx(1.5, rel=1e-14)
    oe, oep = horn_ratio(s.to_dict(), 0.5, 0.5)
    assert abs(E - oe) / oe < 1e-6 and abs(Ep - oep) / oep < 1e-6


def test_raw_ratio_bias_is_order_one_over_t():
    # without extrapolation the t = 1e6 ratio is off by a few 1e-6 here
    s = spec(alpha3=2)
    E, _ = radius_functionals(s, 0.5, 0.5)
    raw, _ = horn_limit_oracle(s, 0.5, 0.5, richardson=False)
    ext, _ = horn_limit_oracle(s, 0.5, 0.5)
    assert 1e-7 < abs(raw - E) / E < 1e-4
    assert abs(ext - E) / E < 1e-6


exp_values = st.sampled_from([0.5, 0.75, 1.0, 1.25, 1.5, 2.0])


@given(st.fixed_dictionaries({k: exp_values for k in
                              ("alpha1", "alpha2", "alpha3", "alpha4", "beta1", "beta2", "beta3", "beta4")}),
       st.floats(0.05, 0.95))
def test_closed_form_matches_generic(exps, mu):
    p = d1(**exps)
    got = radius_functionals(preset("D1", p), mu, 1 - mu)
    want = d1_functionals(p, mu, 1 - mu)
    assert got[0] == pytest.approx(want[0], rel=1e-12)
    assert got[1] == pytest.approx(want[1], rel=1e-12)


@given(st.fixed_dictionaries({k: exp_values for k in
                              ("alpha1", "alpha2", "alpha3", "alpha4", "beta1", "beta2", "beta3", "beta4")}),
       st.floats(0.05, 0.95), st.sampled_from([2.0, 10.0]))
def test_homogeneity(exps, mu, t):
    s = preset("D1", d1(**exps))
    d, dp = horn_exponents(s)
    E, Ep = radius_functionals(s, mu, 1 - mu)
    Et, Ept = radius_functionals(s, t * mu, t * (1 - mu))
    assert Et == pytest.approx(t**d * E, rel=1e-12)
    assert Ept == pytest.approx(t**dp * Ep, rel=1e-12)


@pytest.mark.parametrize("mu", [0.1, 0.37, 0.8])
def test_horn_oracle_random_specs(mu):
    rng = np.random.default_rng(5)
    for _ in range(3):
        p = d1(**{k: float(rng.choice([0.5, 1.0, 1.5, 2.0])) for k in
                  ("alpha1", "alpha2", "alpha3", "alpha4", "beta1", "beta2", "beta3", "beta4")})
        s = preset("D1", p)
        E, Ep = radius_functionals(s, mu, 1 - mu)
        oe, oep = horn_ratio(s.to_dict(), mu, 1 - mu)
        assert abs(E - oe) / oe < 1e-6
        assert abs(Ep - oep) / oep < 1e-6


def test_domain_errors():
    with pytest.raises(DomainError):
        radius_functionals(spec(), -0.1, 0.5)
    with pytest.raises(DomainError):
        radius_functionals(spec(), 0.0, 0.0)
    with pytest.raises(ValueError):
        horn_exponents(preset("ML2", alpha=1.0, beta=1.0))


def test_univariate_radius():
    assert univariate_radius(preset("ML2", alpha=1.0, beta=1.0)) == math.inf
    geo = SeriesSpec([NumFactor(1.0, 1.0, 0.0)], [DenFactor(1.0, 1.0, 0.0)], arity=1)
    assert univariate_radius(geo) == 1.0
    f21 = SeriesSpec([NumFactor(0.5, 1.0, 0.0), NumFactor(1.5, 1.0, 0.0)],
                     [DenFactor(2.0, 1.0, 0.0), DenFactor(1.0, 1.0, 0.0)], arity=1)
    assert univariate_radius(f21) == 1.0
    no_factorial = SeriesSpec([NumFactor(0.5, 1.0, 0.0), NumFactor(1.5, 1.0, 0.0)],
                              [DenFactor(2.0, 1.0, 0.0)], arity=1)
    assert univariate_radius(no_factorial) == 0.0


def test_curve_csv():
    text = classify(spec()).curve_csv().splitlines()
    assert text[0] == "mu,nu,r,s"
    assert len(text) == CURVE_POINTS + 1


def test_contains():
    rep = classify(spec())
    assert rep.contains(0.5, -0.5)
    assert not rep.contains(1.0, 0.0)


def test_empirical_case2():
    rng = np.random.default_rng(11)
    for _ in range(5):
        p = random_case2_d1(rng)
        s = preset("D1", p)
        rep = classify(s)
        assert rep.case == 2 and rep.rho > 0 and rep.rho_prime > 0
        assert evaluate(s, 0.9 * rep.rho, 0.9 * rep.rho_prime).converged
        with pytest.raises(NonConvergence):
            evaluate(s, 1.5 * rep.rho, 1.5 * rep.rho_prime)
