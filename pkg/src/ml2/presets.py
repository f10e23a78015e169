"""Named presets: the bivariate D1-D5, E1-E11 and the univariate kernels.

Every preset is a template of factors.  A factor is ``(base, a, b)`` where
``base`` is a parameter name (or a literal), ``a`` multiplies m and ``b``
multiplies n; ``None`` means a zero coefficient and a leading ``-`` negates
the named coefficient.  Parameters are listed in the order the factors print.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import UnknownPreset
from .gamma import gamma as _gamma_fn
from .series import DenFactor, NumFactor, SeriesSpec


@dataclass(frozen=True)
class _Template:
    num: tuple
    den: tuple
    arity: int = 2
    note: str = ""
    scale: Callable | None = None

    @property
    def params(self):
        names = []
        for fac in self.num + self.den:
            for item in fac:
                if isinstance(item, str):
                    name = item.lstrip("-")
                    if name not in names:
                        names.append(name)
        return tuple(names)


def _n(*facs):
    return tuple(facs)


_BIVARIATE = {
    "D1": _Template(
        _n(("gamma1", "alpha1", "beta1"), ("gamma2", "alpha2", None), ("gamma3", None, "beta2")),
        _n(("delta1", "alpha3", "beta3"), ("delta2", "alpha4", None), ("delta3", None, "beta4")),
        note="all-ones alphas/betas with delta2=delta3=1 give F1(gamma1;gamma2,gamma3;delta1;x,y)/Gamma(delta1)",
    ),
    "D2": _Template(
        _n(("gamma1", "alpha1", "beta1"), ("gamma2", "alpha2", None), ("gamma3", None, "beta2")),
        _n(
            ("delta1", "alpha3", None),
            ("delta2", None, "beta3"),
            ("delta3", "alpha4", None),
            ("delta4", None, "beta4"),
        ),
    ),
    "D3": _Template(
        _n(
            ("gamma1", "alpha1", None),
            ("gamma2", None, "beta1"),
            ("gamma3", "alpha2", None),
            ("gamma4", None, "beta2"),
        ),
        _n(("delta1", "alpha3", "beta3"), ("delta2", "alpha4", None), ("delta3", None, "beta4")),
    ),
    "D4": _Template(
        _n(("gamma1", "alpha1", "beta1"), ("gamma2", "alpha2", "beta2")),
        _n(
            ("delta1", "alpha3", None),
            ("delta2", None, "beta3"),
            ("delta3", "alpha4", None),
            ("delta4", None, "beta4"),
        ),
    ),
    "D5": _Template(
        _n(("gamma1", "alpha1", "beta1"), ("gamma2", "alpha2", "beta2")),
        _n(("delta1", "alpha3", "beta3"), ("delta2", "alpha4", None), ("delta3", None, "beta4")),
    ),
    "E1": _Template(
        _n(("gamma1", "alpha1", None), ("gamma2", None, "beta1")),
        _n(("delta1", "alpha2", "beta2"), ("delta2", "alpha3", None), ("delta3", None, "beta3")),
    ),
    "E2": _Template(
        _n(("gamma1", "alpha1", "beta1"), ("gamma2", "alpha2", None)),
        _n(("delta1", "alpha3", "beta2"), ("delta2", "alpha4", None), ("delta3", None, "beta3")),
    ),
    "E3": _Template(
        _n(("gamma1", "alpha1", "beta1"), ("gamma2", "alpha2", None)),
        _n(
            ("delta1", "alpha3", None),
            ("delta2", None, "beta2"),
            ("delta3", "alpha4", None),
            ("delta4", None, "beta3"),
        ),
    ),
    "E4": _Template(
        _n(("gamma1", "alpha1", "beta1"),),
        _n(
            ("delta1", "alpha2", None),
            ("delta2", None, "beta2"),
            ("delta3", "alpha3", None),
            ("delta4", None, "beta3"),
        ),
    ),
    "E5": _Template(
        _n(("gamma1", "alpha1", None),),
        _n(("delta1", "alpha2", "beta1"), ("delta2", "alpha3", None), ("delta3", None, "beta2")),
    ),
    "E6": _Template(
        _n(("gamma1", "alpha1", None), ("gamma2", None, "beta1"), ("gamma3", "alpha2", None)),
        _n(("delta1", "alpha3", "beta2"), ("delta2", "alpha4", None), ("delta3", None, "beta3")),
    ),
    "E7": _Template(
        _n(("gamma1", "alpha1", None), ("gamma2", "alpha2", None)),
        _n(("delta1", "alpha3", "beta1"), ("delta2", "alpha4", None), ("delta3", None, "beta2")),
    ),
    "E8": _Template(
        _n(("gamma1", "alpha1", "beta1"),),
        _n(("delta1", "alpha2", "beta2"), ("delta2", "alpha3", None), ("delta3", None, "beta3")),
    ),
    "E9": _Template(
        (),
        _n(("delta1", "alpha1", "beta1"), ("delta2", "alpha2", None), ("delta3", None, "beta2")),
    ),
    "E10": _Template(
        _n(("gamma1", "alpha1", "beta1"), ("gamma2", "alpha2", None)),
        _n(("delta1", "alpha3", None), ("delta2", None, "beta2")),
    ),
    "E11": _Template(
        _n(("gamma1", "alpha1", "beta1"), ("gamma2", "alpha2", None), ("gamma3", None, "beta2")),
        _n(("delta1", "alpha3", None), ("delta2", None, "beta3")),
    ),
    # Luchko-Gorenflo two-variable function: k!/(l1! l2!) = (1)_{m+n}/(m! n!)
    "LG2": _Template(
        _n((1.0, 1.0, 1.0),),
        _n(("beta", "alpha1", "alpha2"), (1.0, 1.0, None), (1.0, None, 1.0)),
        note="multinomial weight k!/(l1! l2!) written as (1)_{m+n}/(Gamma(1+m) Gamma(1+n))",
    ),
}

_UNIVARIATE = {
    "ML1": _Template((), _n((1.0, "alpha"),), arity=1),
    "ML2": _Template((), _n(("beta", "alpha"),), arity=1),
    "ML3": _Template(_n(("gamma", 1.0),), _n(("beta", "alpha"), (1.0, 1.0)), arity=1),
    "MLq": _Template(_n(("gamma", "q"),), _n(("beta", "alpha"), (1.0, 1.0)), arity=1),
    "MLgd": _Template(
        _n(("gamma", 1.0),),
        _n(("beta", "alpha"), ("delta", 1.0)),
        arity=1,
        note="1/(delta)_n = Gamma(delta)/Gamma(delta+n); the constant Gamma(delta) is carried in scale",
        scale=lambda p: _gamma_fn(p["delta"]),
    ),
    "MLgdq": _Template(
        _n(("gamma", "q"),),
        _n(("beta", "alpha"), ("delta", "p")),
        arity=1,
        note="1/(delta)_{pn} = Gamma(delta)/Gamma(delta+pn); the constant Gamma(delta) is carried in scale",
        scale=lambda p: _gamma_fn(p["delta"]),
    ),
    # sum (gamma)_{alpha m} z^m / Gamma(kappa m + delta): the Prabhakar-type kernel
    "EK": _Template(_n(("gamma", "alpha"),), _n(("delta", "kappa"),), arity=1),
    # Wright-type sum z^k / (Gamma(alpha k + mu) Gamma(delta - beta k))
    "WRIGHT": _Template((), _n(("mu", "alpha"), ("delta", "-beta")), arity=1),
}

_TEMPLATES = {**_BIVARIATE, **_UNIVARIATE}


def _resolve(item, params, name):
    if item is None:
        return 0.0
    if isinstance(item, str):
        sign = -1.0 if item.startswith("-") else 1.0
        key = item.lstrip("-")
        if key not in params:
            raise KeyError(f"preset {name} needs parameter {key!r}")
        return sign * params[key]
    return item


def _build(name, tpl, params):
    extra = set(params) - set(tpl.params)
    if extra:
        raise KeyError(f"preset {name} got unknown parameters {sorted(extra)}")

    def facs(rows, cls):
        out = []
        for row in rows:
            base = _resolve(row[0], params, name)
            a = _resolve(row[1], params, name)
            b = _resolve(row[2], params, name) if len(row) > 2 else 0.0
            out.append(cls(base, a.real if isinstance(a, complex) else a, b.real if isinstance(b, complex) else b))
        return out

    return SeriesSpec(
        numerators=facs(tpl.num, NumFactor),
        denominators=facs(tpl.den, DenFactor),
        arity=tpl.arity,
        note=f"{name}" + (f": {tpl.note}" if tpl.note else ""),
        scale=tpl.scale(params) if tpl.scale else 1.0,
    )


def multi_index(gamma, K, alphas, betas):
    """E_{gamma,K}[(alpha_j, beta_j); z] = sum (gamma)_{rK} z^r / (prod Gamma(alpha_j r + beta_j) r!)."""
    dens = [DenFactor(b, a) for a, b in zip(alphas, betas)] + [DenFactor(1.0, 1.0)]
    return SeriesSpec([NumFactor(gamma, K)], dens, arity=1, note="MLK")


def srivastava_daoust(a=(), b=(), bp=(), c=(), d=(), dp=()):
    """Srivastava-Daoust double series with Gamma numerators.

    ``a``: triples (a_j, theta_j, phi_j); ``b``/``bp``: pairs (b_j, psi_j);
    ``c``: triples; ``d``/``dp``: pairs.  Gamma(a + m theta + n phi) is written
    as Gamma(a) (a)_{m theta + n phi}; the product of the Gamma(a) constants is
    carried in ``scale``.
    """
    nums, dens = [], []
    scale = 1.0
    for base, th, ph in a:
        nums.append(NumFactor(base, th, ph))
        scale *= _gamma_fn(base)
    for base, psi in b:
        nums.append(NumFactor(base, psi, 0.0))
        scale *= _gamma_fn(base)
    for base, psi in bp:
        nums.append(NumFactor(base, 0.0, psi))
        scale *= _gamma_fn(base)
    dens += [DenFactor(base, de, ep) for base, de, ep in c]
    dens += [DenFactor(base, eta, 0.0) for base, eta in d]
    dens += [DenFactor(base, 0.0, eta) for base, eta in dp]
    dens += [DenFactor(1.0, 1.0, 0.0), DenFactor(1.0, 0.0, 1.0)]
    return SeriesSpec(
        nums, dens, note="SD: Gamma numerators = Gamma(a) (a)_{...}; constants in scale", scale=scale
    )


def catalog():
    """Preset name -> ordered parameter names."""
    return {name: tpl.params for name, tpl in _TEMPLATES.items()}


def preset_params(name):
    if name not in _TEMPLATES:
        raise UnknownPreset(name)
    return _TEMPLATES[name].params


def preset(name, params=None, /, **kw):
    """Build the SeriesSpec of a named function from its parameters.

    >>> preset("ML2", alpha=1, beta=1).arity
    1
    """
    if name not in _TEMPLATES:
        raise UnknownPreset(name)
    p = dict(params or {})
    p.update(kw)
    return _build(name, _TEMPLATES[name], p)


def is_bivariate(name):
    return name in _BIVARIATE
