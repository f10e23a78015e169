"""Command line: ``ml2 {eval,region,verify,catalog}``.

Exit codes: 0 success, 1 a verification failed, 2 configuration error,
3 numerical error.  All floats are printed with 17 significant digits so
that reports round-trip and compare byte-for-byte.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import identities as ids
from . import pde
from .convergence import classify, univariate_radius
from .errors import (
    DegenerateExponent,
    DomainError,
    NonConvergence,
    NonFinite,
    NonIntegerExponent,
    PoleError,
    PreconditionViolated,
    UnknownPreset,
)
from .presets import catalog, is_bivariate, preset, preset_params
from .series import EvalOptions, SeriesSpec, evaluate_many

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_NUMERIC = 0, 1, 2, 3
CATALOG_ENV = "ML2_CATALOG_DIR"
PDE_IDS = ("pde-x", "pde-y")
PDE_T = (10, 20, 30)


class ConfigError(Exception):
    pass


# -- output ------------------------------------------------------------------------


def fmt(v):
    return format(float(v), ".17g")


def _dump(obj):
    """JSON with every float written as %.17g."""
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        if math.isnan(v):
            return "NaN"
        if math.isinf(v):
            return "Infinity" if v > 0 else "-Infinity"
        return fmt(v)
    if isinstance(obj, complex):
        return _dump({"re": obj.real, "im": obj.imag})
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_dump(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(_dump(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj):
    return _dump(obj) + "\n"


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([fmt(v) if isinstance(v, (float, np.floating)) else v for v in r])
    return buf.getvalue()


# -- configuration -------------------------------------------------------------------


def catalog_dir():
    env = os.environ.get(CATALOG_ENV)
    return Path(env) if env else Path(__file__).with_name("catalog")


def load_params_file(name):
    """A JSON file by path, else by name inside the catalog directory."""
    path = Path(name)
    if not path.exists():
        path = catalog_dir() / name
    if not path.exists():
        raise ConfigError(f"parameter file {name!r} not found (catalog: {catalog_dir()})")
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from None


def _scalar(text):
    try:
        return float(text)
    except ValueError:
        try:
            return complex(text.replace(" ", ""))
        except ValueError:
            raise ConfigError(f"not a number: {text!r}") from None


def _bindings(args, data):
    params = dict(data.get("params", data.get("bindings", {}))) if data else {}
    for k in ("alpha", "beta", "gamma", "delta", "kappa", "mu", "q"):
        v = getattr(args, k, None)
        if v is not None:
            params[k] = v
    for item in getattr(args, "set", None) or []:
        if "=" not in item:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        params[k.strip()] = _scalar(v)
    return params


def build_spec(args):
    """SeriesSpec from --function (preset name or spec file) plus --params / scalar flags."""
    data = load_params_file(args.params) if args.params else {}
    func = args.function or data.get("function")
    if "spec" in data or (func and func.endswith(".json")):
        raw = data["spec"] if "spec" in data else load_params_file(func)
        try:
            return SeriesSpec.from_dict(raw), func or "spec"
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"malformed spec: {exc}") from None
    if not func:
        raise ConfigError("--function is required (preset name or spec file)")
    params = _bindings(args, data)
    try:
        needed = preset_params(func)
    except UnknownPreset:
        raise ConfigError(f"unknown function {func!r}; see `ml2 catalog`") from None
    missing = [k for k in needed if k not in params]
    if missing:
        raise ConfigError(f"{func} needs parameters {missing}")
    return preset(func, {k: params[k] for k in needed}), func


def _radii(spec):
    if spec.arity == 1:
        r = univariate_radius(spec)
        return r, r
    rep = classify(spec)
    return rep.rho, rep.rho_prime


def _grid_points(spec, grid, frac):
    try:
        nx, ny = (int(v) for v in grid.lower().split("x"))
    except ValueError:
        raise ConfigError(f"--grid expects NxM, got {grid!r}") from None
    if nx < 1 or ny < 1:
        raise ConfigError("--grid sizes must be >= 1")
    rx, ry = _radii(spec)
    rx = ids.DEFAULT_RADIUS if math.isinf(rx) else rx
    ry = ids.DEFAULT_RADIUS if math.isinf(ry) else ry
    gx = np.linspace(-frac * rx, frac * rx, nx) if nx > 1 else np.array([0.0])
    gy = np.linspace(-frac * ry, frac * ry, ny) if ny > 1 else np.array([0.0])
    if spec.arity == 1:
        return [(float(a), 0.0) for a in gx]
    return [(float(a), float(b)) for a in gx for b in gy]


def _real_or_complex(v):
    v = complex(v)
    return v.real if v.imag == 0 else v


# -- commands --------------------------------------------------------------------------


def cmd_eval(args):
    spec, name = build_spec(args)
    if args.grid:
        pts = _grid_points(spec, args.grid, args.radius_frac)
    else:
        x = args.z if args.z is not None else args.x
        if x is None:
            raise ConfigError("give --x/--y, --z or --grid")
        pts = [(x, args.y or 0.0)]
    xs = np.array([complex(p[0]) for p in pts])
    ys = np.array([complex(p[1]) for p in pts])
    opts = EvalOptions(rel_tol=args.rel_tol, strict=not args.allow_nonconverged, precision=args.precision)
    res = evaluate_many(spec, xs, ys if spec.arity == 2 else None, opts)
    rows = []
    for i in range(len(pts)):
        r = res[i]
        rows.append({
            "x": _real_or_complex(xs[i]), "y": _real_or_complex(ys[i]), "value": r.value, "terms_used": r.terms_used,
            "tail_estimate": r.tail_estimate, "converged": r.converged,
        })
    if args.format == "json":
        out = dumps({"function": name, "points": rows})
    elif args.format == "csv":
        out = _csv(
            ["x", "y", "re", "im", "terms_used", "tail_estimate", "converged"],
            [[complex(r["x"]).real, complex(r["y"]).real, r["value"].real, r["value"].imag, r["terms_used"],
              r["tail_estimate"], str(r["converged"]).lower()] for r in rows],
        )
    else:
        out = "".join(
            f"{name}({fmt(complex(r['x']).real)}, {fmt(complex(r['y']).real)}) = {fmt(r['value'].real)}"
            + (f" + {fmt(r['value'].imag)}j" if r["value"].imag else "")
            + f"  terms={r['terms_used']} converged={str(r['converged']).lower()}\n"
            for r in rows
        )
    sys.stdout.write(out)
    ok = all(r["converged"] for r in rows)
    return EXIT_OK if ok or args.allow_nonconverged else EXIT_NUMERIC


def cmd_region(args):
    spec, name = build_spec(args)
    if spec.arity != 2:
        r = univariate_radius(spec)
        rep = {"function": name, "radius": r}
        sys.stdout.write(dumps(rep) if args.format != "text" else f"{name}: radius {fmt(r)}\n")
        return EXIT_OK
    rep = classify(spec)
    if args.format == "csv":
        sys.stdout.write(rep.curve_csv())
    elif args.format == "text":
        sys.stdout.write(
            f"{name}: {rep.label}\nDelta={fmt(rep.delta)} Delta'={fmt(rep.delta_prime)}\n"
            f"rho={fmt(rep.rho)} rho_prime={fmt(rep.rho_prime)}\n" + (f"note: {rep.note}\n" if rep.note else "")
        )
    else:
        d = {"function": name, **rep.to_dict()}
        sys.stdout.write(dumps(d))
    return EXIT_OK


def _identity_cases(iid, args, data, rng):
    """Cases for one identity: from --params bindings when given, else random."""
    over = {}
    keys = ids.required_keys(iid)
    if args.p is not None and "p" in keys:
        over["p"] = args.p
    if args.q is not None and "q" in keys:
        over["q"] = args.q
    bindings = data.get("bindings") if data and data.get("identity", iid) == iid else None
    if bindings:
        b = {k: float(v) for k, v in bindings.items()}
        b.update(over)
        ids.check_preconditions(ids.IdentityCase(iid, b))
        rx, ry = ids.sample_radii(iid, b)
        pts = data.get("samples") or ids.sample_grid(rx, ry)[: args.samples]
        return [ids.IdentityCase(iid, b, [tuple(p) for p in pts], args.variant)]
    cases = []
    for _ in range(args.samples):
        c = ids.random_case(iid, rng, **over)
        c.variant = args.variant
        cases.append(c)
    return cases


def _verify_identity(iid, args, data, rng, opts):
    reports = []
    for case in _identity_cases(iid, args, data, rng):
        reports.append(ids.verify(case, opts).to_dict())
    return {"id": iid, "pass": all(r["pass"] for r in reports), "cases": reports}


def _verify_pde(iid, args, data, rng):
    eq = iid[-1]
    params = data.get("params") if data else None
    sets = [params] if params else [pde.random_params(rng) for _ in range(args.samples)]
    cases = []
    for p in sets:
        rep = pde.coefficient_recurrence_check(p, args.bound, args.bound, eq, "corrected")
        alt = pde.coefficient_recurrence_check(p, args.bound, args.bound, eq, "printed")
        spec = pde.d1_spec(p)
        rx, ry = _radii(spec)
        x0 = 0.3 * (ids.DEFAULT_RADIUS if math.isinf(rx) else rx)
        y0 = 0.3 * (ids.DEFAULT_RADIUS if math.isinf(ry) else ry)
        ops = [pde.operator_residual(p, x0, y0, T, eq).to_dict() for T in PDE_T]
        d = rep.to_dict()
        d.update({
            "params": dict(sorted(p.items())),
            "reading": "corrected",
            "printed_reading": alt.to_dict(),
            "operator": ops,
        })
        d["pass"] = bool(rep.passed and all(o["pass"] for o in ops))
        cases.append(d)
    return {"id": iid, "pass": all(c["pass"] for c in cases), "cases": cases}


def cmd_verify(args):
    data = load_params_file(args.params) if args.params else {}
    if args.all:
        targets = list(ids.IDENTITY_IDS) + list(PDE_IDS)
    else:
        targets = args.identity or ([data["identity"]] if data.get("identity") else [])
    if not targets:
        raise ConfigError("give --identity ID (repeatable) or --all")
    known = set(ids.IDENTITY_IDS) | set(PDE_IDS)
    bad = [t for t in targets if t not in known]
    if bad:
        raise ConfigError(f"unknown identity {bad}; known: {sorted(known)}")
    if args.samples < 1:
        raise ConfigError("--samples must be >= 1")
    opts = ids.VerifyOptions(tol=args.tol, order=args.order)
    rng = np.random.default_rng(args.seed)
    results = []
    for t in targets:
        if t in PDE_IDS:
            results.append(_verify_pde(t, args, data, rng))
        else:
            results.append(_verify_identity(t, args, data, rng, opts))
    ok = all(r["pass"] for r in results)
    report = {"seed": args.seed, "tolerance": args.tol, "pass": ok, "results": results}
    if args.format == "json":
        sys.stdout.write(dumps(report))
    elif args.format == "csv":
        rows = []
        for r in results:
            for k, c in enumerate(r["cases"]):
                for s in c.get("samples", []):
                    rows.append([r["id"], k, s["x"], s["y"], s["lhs"], s["rhs"], s["rel_residual"],
                                 str(c["pass"]).lower()])
                if "max_rel_error" in c:
                    rows.append([r["id"], k, "", "", "", "", c["max_rel_error"], str(c["pass"]).lower()])
        sys.stdout.write(_csv(["id", "case", "x", "y", "lhs", "rhs", "rel_residual", "pass"], rows))
    else:
        for r in results:
            worst = 0.0
            for c in r["cases"]:
                worst = max([worst, c.get("max_rel_error", 0.0)] + [s["rel_residual"] for s in c.get("samples", [])])
            sys.stdout.write(f"{r['id']:10s} {'PASS' if r['pass'] else 'FAIL'}  cases={len(r['cases'])} "
                             f"max_rel={fmt(worst)}\n")
        sys.stdout.write(f"overall {'PASS' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_catalog(args):
    files = sorted(p.name for p in catalog_dir().glob("*.json")) if catalog_dir().is_dir() else []
    cat = {
        "presets": {k: list(v) for k, v in catalog().items()},
        "identities": {i: {"params": list(ids.required_keys(i)), "note": ids.identity_note(i)}
                       for i in ids.IDENTITY_IDS},
        "pde": list(PDE_IDS),
        "files": files,
    }
    if args.format == "json":
        sys.stdout.write(dumps(cat))
    elif args.format == "csv":
        sys.stdout.write(_csv(["kind", "name", "params"],
                              [["preset" if is_bivariate(k) else "univariate", k, " ".join(v)]
                               for k, v in cat["presets"].items()]
                              + [["identity", k, " ".join(v["params"])] for k, v in cat["identities"].items()]))
    else:
        for k, v in cat["presets"].items():
            sys.stdout.write(f"{k:6s} {', '.join(v)}\n")
        for k, v in cat["identities"].items():
            sys.stdout.write(f"{k:10s} {v['note']}\n")
        sys.stdout.write(f"files: {', '.join(files)}\n")
    return EXIT_OK


# -- parser -----------------------------------------------------------------------------


def _function_args(p):
    p.add_argument("--function", "-f", help="preset name (see catalog) or spec JSON file")
    p.add_argument("--params", help="JSON file of bindings; searched in the catalog dir when not a path")
    for k in ("alpha", "beta", "gamma", "delta", "kappa", "mu", "q"):
        p.add_argument(f"--{k}", type=float, help=f"binding for {k} (univariate presets)")
    p.add_argument("--set", action="append", metavar="KEY=VALUE", help="extra binding, repeatable")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_CONFIG)


def build_parser():
    parser = _Parser(prog="ml2", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    pe = sub.add_parser("eval", help="evaluate a series at points or on a grid")
    _function_args(pe)
    pe.add_argument("--x", type=float)
    pe.add_argument("--y", type=float)
    pe.add_argument("--z", type=float, help="argument of a univariate function")
    pe.add_argument("--grid", help="NxM grid spanning +-radius_frac * (rho, rho')")
    pe.add_argument("--radius-frac", type=float, default=0.5)
    pe.add_argument("--rel-tol", type=float, default=1e-14)
    pe.add_argument("--allow-nonconverged", action="store_true")
    pe.add_argument("--precision", choices=("extended", "double"), default="extended",
                    help="working precision of the term chain")
    pe.add_argument("--format", choices=("json", "csv", "text"), default="json")
    pe.set_defaults(func=cmd_eval)

    pr = sub.add_parser("region", help="classify the convergence region")
    _function_args(pr)
    pr.add_argument("--format", choices=("json", "csv", "text"), default="json",
                    help="csv prints the case-2 boundary curve")
    pr.set_defaults(func=cmd_region)

    pv = sub.add_parser("verify", help="check integral identities and the differential system")
    pv.add_argument("--identity", action="append", help="identity id, repeatable (pde-x, pde-y included)")
    pv.add_argument("--all", action="store_true")
    pv.add_argument("--params", help="JSON bindings (identity cases) or D1 params (pde)")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--samples", type=int, default=5,
                    help="random bindings per identity; with --params bindings, sample points used")
    pv.add_argument("--tol", type=float, default=1e-6)
    pv.add_argument("--order", type=int, default=64, help="starting quadrature order")
    pv.add_argument("--bound", type=int, default=50, help="index bound for pde recurrence checks")
    pv.add_argument("--p", type=float)
    pv.add_argument("--q", type=float)
    pv.add_argument("--variant", choices=("corrected", "printed"), default="corrected")
    pv.add_argument("--format", choices=("json", "csv", "text"), default="json")
    pv.set_defaults(func=cmd_verify)

    pc = sub.add_parser("catalog", help="list presets, identities and bundled parameter files")
    pc.add_argument("--format", choices=("json", "csv", "text"), default="text")
    pc.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NonConvergence, PoleError, NonFinite, DomainError, DegenerateExponent, OverflowError) as exc:
        sys.stderr.write(f"ml2: numeric error: {exc}\n")
        return EXIT_NUMERIC
    except (ConfigError, UnknownPreset, PreconditionViolated, NonIntegerExponent, KeyError, ValueError) as exc:
        sys.stderr.write(f"ml2: config error: {exc}\n")
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
