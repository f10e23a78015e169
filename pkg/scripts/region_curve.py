"""Write the case-2 boundary curve of D1 and probe it empirically.

For each direction on the curve, the series is evaluated at a fraction of the
curve point inside and outside; the CSV records whether it converged.

    python scripts/region_curve.py --params sample.json --out curve.csv
"""
import argparse
import csv
import sys
from dataclasses import dataclass

from ml2.cli import load_params_file
from ml2.convergence import classify
from ml2.presets import preset
from ml2.series import EvalOptions, evaluate


@dataclass
class Config:
    params: str = "d1_allones.json"
    inside: float = 0.9
    outside: float = 1.5
    out: str = "-"


def run(cfg: Config):
    spec = preset("D1", load_params_file(cfg.params)["params"])
    rep = classify(spec)
    if rep.case != 2:
        raise SystemExit(f"case {rep.case} ({rep.label}): no boundary curve")
    opts = EvalOptions(strict=False)
    rows = []
    for mu, nu, r, s in rep.curve:
        inner = evaluate(spec, cfg.inside * r, cfg.inside * s, opts).converged
        outer = evaluate(spec, cfg.outside * r, cfg.outside * s, opts).converged
        rows.append((mu, nu, r, s, inner, outer))
    fh = sys.stdout if cfg.out == "-" else open(cfg.out, "w", newline="")
    w = csv.writer(fh)
    w.writerow(["mu", "nu", "r", "s", f"converged_{cfg.inside:g}", f"converged_{cfg.outside:g}"])
    for row in rows:
        w.writerow([f"{v:.17g}" for v in row[:4]] + [str(v).lower() for v in row[4:]])
    if fh is not sys.stdout:
        fh.close()
    bad = sum(not a or b for *_, a, b in rows)
    print(f"rho={rep.rho:.17g} rho'={rep.rho_prime:.17g}; {len(rows) - bad}/{len(rows)} directions behave",
          file=sys.stderr)
    return bad


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        ap.add_argument(f"--{name}", type=type(default), default=default)
    return 1 if run(Config(**vars(ap.parse_args()))) else 0


if __name__ == "__main__":
    sys.exit(main())
