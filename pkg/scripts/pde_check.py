"""Coefficient recurrence and operator residual of the D1 PDE system on random integer sets.

    python scripts/pde_check.py --sets 5 --size 50 --T 10,20,30
"""
import argparse
import sys
from dataclasses import dataclass

import numpy as np

from ml2.pde import EQUATIONS, coefficient_recurrence_check, operator_residual, random_params


@dataclass
class Config:
    sets: int = 5
    seed: int = 0
    size: int = 50
    T: str = "10,20,30"
    x: float = 0.3
    y: float = -0.2


def run(cfg: Config):
    rng = np.random.default_rng(cfg.seed)
    Ts = [int(t) for t in cfg.T.split(",")]
    failures = 0
    print("set,equation,recurrence_max_rel,worst_cell," + ",".join(f"residual_over_bound_T{t}" for t in Ts))
    for i in range(cfg.sets):
        p = random_params(rng)
        for eq in EQUATIONS:
            rep = coefficient_recurrence_check(p, cfg.size, cfg.size, eq)
            ops = [operator_residual(p, cfg.x, cfg.y, t, eq) for t in Ts]
            failures += (not rep.passed) + sum(not o.passed for o in ops)
            ratios = ",".join(f"{abs(o.residual) / o.bound:.3f}" for o in ops)
            print(f"{i},{eq},{rep.max_rel_error:.3e},{rep.worst_cell[0]}:{rep.worst_cell[1]},{ratios}")
    return failures


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        ap.add_argument(f"--{name}", type=type(default), default=default)
    return 1 if run(Config(**vars(ap.parse_args()))) else 0


if __name__ == "__main__":
    sys.exit(main())
