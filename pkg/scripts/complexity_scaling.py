"""Count field operations of the solver over GF(p) and fit D^c on log-log points.

    python3 scripts/complexity_scaling.py --kmax 14 --bivariate-kmax 5
"""

import argparse
import math
import time
from dataclasses import dataclass

from rootfun import GF, Poly, PolySystem, count_ops, solve
from rootfun.bezoutian import bezoutian
from rootfun.functionals import extension_context


@dataclass
class ScalingConfig:
    prime: int = 32003
    kmin: int = 4
    kmax: int = 12
    bivariate_kmin: int = 2
    bivariate_kmax: int = 4


def families(cfg: ScalingConfig):
    F = GF(cfg.prime)
    x = Poly.variable(1, 0, F)
    x1, x2 = Poly.variable(2, 0, F), Poly.variable(2, 1, F)
    return {
        "x^k - 1": [PolySystem((x**k - 1,), F) for k in range(cfg.kmin, cfg.kmax + 1)],
        "(x1^k - 1, x2^k - 1)": [PolySystem((x1**k - 1, x2**k - 1), F)
                                 for k in range(cfg.bivariate_kmin, cfg.bivariate_kmax + 1)],
    }


def count(sys, fast):
    bezoutian.cache_clear()
    extension_context.cache_clear()
    with count_ops() as c:
        solve(sys, fast_path=fast)
    return c.ops


def slope(points):
    lx = [math.log(d) for d, _ in points]
    ly = [math.log(c) for _, c in points]
    mx, my = sum(lx) / len(lx), sum(ly) / len(ly)
    return sum((a - mx) * (b - my) for a, b in zip(lx, ly)) / sum((a - mx) ** 2 for a in lx)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, val in vars(ScalingConfig()).items():
        ap.add_argument("--" + name.replace("_", "-"), type=int, default=val)
    cfg = ScalingConfig(**vars(ap.parse_args()))
    for label, systems in families(cfg).items():
        for fast in (True, False):
            route = "fast" if fast else "literal"
            pts = []
            t = time.perf_counter()
            for s in systems:
                pts.append((s.D, count(s, fast)))
                print(f"{label:<22} {route:<5} D={s.D:<4} ops={pts[-1][1]}")
            print(f"{label:<22} {route:<5} fitted c = {slope(pts):.2f}  ({time.perf_counter() - t:.2f}s)\n")


if __name__ == "__main__":
    main()
