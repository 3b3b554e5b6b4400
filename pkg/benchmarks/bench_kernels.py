"""Compare the compiled kernel, its pure-Python twin and the generic path.

    python benchmarks/bench_kernels.py [--repeat N] [--tol T]

Each case integrates a catalog star field over a multi-piece contour and
reports the best wall time per call and the evaluation count. The compiled
and python kernels refine identically, so their counts must match.
"""

import argparse
import math
import sys
import time

from starcalc import catalog
from starcalc.bnum import BNumber as B
from starcalc.contour import arc, rectangle, segment
from starcalc.kernels import available
from starcalc.starint import star_integral_detail

PI = math.pi

CASES = [
    ("identity, full turn", "identity", None, arc(2.0, -PI, PI)),
    ("power 1+2i, rectangle", "power", 1 + 2j, rectangle(1.2, 3.0, -2 * PI, 2 * PI)),
    ("log, spiral segment", "log", None, segment(B(1.5, -3 * PI), B(2.5, 3 * PI))),
    ("cosh, three pieces", "cosh", None,
     segment(B(1.2, 0.0), B(3.0, 1.0)) + arc(3.0, 1.0, 5.0) + segment(B(3.0, 5.0), B(1.5, -2.0))),
]


def best_time(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--tol", type=float, default=1e-10)
    args = ap.parse_args(argv)

    backends = [b for b in ("compiled", "python") if b in available()] + ["generic"]
    print(f"{'case':<24}{'backend':<10}{'ms/call':>10}{'evals':>9}{'speedup':>9}")
    for label, name, param, contour in CASES:
        field = catalog.star_field(name, param)
        rows = {}
        for b in backends:
            t, res = best_time(lambda: star_integral_detail(field, contour, args.tol, b), args.repeat)
            rows[b] = (t, res)
        slowest = max(t for t, _ in rows.values())
        for b, (t, res) in rows.items():
            print(f"{label:<24}{b:<10}{1e3 * t:>10.3f}{res.evaluations:>9}{slowest / t:>8.1f}x")
        if "compiled" in rows:
            assert rows["compiled"][1].evaluations == rows["python"][1].evaluations
    return 0


if __name__ == "__main__":
    sys.exit(main())
