"""Compare the compiled and pure-Python mod-p kernels.

Usage: python3 benchmarks/bench_modp.py [--repeat N]

Times three workloads on each backend: modular factorisation of a division
polynomial, the Frobenius powering step on its own, and the full integer
factorisation used by the torsion search.
"""

from __future__ import annotations

import argparse
import time

from qtorsion.database import resolve_curve
from qtorsion.exactmath import bounded_factors, modp


def _best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    E = resolve_curve("75b3")
    f = E.division_polynomial(16).int_primitive()
    g = resolve_curve("90c4").division_polynomial(12).int_primitive()
    p = 10007
    fp = modp.monic(modp.reduce(f, p), p)
    return {
        "factor psi16(75b3) mod 10007": lambda: modp.factor(f, p),
        "x^p mod psi16(75b3), p = 10007": lambda: modp.powmod([0, 1], p, fp, p),
        "bounded_factors(psi12(90c4), 4)": lambda: bounded_factors(g, 4),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = ["python"] + (["compiled"] if modp.compiled_available() else [])
    jobs = workloads()
    times: dict[str, dict[str, float]] = {name: {} for name in jobs}
    for b in backends:
        modp.use_backend(b)
        for name, fn in jobs.items():
            times[name][b] = _best(fn, args.repeat)
    print(f"{'workload':<36}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, row in times.items():
        line = f"{name:<36}" + "".join(f"{row[b]:>11.3f}s" for b in backends)
        if len(backends) > 1:
            line += f"{row['python'] / row['compiled']:>11.1f}x"
        print(line)
    if len(backends) == 1:
        print("compiled kernel not built; only the pure-Python backend was timed")


if __name__ == "__main__":
    main()
