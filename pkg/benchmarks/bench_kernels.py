"""Compare the compiled and pure-Python kernels.

Micro-benchmarks run both backends in this process; the end-to-end chain
timing runs in subprocesses so that ``PETINDUCE_PURE`` takes effect.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import os
import random
import subprocess
import sys
import timeit
from fractions import Fraction

from petinduce import _kernels_py

try:
    from petinduce import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

CHAIN_SNIPPET = (
    "import time; t = time.perf_counter();"
    "from petinduce import pipeline;"
    "rec = pipeline.run_chain(); t1 = time.perf_counter();"
    "rep = pipeline.full_report(rec, pipeline.load_expected(), desub_samples=20);"
    "assert rep.ok;"
    "print(f'{t1 - t:.3f} {time.perf_counter() - t1:.3f}')"
)


def elements(mod, n, rng):
    out = []
    for _ in range(n):
        a = Fraction(rng.randint(-50, 50), rng.randint(1, 12))
        b = Fraction(rng.randint(-50, 50), rng.randint(1, 12))
        out.append(mod.FieldElem(a, b))
    return out


def micro(mod, repeat):
    rng = random.Random(1)
    xs = elements(mod, 200, rng)
    ys = elements(mod, 200, rng)
    units = [mod.FieldElem(rng.randint(-30, 30), rng.randint(-30, 30)) for _ in range(200)]
    one = mod.FieldElem(1, 0)
    # cells of a 4 x 4 grid of unit squares: i < x < i + 1, j < y < j + 1
    table = [[(-i, 0, 1, 0, 0, 0), (i + 1, 0, -1, 0, 0, 0), (-j, 0, 0, 0, 1, 0), (j + 1, 0, 0, 0, -1, 0)]
             for i in range(4) for j in range(4)]
    packed = mod.prepare_table(table)
    pts = [(mod.FieldElem(Fraction(rng.randint(1, 399), 100), Fraction(rng.randint(0, 5), 100)),
            mod.FieldElem(Fraction(rng.randint(1, 399), 100), 0)) for _ in range(200)]

    cases = {
        "add+mul (Q(phi))": lambda: [x * y + x for x, y in zip(xs, ys)],
        "add+mul (Z[phi])": lambda: [x * y + x for x, y in zip(units, units[1:])],
        "sign/compare": lambda: [x < y for x, y in zip(xs, ys)],
        "floor": lambda: [x.floor() for x in xs],
        "inverse": lambda: [one / x for x in xs if x],
        "locate (raw table)": lambda: [mod.locate(table, p, q) for p, q in pts],
        "locate (packed)": lambda: [mod.locate(packed, p, q) for p, q in pts],
    }
    return {name: min(timeit.repeat(fn, number=20, repeat=repeat)) / 20 for name, fn in cases.items()}


def chain(pure):
    env = dict(os.environ)
    if pure:
        env["PETINDUCE_PURE"] = "1"
    else:
        env.pop("PETINDUCE_PURE", None)
    out = subprocess.run([sys.executable, "-c", CHAIN_SNIPPET], env=env, check=True,
                         capture_output=True, text=True).stdout.split()
    return float(out[0]), float(out[1])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    py = micro(_kernels_py, args.repeat)
    cy = micro(_kernels_c, args.repeat) if _kernels_c else None
    print(f"{'kernel':<20}{'python (us)':>14}{'compiled (us)':>16}{'speedup':>10}")
    for name, t in py.items():
        if cy:
            print(f"{name:<20}{t * 1e6:>14.1f}{cy[name] * 1e6:>16.1f}{t / cy[name]:>9.1f}x")
        else:
            print(f"{name:<20}{t * 1e6:>14.1f}{'n/a':>16}")
    print()
    print(f"{'end to end':<20}{'python (s)':>14}{'compiled (s)':>16}{'speedup':>10}")
    py_chain = chain(pure=True)
    cy_chain = chain(pure=False) if _kernels_c else None
    for i, label in enumerate(["chain", "verification"]):
        if cy_chain:
            print(f"{label:<20}{py_chain[i]:>14.3f}{cy_chain[i]:>16.3f}{py_chain[i] / cy_chain[i]:>9.1f}x")
        else:
            print(f"{label:<20}{py_chain[i]:>14.3f}{'n/a':>16}")


if __name__ == "__main__":
    main()
