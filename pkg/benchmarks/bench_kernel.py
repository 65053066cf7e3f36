"""Compare the pure-Python and compiled PBW kernels.

    python3 benchmarks/bench_kernel.py [--repeat 3]

Each run uses a fresh kernel (empty memo), so the timings include the
normal-ordering recursion rather than cache hits.
"""

import argparse
import random
import time
from fractions import Fraction

from pbw_groebner import _pbw
from pbw_groebner.groebner import build_groebner_basis
from pbw_groebner.roots import DominantWeight
from pbw_groebner.uea import UEA, enveloping_algebra

try:
    from pbw_groebner import _cpbw
except ImportError:
    _cpbw = None


def random_terms(alg, rng, n_terms=3, max_deg=3):
    terms = {}
    for _ in range(n_terms):
        m = [0] * alg.nvars
        for _ in range(rng.randint(1, max_deg)):
            m[rng.randrange(alg.nvars)] += 1
        terms[tuple(m)] = Fraction(rng.randint(-3, 3) or 1, rng.randint(1, 3))
    return terms


def products(kernel_cls, cartan_type, rank, n_pairs, seed=0):
    alg = enveloping_algebra(cartan_type, rank)
    kernel = kernel_cls(alg.nvars, alg.lie.table)
    rng = random.Random(seed)
    pairs = [(random_terms(alg, rng), random_terms(alg, rng)) for _ in range(n_pairs)]
    t = time.perf_counter()
    results = [kernel.product(x, y) for x, y in pairs]
    return time.perf_counter() - t, results


def end_to_end(kernel_cls, cartan_type, rank, m):
    from pbw_groebner import uea

    alg = UEA(enveloping_algebra(cartan_type, rank).lie, kernel_cls=kernel_cls)
    saved = dict(uea._UEAS)
    uea._UEAS[(cartan_type, rank, False)] = alg
    uea._UEAS[(cartan_type, rank, True)] = UEA(alg.lie.degeneration, kernel_cls=kernel_cls)
    try:
        t = time.perf_counter()
        G = build_groebner_basis(DominantWeight.of(cartan_type, rank, m))
        return time.perf_counter() - t, [str(g) for g in G]
    finally:
        uea._UEAS.clear()
        uea._UEAS.update(saved)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    kernels = [("python", _pbw.PBWKernel)]
    if _cpbw is not None:
        kernels.append(("cython", _cpbw.PBWKernel))
    else:
        print("compiled kernel not available; timing the pure-Python kernel only")

    cases = [
        ("products A3, 400 pairs", lambda k: products(k, "A", 3, 400)),
        ("products C3, 400 pairs", lambda k: products(k, "C", 3, 400)),
        ("basis A4 (1,1,1,1)", lambda k: end_to_end(k, "A", 4, (1, 1, 1, 1))),
        ("basis C3 (1,1,1)", lambda k: end_to_end(k, "C", 3, (1, 1, 1))),
    ]
    print(f"{'case':28s}" + "".join(f"{name:>12s}" for name, _ in kernels) + "   speedup")
    for label, fn in cases:
        times, outputs = [], []
        for _, cls in kernels:
            best = float("inf")
            for _ in range(args.repeat):
                dt, out = fn(cls)
                best = min(best, dt)
            times.append(best)
            outputs.append(out)
        assert all(o == outputs[0] for o in outputs), f"kernels disagree on {label}"
        speed = f"{times[0] / times[-1]:8.2f}x" if len(times) > 1 else ""
        print(f"{label:28s}" + "".join(f"{t:11.3f}s" for t in times) + "  " + speed)


if __name__ == "__main__":
    main()
