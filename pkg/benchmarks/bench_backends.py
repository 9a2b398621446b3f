"""Timing comparison of the compiled and pure-Python kernel backends.

Each backend runs in its own subprocess because the backend is fixed at
import time by the COMPFADE_BACKEND environment variable.  The parent
collects per-workload wall times and prints a table with speedups.

Usage:
    python3 benchmarks/bench_backends.py
    python3 benchmarks/bench_backends.py --points 5000 --samples 100000
"""

import argparse
import json
import os
import subprocess
import sys
import time


def _workloads(points, samples):
    import numpy as np

    from compfade import AefDist, AefParams, AkfDist, AkfParams, mc

    aef = AefDist(AefParams(alpha=3.5, eta=0.5, mu=1.5, ms=3.0), gamma_bar=2.0)
    akf = AkfDist(AkfParams(alpha=2.5, kappa=1.5, mu=1.2, ms=4.0), gamma_bar=2.0)
    grid = np.geomspace(0.05, 8.0, points)
    phys = mc.make_phys(AefParams(alpha=2.5, eta=0.4, mu=2.0, ms=4.0))

    return [
        ("aef snr_pdf", lambda: [aef.snr_pdf(g) for g in grid]),
        ("aef snr_cdf", lambda: [aef.snr_cdf(g).value for g in grid]),
        ("akf snr_pdf", lambda: [akf.snr_pdf(g) for g in grid]),
        ("akf snr_cdf_closed", lambda: [akf.snr_cdf_closed(g).value for g in grid]),
        ("aef sampler", lambda: mc.sample_aef_envelope(phys, samples, seed=7)),
    ]


def run_worker(points, samples):
    t0 = time.perf_counter()
    jobs = _workloads(points, samples)
    for _, fn in jobs:
        fn()  # warm caches and trigger any JIT compilation
    warmup = time.perf_counter() - t0

    timings = {}
    for name, fn in jobs:
        best = min(_timed(fn) for _ in range(3))
        timings[name] = best
    print(json.dumps({"warmup_s": warmup, "timings": timings}))


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def run_backend(backend, points, samples):
    env = dict(os.environ)
    env["COMPFADE_BACKEND"] = backend
    r = subprocess.run(
        [sys.executable, __file__, "--worker", "--points", str(points),
         "--samples", str(samples)],
        capture_output=True, env=env,
    )
    if r.returncode != 0:
        sys.stderr.write(r.stderr.decode())
        raise SystemExit(f"{backend} worker failed")
    return json.loads(r.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=2000,
                    help="grid size for pdf/cdf workloads (default 2000)")
    ap.add_argument("--samples", type=int, default=50000,
                    help="draw count for the sampler workload (default 50000)")
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()

    if args.worker:
        run_worker(args.points, args.samples)
        return

    results = {b: run_backend(b, args.points, args.samples)
               for b in ("numba", "numpy")}

    print(f"grid points: {args.points}   sampler draws: {args.samples}")
    print(f"warmup (includes JIT compile): numba "
          f"{results['numba']['warmup_s']:.2f}s, numpy "
          f"{results['numpy']['warmup_s']:.2f}s")
    print()
    header = f"{'workload':22s} {'numba [s]':>10s} {'numpy [s]':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for name in results["numba"]["timings"]:
        tn = results["numba"]["timings"][name]
        tp = results["numpy"]["timings"][name]
        print(f"{name:22s} {tn:10.4f} {tp:10.4f} {tp / tn:7.1f}x")


if __name__ == "__main__":
    main()
