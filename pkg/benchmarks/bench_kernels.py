"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 5]

Each kernel is called once to trigger compilation before timing; the best
of ``--repeat`` runs is reported.
"""

import argparse
import time

import numpy as np

from pasfiber import ess
from pasfiber.kernels import demap, ssfm, trellis
from pasfiber.metrics import LabeledAsk


def best_of(fn, repeat):
    fn()
    ts = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        ts.append(time.perf_counter() - t0)
    return min(ts)


def cases():
    rng = np.random.default_rng(0)
    alph = ess.AmplitudeAlphabet(8)

    field = rng.standard_normal((2, 2**20)) + 1j * rng.standard_normal((2, 2**20))
    yield "kerr_step (2 x 2^20 samples)", lambda f: f(field.copy(), 1e-3, True), ssfm.kerr_step_numba, ssfm.kerr_step_numpy

    N, emax = 4096, 30968
    J = (emax - N) // 8 + 1
    yield (
        "bounded_trellis (N=4096, 48 bits)",
        lambda f: f(N, J, alph.shifts, 48),
        trellis.bounded_trellis_numba,
        trellis.bounded_trellis_numpy,
    )

    t = ess.build_trellis(20, alph, 200)
    counts = t.int64_counts
    idx = rng.integers(0, t.total, 20_000).astype(np.int64)
    yield "shape_batch (20000 x N=20)", lambda f: f(idx, counts, alph.shifts), trellis.shape_batch_numba, trellis.shape_batch_numpy
    seqs = trellis.shape_batch_numpy(idx, counts, alph.shifts).astype(np.int64)
    yield "deshape_batch (20000 x N=20)", lambda f: f(seqs, counts, alph.shifts), trellis.deshape_batch_numba, trellis.deshape_batch_numpy

    yield (
        "log2_energy_counts (N=1024)",
        lambda f: f(1024, 1000, alph.shifts),
        trellis.log2_energy_counts_numba,
        trellis.log2_energy_counts_numpy,
    )

    c = LabeledAsk.uniform(8)
    n = 500_000
    sel = rng.integers(0, 8, n)
    y = c.points[sel] + 0.5 * rng.standard_normal(n)
    bits = np.ascontiguousarray(c.labels[sel])
    lp = np.log(c.prior)
    yield (
        "bit_metric_sums (5e5 samples, 8-ASK)",
        lambda f: f(y, bits, c.points, lp, c.labels, 0.25),
        demap.bit_metric_sums_numba,
        demap.bit_metric_sums_numpy,
    )


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    print(f"{'kernel':40s} {'numba [ms]':>11s} {'numpy [ms]':>11s} {'speedup':>8s}")
    for name, call, fast, slow in cases():
        a = best_of(lambda: call(fast), args.repeat)
        b = best_of(lambda: call(slow), args.repeat)
        print(f"{name:40s} {1e3 * a:11.2f} {1e3 * b:11.2f} {b / a:8.1f}")


if __name__ == "__main__":
    main()
