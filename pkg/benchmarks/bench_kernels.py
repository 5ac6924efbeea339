"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Times each kernel on its own and then the end-to-end pipeline (automorphism
group, spectrum, sign search) with each backend swapped in.
"""

import argparse
import time
from contextlib import contextmanager

import numpy as np

from hypersym import _kernels_py, kernels
from hypersym.corpus import HyperflowerParams, hyperflower, random_hypergraph
from hypersym.signedsym import signed_redundancy
from hypersym.spectra import hypergraph_spectrum
from hypersym.symmetry import automorphism_group

try:
    from hypersym import _kernels as compiled
except ImportError:
    compiled = None


def best_of(func, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        func()
        times.append(time.perf_counter() - start)
    return min(times)


@contextmanager
def backend(module):
    saved = kernels.refine, kernels.permutes_matrix, kernels.jacobi_eigh
    kernels.refine, kernels.permutes_matrix, kernels.jacobi_eigh = (
        module.refine, module.permutes_matrix, module.jacobi_eigh,
    )
    try:
        yield
    finally:
        kernels.refine, kernels.permutes_matrix, kernels.jacobi_eigh = saved


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if compiled is None:
        print("compiled extension not built; nothing to compare")
        return

    rng = np.random.default_rng(0)
    w = rng.integers(0, 3, size=(60, 60))
    w = np.ascontiguousarray(w + w.T, dtype=np.int64)
    colours = np.zeros(60, dtype=np.int64)
    perm = np.arange(60, dtype=np.int64)
    m = rng.normal(size=(40, 40))
    m = m + m.T

    cases = {
        "refine n=60": lambda mod: mod.refine(colours, w),
        "permutes_matrix n=60": lambda mod: mod.permutes_matrix(w, perm),
        "jacobi_eigh n=40": lambda mod: mod.jacobi_eigh(m, 1e-12, 100),
    }
    flower = hyperflower(HyperflowerParams(5, 3, 10))
    rand = random_hypergraph(12, 10, 3, seed=1)
    pipeline = {
        "aut group, hyperflower n=25": lambda: automorphism_group(flower),
        "spectrum, hyperflower n=25": lambda: hypergraph_spectrum(flower),
        "sign search, random n=12": lambda: signed_redundancy(rand),
    }

    print(f"{'case':32s} {'compiled':>12s} {'python':>12s} {'speedup':>9s}")
    for name, call in cases.items():
        fast = best_of(lambda: call(compiled), args.repeat)
        slow = best_of(lambda: call(_kernels_py), args.repeat)
        print(f"{name:32s} {fast * 1e3:10.3f}ms {slow * 1e3:10.3f}ms {slow / fast:8.1f}x")
    for name, call in pipeline.items():
        with backend(compiled):
            fast = best_of(call, args.repeat)
        with backend(_kernels_py):
            slow = best_of(call, args.repeat)
        print(f"{name:32s} {fast * 1e3:10.3f}ms {slow * 1e3:10.3f}ms {slow / fast:8.1f}x")


if __name__ == "__main__":
    main()
