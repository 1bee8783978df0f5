"""Benchmark the compiled training kernel against the pure-Python twin.

Generates a random sparse problem, runs both backends for a fixed number
of epochs (tol = 0 disables early stopping), checks the outputs are
identical, and reports wall times.

Usage: python benchmarks/bench_kernels.py [--docs N] [--features F]
           [--nnz N] [--epochs E]
"""

import argparse
import time

import numpy as np

from kbcat import _pykernels

try:
    from kbcat import _ckernels
except ImportError:
    _ckernels = None


def random_problem(rng, docs, features, nnz):
    rows = []
    for _ in range(docs):
        k = rng.integers(1, nnz + 1)
        idx = np.sort(rng.choice(features, size=k, replace=False))
        val = rng.normal(size=k)
        val /= np.linalg.norm(val)
        rows.append((idx.astype(np.int32), val))
    data = np.concatenate([v for _, v in rows])
    indices = np.concatenate([i for i, _ in rows]).astype(np.int32)
    indptr = np.zeros(docs + 1, dtype=np.int64)
    for i, (idx, _) in enumerate(rows):
        indptr[i + 1] = indptr[i] + len(idx)
    y = rng.choice([-1.0, 1.0], size=docs)
    return data, indices, indptr, y


def run(impl, problem, features, epochs):
    data, indices, indptr, y = problem
    start = time.perf_counter()
    w, alpha, ran, violation, _ = impl.dcd_train(
        data, indices, indptr, y, features, 1.0, 0.0, epochs, 42)
    elapsed = time.perf_counter() - start
    assert ran == epochs
    return w, alpha, elapsed


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--docs", type=int, default=1000)
    parser.add_argument("--features", type=int, default=5000)
    parser.add_argument("--nnz", type=int, default=40)
    parser.add_argument("--epochs", type=int, default=10)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    problem = random_problem(rng, args.docs, args.features, args.nnz)

    w_py, alpha_py, t_py = run(_pykernels, problem, args.features,
                               args.epochs)
    print(f"python backend: {t_py:.3f}s "
          f"({args.docs} docs, {args.epochs} epochs)")

    if _ckernels is None:
        print("compiled backend not built; skipping comparison")
        return

    w_c, alpha_c, t_c = run(_ckernels, problem, args.features, args.epochs)
    print(f"compiled backend: {t_c:.3f}s")
    identical = (np.array_equal(w_py, w_c)
                 and np.array_equal(alpha_py, alpha_c))
    print(f"outputs identical: {identical}")
    print(f"speedup: {t_py / t_c:.1f}x")


if __name__ == "__main__":
    main()
