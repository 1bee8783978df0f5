# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled training hot loop.

Keep this file in lockstep with _pykernels.py: the permutation PRNG and the
floating-point evaluation order must match exactly so the two backends
return identical coefficients.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef unsigned long long u64

cdef u64 _MUL = 0x2545F4914F6CDD1DULL


cdef inline u64 _seed_state(u64 seed) nogil:
    cdef u64 z = seed + 0x9E3779B97F4A7C15ULL
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    z = z ^ (z >> 31)
    if z == 0:
        z = 0x9E3779B97F4A7C15ULL
    return z


def dcd_train(double[::1] data, int[::1] indices, long long[::1] indptr,
              double[::1] y, Py_ssize_t n_features, double c, double tol,
              int max_epochs, u64 seed, bint record_dual=False):
    """Dual coordinate descent for the L1-hinge linear SVM without bias.

    Same contract as _pykernels.dcd_train.
    """
    cdef Py_ssize_t n = y.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] w_arr = np.zeros(n_features, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] alpha_arr = np.zeros(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] qdiag_arr = np.zeros(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] perm_arr = np.arange(n, dtype=np.int64)
    cdef double[::1] w = w_arr
    cdef double[::1] alpha = alpha_arr
    cdef double[::1] q_diag = qdiag_arr
    cdef long long[::1] perm = perm_arr

    cdef Py_ssize_t i, p, start, stop, idx, j
    cdef long long tmp
    cdef double acc, v, dot, g, a, pg, q, new_a, d, y_i
    cdef double violation = 0.0
    cdef double norm_sq, alpha_sum
    cdef int epochs = 0, epoch
    cdef u64 state = _seed_state(seed)

    dual_trace = [] if record_dual else None

    for i in range(n):
        acc = 0.0
        for p in range(indptr[i], indptr[i + 1]):
            v = data[p]
            acc += v * v
        q_diag[i] = acc

    for epoch in range(max_epochs):
        for i in range(n - 1, 0, -1):
            state ^= state >> 12
            state ^= state << 25
            state ^= state >> 27
            j = <Py_ssize_t>((state * _MUL) % (<u64>i + 1))
            tmp = perm[i]
            perm[i] = perm[j]
            perm[j] = tmp

        violation = 0.0
        for idx in range(n):
            i = perm[idx]
            start = indptr[i]
            stop = indptr[i + 1]
            dot = 0.0
            for p in range(start, stop):
                dot += w[indices[p]] * data[p]
            y_i = y[i]
            g = y_i * dot - 1.0
            a = alpha[i]
            if a == 0.0:
                pg = g if g < 0.0 else 0.0
            elif a == c:
                pg = g if g > 0.0 else 0.0
            else:
                pg = g
            if pg != 0.0:
                if -pg > violation:
                    violation = -pg
                elif pg > violation:
                    violation = pg
                q = q_diag[i]
                if q > 0.0:
                    new_a = a - g / q
                    if new_a < 0.0:
                        new_a = 0.0
                    elif new_a > c:
                        new_a = c
                else:
                    new_a = c if g < 0.0 else 0.0
                if new_a != a:
                    d = (new_a - a) * y_i
                    for p in range(start, stop):
                        w[indices[p]] += d * data[p]
                    alpha[i] = new_a

        epochs = epoch + 1
        if record_dual:
            norm_sq = 0.0
            for i in range(n_features):
                norm_sq += w[i] * w[i]
            alpha_sum = 0.0
            for i in range(n):
                alpha_sum += alpha[i]
            dual_trace.append(alpha_sum - 0.5 * norm_sq)
        if violation < tol:
            break

    return w_arr, alpha_arr, epochs, violation, dual_trace
