"""Pure-Python fallback for the training hot loop.

Mirrors _ckernels.pyx operation for operation: same permutation PRNG, same
floating-point evaluation order, so both backends produce identical
coefficients. Used when the compiled extension is unavailable or when
KBCAT_PURE_PYTHON=1 forces it.
"""

_MASK64 = (1 << 64) - 1


def _seed_state(seed):
    # splitmix64 of the user seed; xorshift state must be non-zero
    z = (seed + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    z ^= z >> 31
    return z or 0x9E3779B97F4A7C15


def dcd_train(data, indices, indptr, y, n_features, c, tol, max_epochs, seed,
              record_dual=False):
    """Dual coordinate descent for the L1-hinge linear SVM without bias.

    Arguments are CSR arrays (data float64, indices int32, indptr int64),
    labels y in {-1, +1}. Returns (w, alpha, epochs_run, last_violation,
    dual_objective_per_epoch or None).
    """
    import numpy as np

    x_data = data.tolist()
    x_indices = indices.tolist()
    row_ptr = indptr.tolist()
    labels = y.tolist()
    n = len(labels)

    q_diag = [0.0] * n
    for i in range(n):
        acc = 0.0
        for p in range(row_ptr[i], row_ptr[i + 1]):
            v = x_data[p]
            acc += v * v
        q_diag[i] = acc

    w = [0.0] * n_features
    alpha = [0.0] * n
    perm = list(range(n))
    state = _seed_state(seed)
    dual_trace = [] if record_dual else None

    epochs = 0
    violation = 0.0
    for _ in range(max_epochs):
        # Fisher-Yates with xorshift64*
        for i in range(n - 1, 0, -1):
            state ^= state >> 12
            state = (state ^ (state << 25)) & _MASK64
            state ^= state >> 27
            j = ((state * 0x2545F4914F6CDD1D) & _MASK64) % (i + 1)
            perm[i], perm[j] = perm[j], perm[i]

        violation = 0.0
        for i in perm:
            start = row_ptr[i]
            stop = row_ptr[i + 1]
            dot = 0.0
            for p in range(start, stop):
                dot += w[x_indices[p]] * x_data[p]
            y_i = labels[i]
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
                    # zero vector: dual objective is linear in alpha_i
                    new_a = c if g < 0.0 else 0.0
                if new_a != a:
                    d = (new_a - a) * y_i
                    for p in range(start, stop):
                        w[x_indices[p]] += d * x_data[p]
                    alpha[i] = new_a

        epochs += 1
        if record_dual:
            norm_sq = 0.0
            for v in w:
                norm_sq += v * v
            alpha_sum = 0.0
            for a in alpha:
                alpha_sum += a
            dual_trace.append(alpha_sum - 0.5 * norm_sq)
        if violation < tol:
            break

    return (np.asarray(w, dtype=np.float64),
            np.asarray(alpha, dtype=np.float64),
            epochs, violation, dual_trace)
