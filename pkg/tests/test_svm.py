"""Linear SVM: closed-form pairs, QP oracle, dual invariants."""

import numpy as np
import pytest

from kbcat.errors import DegenerateLabels, EmptyClass
from kbcat.features import SparseVector
from kbcat.svm import (decision_values, predict_svm, train_binary_svm,
                       train_ovr)


def dense_vec(values):
    values = np.asarray(values, dtype=np.float64)
    nz = np.nonzero(values)[0]
    return SparseVector(indices=nz.astype(np.int32), values=values[nz])


def one_d_pair():
    return [dense_vec([1.0]), dense_vec([-1.0])], [1.0, -1.0]


class TestBinaryTraining:
    def test_symmetric_pair_c1(self):
        # minimizing w^2/2 + 2C max(0, 1 - w) gives w = min(2C, 1)
        vectors, y = one_d_pair()
        model = train_binary_svm(vectors, y, 1, c=1.0, tol=1e-6)
        assert model.w[0] == pytest.approx(1.0, abs=1e-3)
        assert model.converged

    def test_symmetric_pair_c01(self):
        vectors, y = one_d_pair()
        model = train_binary_svm(vectors, y, 1, c=0.1, tol=1e-6)
        assert model.w[0] == pytest.approx(0.2, abs=1e-3)

    def test_degenerate_labels_rejected(self):
        vectors, _ = one_d_pair()
        with pytest.raises(DegenerateLabels):
            train_binary_svm(vectors, [1.0, 1.0], 1)

    def test_labels_must_be_signs(self):
        vectors, _ = one_d_pair()
        with pytest.raises(ValueError):
            train_binary_svm(vectors, [1.0, 0.0], 1)

    def test_alpha_in_box(self):
        rng = np.random.default_rng(5)
        for c in (0.1, 1.0, 10.0):
            vectors = [dense_vec(rng.normal(size=4)) for _ in range(15)]
            y = rng.choice([-1.0, 1.0], size=15)
            y[0], y[1] = 1.0, -1.0
            model = train_binary_svm(vectors, y, 4, c=c, max_epochs=30)
            assert np.all(model.alpha >= 0.0)
            assert np.all(model.alpha <= c)

    def test_dual_objective_monotone(self):
        rng = np.random.default_rng(6)
        vectors = [dense_vec(rng.normal(size=5)) for _ in range(20)]
        y = rng.choice([-1.0, 1.0], size=20)
        y[0], y[1] = 1.0, -1.0
        model = train_binary_svm(vectors, y, 5, c=1.0, max_epochs=50,
                                 verify=True)
        trace = model.dual_trace
        assert trace is not None and len(trace) >= 2
        for prev, cur in zip(trace, trace[1:]):
            assert cur >= prev - 1e-9 * max(1.0, abs(prev))

    def test_w_equals_alpha_combination(self):
        rng = np.random.default_rng(7)
        rows = rng.normal(size=(18, 6))
        vectors = [dense_vec(row) for row in rows]
        y = rng.choice([-1.0, 1.0], size=18)
        y[0], y[1] = 1.0, -1.0
        model = train_binary_svm(vectors, y, 6, c=1.0, tol=1e-8,
                                 max_epochs=2000)
        rebuilt = ((model.alpha * y)[:, None] * rows).sum(axis=0)
        assert np.allclose(model.w, rebuilt, atol=1e-8)

    def test_deterministic_given_seed(self):
        rng = np.random.default_rng(8)
        vectors = [dense_vec(rng.normal(size=4)) for _ in range(12)]
        y = rng.choice([-1.0, 1.0], size=12)
        y[0], y[1] = 1.0, -1.0
        a = train_binary_svm(vectors, y, 4, seed=123)
        b = train_binary_svm(vectors, y, 4, seed=123)
        c = train_binary_svm(vectors, y, 4, seed=124)
        assert np.array_equal(a.w, b.w)
        assert not np.array_equal(a.w, c.w)


def qp_oracle_weights(rows, y, c, iters=200000):
    """Projected-gradient ascent on the dual box QP, tiny fixed step."""
    signed = y[:, None] * rows
    gram = signed @ signed.T
    step = 1.0 / np.linalg.eigvalsh(gram).max()
    alpha = np.zeros(len(y))
    for _ in range(iters):
        alpha = np.clip(alpha + step * (1.0 - gram @ alpha), 0.0, c)
    return (alpha[:, None] * signed).sum(axis=0)


def separable_instance(rng):
    w_true = rng.normal(size=2)
    w_true /= np.linalg.norm(w_true)
    while True:
        n = int(rng.integers(4, 21))
        rows = rng.normal(size=(n, 2))
        y = np.sign(rows @ w_true)
        y[y == 0] = 1.0
        margin = (rows @ w_true) * y
        keep = margin > 0.2
        if keep.sum() >= 4 and len(set(y[keep])) == 2:
            return rows[keep], y[keep]


def test_matches_qp_oracle_on_separable_sets():
    rng = np.random.default_rng(2024)
    for trial in range(20):
        rows, y = separable_instance(rng)
        vectors = [dense_vec(row) for row in rows]
        model = train_binary_svm(vectors, y, 2, c=100.0, tol=1e-10,
                                 max_epochs=60000)
        w_oracle = qp_oracle_weights(rows, y, 100.0)
        rel = (np.linalg.norm(model.w - w_oracle)
               / np.linalg.norm(w_oracle))
        assert rel <= 1e-2, f"trial {trial}: rel error {rel}"
        # at C=100 a separable set is fit exactly
        predictions = np.sign(rows @ model.w)
        assert np.array_equal(predictions, y), f"trial {trial}"


class TestOneVsRest:
    def make_three_class(self):
        rows = np.array([[2.0, 0.0], [1.5, 0.2],
                         [0.0, 2.0], [0.1, 1.7],
                         [-2.0, -2.0], [-1.5, -1.8]])
        labels = [0, 0, 1, 1, 2, 2]
        return [dense_vec(r) for r in rows], labels

    def test_one_machine_per_class(self):
        vectors, labels = self.make_three_class()
        model = train_ovr(vectors, labels, 3, 2, c=10.0)
        assert len(model.machines) == 3
        assert model.weights.shape == (3, 2)

    def test_training_points_recovered(self):
        vectors, labels = self.make_three_class()
        model = train_ovr(vectors, labels, 3, 2, c=10.0)
        for vec, label in zip(vectors, labels):
            pred, _ = predict_svm(model, vec)
            assert pred == label

    def test_empty_class_rejected(self):
        vectors, _ = self.make_three_class()
        with pytest.raises(EmptyClass):
            train_ovr(vectors, [0, 0, 1, 1, 1, 1], 3, 2)

    def test_single_example_class_trains(self):
        vectors, _ = self.make_three_class()
        model = train_ovr(vectors, [0, 0, 1, 1, 1, 2], 3, 2)
        assert len(model.machines) == 3

    def test_two_class_decision_pattern(self):
        rows = np.array([[1.0, 0.1], [0.8, -0.2], [-1.0, 0.3],
                         [-0.7, -0.1]])
        labels = [0, 0, 1, 1]
        vectors = [dense_vec(r) for r in rows]
        model = train_ovr(vectors, labels, 2, 2, c=100.0, tol=1e-8,
                          max_epochs=20000)
        for vec, label in zip(vectors, labels):
            scores = decision_values(model, vec)
            assert int(np.argmax(scores)) == label


class TestPredict:
    def test_zero_vector_ties_to_class_zero(self):
        vectors, labels = TestOneVsRest().make_three_class()
        model = train_ovr(vectors, labels, 3, 2)
        pred, scores = predict_svm(model, dense_vec([0.0, 0.0]))
        assert pred == 0
        assert np.all(scores == 0.0)

    def test_positive_scaling_never_changes_argmax(self):
        vectors, labels = TestOneVsRest().make_three_class()
        model = train_ovr(vectors, labels, 3, 2, c=10.0)
        for vec in vectors:
            base, _ = predict_svm(model, vec)
            scaled = SparseVector(indices=vec.indices,
                                  values=vec.values * 7.5)
            pred, _ = predict_svm(model, scaled)
            assert pred == base
