"""Folds, F-measures, percent improvement, and the paired t-test."""

import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kbcat.errors import ClassTooSmall, LengthMismatch, ZeroBaseline
from kbcat.evaluation import (confusion_counts, micro_macro_f, paired_t_test,
                              percent_improvement, run_experiment,
                              stratified_folds, student_t_two_tailed_p,
                              with_baseline)

labels_strategy = st.lists(st.integers(0, 4), min_size=4, max_size=120)


class TestStratifiedFolds:
    def test_partition_and_balance(self):
        labels = [0] * 10 + [1] * 10
        plan = stratified_folds(labels, 5, seed=1)
        all_indices = sorted(i for fold in plan.folds for i in fold)
        assert all_indices == list(range(20))
        for fold in plan.folds:
            counts = Counter(labels[i] for i in fold)
            assert counts == {0: 2, 1: 2}

    def test_single_class_four_docs_two_folds(self):
        plan = stratified_folds([0, 0, 0, 0], 2, seed=0)
        assert sorted(len(f) for f in plan.folds) == [2, 2]

    def test_same_seed_same_plan(self):
        labels = [i % 3 for i in range(60)]
        assert (stratified_folds(labels, 10, seed=9).folds
                == stratified_folds(labels, 10, seed=9).folds)

    def test_different_seed_different_plan(self):
        labels = [i % 3 for i in range(60)]
        assert (stratified_folds(labels, 10, seed=1).folds
                != stratified_folds(labels, 10, seed=2).folds)

    def test_class_too_small(self):
        with pytest.raises(ClassTooSmall):
            stratified_folds([0, 0, 0, 1], 2, seed=0)

    def test_k_lower_bound(self):
        with pytest.raises(ValueError):
            stratified_folds([0, 0], 1, seed=0)

    def test_train_indices_complement(self):
        labels = [0] * 6 + [1] * 6
        plan = stratified_folds(labels, 3, seed=4)
        for fold in range(plan.k):
            train = set(plan.train_indices(fold))
            test = set(plan.folds[fold])
            assert train | test == set(range(12))
            assert train & test == set()

    @given(labels_strategy, st.integers(2, 6), st.integers(0, 99))
    @settings(max_examples=60)
    def test_properties_hold_for_random_inputs(self, labels, k, seed):
        counts = Counter(labels)
        if min(counts.values()) < k:
            with pytest.raises(ClassTooSmall):
                stratified_folds(labels, k, seed)
            return
        plan = stratified_folds(labels, k, seed)
        flat = sorted(i for fold in plan.folds for i in fold)
        assert flat == list(range(len(labels)))
        for cls in counts:
            per_fold = [sum(1 for i in fold if labels[i] == cls)
                        for fold in plan.folds]
            assert max(per_fold) - min(per_fold) <= 1


class TestConfusionCounts:
    def test_hand_example(self):
        counts = confusion_counts([0, 1, 1, 1], [0, 0, 1, 1], 2)
        assert counts[0].tolist() == [1, 0, 1]
        assert counts[1].tolist() == [2, 1, 0]

    def test_perfect(self):
        counts = confusion_counts([0, 1, 2], [0, 1, 2], 3)
        assert np.all(counts[:, 1:] == 0)
        assert counts[:, 0].tolist() == [1, 1, 1]

    def test_total_flip(self):
        counts = confusion_counts([1, 0], [0, 1], 2)
        assert np.all(counts[:, 0] == 0)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            confusion_counts([0], [0, 1], 2)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            confusion_counts([2], [0], 2)


class TestMicroMacroF:
    def test_hand_example(self):
        counts = confusion_counts([0, 1, 1, 1], [0, 0, 1, 1], 2)
        micro, macro, per_class = micro_macro_f(counts)
        assert micro == pytest.approx(0.75)
        assert macro == pytest.approx((2 / 3 + 0.8) / 2)
        assert per_class[0] == pytest.approx((1.0, 0.5, 2 / 3))

    def test_perfect_is_one(self):
        counts = confusion_counts([0, 1, 2], [0, 1, 2], 3)
        micro, macro, _ = micro_macro_f(counts)
        assert micro == 1.0 and macro == 1.0

    def test_zero_denominators_give_zero(self):
        # class 1 never predicted and never true
        counts = confusion_counts([0, 0], [0, 0], 2)
        _, macro, per_class = micro_macro_f(counts)
        assert per_class[1] == (0.0, 0.0, 0.0)
        assert macro == pytest.approx(0.5)

    def test_micro_equals_accuracy_for_single_label(self):
        rng = np.random.default_rng(12)
        for _ in range(25):
            n = int(rng.integers(1, 60))
            c = int(rng.integers(2, 6))
            truth = rng.integers(0, c, size=n).tolist()
            preds = rng.integers(0, c, size=n).tolist()
            micro, _, _ = micro_macro_f(confusion_counts(preds, truth, c))
            accuracy = sum(p == t for p, t in zip(preds, truth)) / n
            assert micro == pytest.approx(accuracy)

    def test_matches_sklearn_oracle(self):
        f1_score = pytest.importorskip("sklearn.metrics").f1_score
        rng = np.random.default_rng(77)
        for _ in range(200):
            n = int(rng.integers(1, 50))
            c = int(rng.integers(2, 6))
            truth = rng.integers(0, c, size=n)
            preds = rng.integers(0, c, size=n)
            micro, macro, _ = micro_macro_f(
                confusion_counts(preds.tolist(), truth.tolist(), c))
            sk_micro = f1_score(truth, preds, labels=range(c),
                                average="micro", zero_division=0)
            sk_macro = f1_score(truth, preds, labels=range(c),
                                average="macro", zero_division=0)
            assert micro == pytest.approx(sk_micro, abs=1e-12)
            assert macro == pytest.approx(sk_macro, abs=1e-12)


class TestPercentImprovement:
    def test_published_style_values(self):
        assert percent_improvement(0.919, 0.868) == 5.88
        assert percent_improvement(0.757, 0.865) == -12.49
        assert percent_improvement(0.877, 0.681) == 28.78

    def test_identity_is_zero(self):
        for b in (0.001, 0.5, 1.0, 123.0):
            assert percent_improvement(b, b) == 0.0

    def test_zero_baseline_rejected(self):
        with pytest.raises(ZeroBaseline):
            percent_improvement(0.5, 0.0)
        with pytest.raises(ZeroBaseline):
            percent_improvement(0.5, -1.0)


class TestPairedTTest:
    def test_identical_lists(self):
        result = paired_t_test([0.8, 0.9, 0.7], [0.8, 0.9, 0.7])
        assert result.t == 0.0
        assert result.p == 1.0
        assert result.zero_variance
        assert result.df == 2

    def test_constant_shift(self):
        a = [0.81, 0.91, 0.71]
        b = [0.80, 0.90, 0.70]
        result = paired_t_test(a, b)
        assert result.zero_variance
        assert result.p == 0.0
        assert math.isinf(result.t) and result.t > 0

    def test_known_critical_value(self):
        # |t| = 2.262 at 9 degrees of freedom sits at the 5% two-tailed line
        assert student_t_two_tailed_p(2.262, 9) == pytest.approx(0.0500,
                                                                 abs=5e-4)

    def test_antisymmetry(self):
        a = [0.8, 0.85, 0.9, 0.75]
        b = [0.7, 0.8, 0.95, 0.75]
        ab = paired_t_test(a, b)
        ba = paired_t_test(b, a)
        assert ab.t == pytest.approx(-ba.t)
        assert ab.p == pytest.approx(ba.p)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            paired_t_test([0.1, 0.2], [0.1])

    def test_needs_two_scores(self):
        with pytest.raises(ValueError):
            paired_t_test([0.5], [0.4])

    def test_simple_t_statistic(self):
        a = [1.0, 2.0, 3.0]
        b = [0.0, 0.0, 0.0]
        result = paired_t_test(a, b)
        # d = a, mean 2, sd 1 -> t = 2 * sqrt(3)
        assert result.t == pytest.approx(2 * math.sqrt(3))

    @pytest.mark.parametrize("t", [0.5, 1.0, 2.262, 3.0])
    @pytest.mark.parametrize("df", [4, 9, 19])
    def test_p_matches_quadrature_oracle(self, t, df):
        integrate = pytest.importorskip("scipy.integrate")
        stats = pytest.importorskip("scipy.stats")
        tail, _ = integrate.quad(lambda x: stats.t.pdf(x, df), t, np.inf)
        assert student_t_two_tailed_p(t, df) == pytest.approx(2 * tail,
                                                              abs=5e-4)


def striped_tokens(n_per_class, num_classes, noise=0):
    """Trivially separable token streams for run_experiment tests."""
    rng = np.random.default_rng(31)
    tokens, labels = [], []
    for cls in range(num_classes):
        for i in range(n_per_class):
            doc = [f"class{cls}word{j}" for j in range(3)]
            doc.extend(f"shared{int(v)}" for v in rng.integers(0, 4,
                                                               size=noise))
            tokens.append(doc)
            labels.append(cls)
    return tokens, labels


class TestRunExperiment:
    def test_fold_arithmetic_and_perfect_scores(self):
        tokens, labels = striped_tokens(20, 4)
        report = run_experiment(tokens, labels, 4, classifier="nb",
                                k_folds=10, seed=7, name="demo")
        assert len(report.fold_micro) == 10
        assert report.micro_f == 1.0 and report.macro_f == 1.0
        assert report.name == "demo"

    def test_deterministic(self):
        tokens, labels = striped_tokens(10, 3, noise=4)
        a = run_experiment(tokens, labels, 3, classifier="svm", k_folds=5,
                           seed=3)
        b = run_experiment(tokens, labels, 3, classifier="svm", k_folds=5,
                           seed=3)
        assert a.fold_micro == b.fold_micro
        assert a.fold_macro == b.fold_macro

    def test_unknown_classifier(self):
        tokens, labels = striped_tokens(5, 2)
        with pytest.raises(ValueError):
            run_experiment(tokens, labels, 2, classifier="forest", k_folds=2)

    def test_length_mismatch(self):
        tokens, labels = striped_tokens(5, 2)
        with pytest.raises(LengthMismatch):
            run_experiment(tokens, labels[:-1], 2, k_folds=2)

    def test_baseline_attachment(self):
        tokens, labels = striped_tokens(10, 2)
        base = run_experiment(tokens, labels, 2, k_folds=5, seed=1,
                              name="base")
        improved = run_experiment(tokens, labels, 2, k_folds=5, seed=1,
                                  name="same", baseline=base)
        assert improved.baseline_name == "base"
        assert improved.micro_improvement_pct == 0.0
        assert improved.macro_improvement_pct == 0.0

    def test_with_baseline_helper(self):
        tokens, labels = striped_tokens(10, 2)
        base = run_experiment(tokens, labels, 2, k_folds=5, name="b")
        report = with_baseline(base, base)
        assert report.micro_improvement_pct == 0.0
