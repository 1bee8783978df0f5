"""Stratified cross-validation, micro/macro F-measure, paired t-test.

Aggregate scores are the mean of per-fold scores; per-class precision,
recall and F come from confusion counts pooled across all folds (each
document is predicted exactly once during cross-validation).
"""

import csv
import math
import random
from dataclasses import dataclass, replace

import numpy as np

from .errors import ClassTooSmall, LengthMismatch, ZeroBaseline
from .features import build_vocab, vectorize_count, vectorize_tfidf
from .naive_bayes import predict_nb, train_nb
from .svm import predict_svm, train_ovr

CLASSIFIERS = ("nb", "svm")


@dataclass(frozen=True)
class FoldPlan:
    folds: tuple      # k tuples of document indices
    n: int

    @property
    def k(self):
        return len(self.folds)

    def train_indices(self, fold):
        held_out = set(self.folds[fold])
        return tuple(i for i in range(self.n) if i not in held_out)


@dataclass(frozen=True)
class TTestResult:
    t: float
    df: int
    p: float
    zero_variance: bool = False


@dataclass(frozen=True)
class EvalReport:
    name: str
    classifier: str
    k_folds: int
    seed: int
    fold_micro: tuple
    fold_macro: tuple
    micro_f: float
    macro_f: float
    per_class: tuple  # (precision, recall, f) per class index
    baseline_name: str | None = None
    micro_improvement_pct: float | None = None
    macro_improvement_pct: float | None = None


def stratified_folds(labels, k, seed):
    """Shuffle each class with one seeded RNG, deal round-robin into folds."""
    if k < 2:
        raise ValueError("k must be at least 2")
    by_class = {}
    for idx, label in enumerate(labels):
        by_class.setdefault(label, []).append(idx)
    for label, members in sorted(by_class.items()):
        if len(members) < k:
            raise ClassTooSmall(
                f"class {label} has {len(members)} members, needs {k}")

    rng = random.Random(seed)
    folds = [[] for _ in range(k)]
    pointer = 0
    for label in sorted(by_class):
        members = by_class[label]
        rng.shuffle(members)
        for idx in members:
            folds[pointer % k].append(idx)
            pointer += 1
    return FoldPlan(folds=tuple(tuple(sorted(f)) for f in folds),
                    n=len(labels))


def confusion_counts(predictions, truth, num_classes):
    """Per-class (tp, fp, fn) as an int64 array of shape (num_classes, 3)."""
    if len(predictions) != len(truth):
        raise LengthMismatch(
            f"{len(predictions)} predictions for {len(truth)} labels")
    counts = np.zeros((num_classes, 3), dtype=np.int64)
    for pred, gold in zip(predictions, truth):
        if not (0 <= pred < num_classes and 0 <= gold < num_classes):
            raise ValueError("label outside [0, num_classes)")
        if pred == gold:
            counts[gold, 0] += 1
        else:
            counts[pred, 1] += 1
            counts[gold, 2] += 1
    return counts


def _prf(tp, fp, fn):
    precision = tp / (tp + fp) if tp + fp > 0 else 0.0
    recall = tp / (tp + fn) if tp + fn > 0 else 0.0
    if precision + recall > 0:
        f = 2 * precision * recall / (precision + recall)
    else:
        f = 0.0
    return precision, recall, f


def micro_macro_f(counts):
    """Return (micro-F, macro-F, per-class (P, R, F) tuples)."""
    per_class = tuple(_prf(int(tp), int(fp), int(fn))
                      for tp, fp, fn in counts)
    macro = sum(prf[2] for prf in per_class) / len(per_class)
    pooled = counts.sum(axis=0)
    micro = _prf(int(pooled[0]), int(pooled[1]), int(pooled[2]))[2]
    return micro, macro, per_class


def percent_improvement(value, baseline):
    """Signed percent change over the baseline, rounded to 2 decimals."""
    if baseline <= 0:
        raise ZeroBaseline(f"baseline must be positive, got {baseline}")
    return round(100.0 * (value - baseline) / baseline, 2)


def _t_log_norm(df):
    return (math.lgamma((df + 1) / 2.0) - math.lgamma(df / 2.0)
            - 0.5 * math.log(df * math.pi))


def t_density(x, df, _log_norm=None):
    log_norm = _t_log_norm(df) if _log_norm is None else _log_norm
    return math.exp(log_norm - ((df + 1) / 2.0) * math.log1p(x * x / df))


def _simpson(f, a, fa, b, fb):
    m = (a + b) / 2.0
    fm = f(m)
    return m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive_simpson(f, a, fa, b, fb, whole, m, fm, eps, depth):
    lm, flm, left = _simpson(f, a, fa, m, fm)
    rm, frm, right = _simpson(f, m, fm, b, fb)
    delta = left + right - whole
    if depth <= 0 or abs(delta) <= 15.0 * eps:
        return left + right + delta / 15.0
    return (_adaptive_simpson(f, a, fa, m, fm, left, lm, flm, eps / 2.0,
                              depth - 1)
            + _adaptive_simpson(f, m, fm, b, fb, right, rm, frm, eps / 2.0,
                                depth - 1))


def integrate_density(f, a, b, eps=1e-8):
    """Adaptive Simpson quadrature of f over [a, b]."""
    if a == b:
        return 0.0
    fa, fb = f(a), f(b)
    m, fm, whole = _simpson(f, a, fa, b, fb)
    return _adaptive_simpson(f, a, fa, b, fb, whole, m, fm, eps, 50)


def student_t_two_tailed_p(t, df, eps=1e-8):
    """P(|T| >= |t|) for Student's t with df degrees of freedom."""
    abs_t = abs(t)
    if abs_t == 0.0:
        return 1.0
    log_norm = _t_log_norm(df)
    central = integrate_density(lambda x: t_density(x, df, log_norm),
                                0.0, abs_t, eps)
    p = 1.0 - 2.0 * central
    return min(max(p, 0.0), 1.0)


def paired_t_test(a, b):
    """Paired two-tailed Student's t-test on per-fold scores."""
    if len(a) != len(b):
        raise LengthMismatch(f"score lists of length {len(a)} and {len(b)}")
    k = len(a)
    if k < 2:
        raise ValueError("need at least 2 paired scores")
    diffs = [x - y for x, y in zip(a, b)]
    mean = sum(diffs) / k
    var = sum((d - mean) ** 2 for d in diffs) / (k - 1)
    if var == 0.0:
        # all differences identical: significance is degenerate by contract
        if mean == 0.0:
            return TTestResult(t=0.0, df=k - 1, p=1.0, zero_variance=True)
        return TTestResult(t=math.copysign(math.inf, mean), df=k - 1,
                           p=0.0, zero_variance=True)
    t = mean * math.sqrt(k) / math.sqrt(var)
    return TTestResult(t=t, df=k - 1, p=student_t_two_tailed_p(t, k - 1))


def _fold_seed(seed, fold):
    # distinct permutation stream per fold, stable across runs
    return seed * 1000003 + fold


def run_experiment(tokens_by_doc, labels, num_classes, classifier="nb",
                   k_folds=10, seed=7, nb_alpha=1.0, svm_c=1.0, svm_tol=1e-3,
                   svm_max_epochs=1000, name="experiment", baseline=None):
    """Cross-validate prepared token streams and return an EvalReport.

    tokens_by_doc must already have representation and enrichment applied.
    The vocabulary is rebuilt per fold from training documents only. When a
    baseline report is given, improvement percentages are attached.
    """
    if classifier not in CLASSIFIERS:
        raise ValueError(f"unknown classifier {classifier!r}")
    if len(tokens_by_doc) != len(labels):
        raise LengthMismatch(
            f"{len(tokens_by_doc)} documents for {len(labels)} labels")

    plan = stratified_folds(labels, k_folds, seed)
    fold_micro = []
    fold_macro = []
    pooled = np.zeros((num_classes, 3), dtype=np.int64)

    for fold in range(plan.k):
        train_idx = plan.train_indices(fold)
        test_idx = plan.folds[fold]
        train_labels = [labels[i] for i in train_idx]
        test_labels = [labels[i] for i in test_idx]
        vocab = build_vocab([tokens_by_doc[i] for i in train_idx])

        if classifier == "nb":
            train_vecs = [vectorize_count(tokens_by_doc[i], vocab)
                          for i in train_idx]
            model = train_nb(train_vecs, train_labels, num_classes,
                             len(vocab), alpha=nb_alpha)
            predictions = [predict_nb(model,
                                      vectorize_count(tokens_by_doc[i],
                                                      vocab))[0]
                           for i in test_idx]
        else:
            train_vecs = [vectorize_tfidf(tokens_by_doc[i], vocab)
                          for i in train_idx]
            model = train_ovr(train_vecs, train_labels, num_classes,
                              len(vocab), c=svm_c, tol=svm_tol,
                              max_epochs=svm_max_epochs,
                              seed=_fold_seed(seed, fold))
            predictions = [predict_svm(model,
                                       vectorize_tfidf(tokens_by_doc[i],
                                                       vocab))[0]
                           for i in test_idx]

        counts = confusion_counts(predictions, test_labels, num_classes)
        micro, macro, _ = micro_macro_f(counts)
        fold_micro.append(micro)
        fold_macro.append(macro)
        pooled += counts

    _, _, per_class = micro_macro_f(pooled)
    report = EvalReport(
        name=name, classifier=classifier, k_folds=k_folds, seed=seed,
        fold_micro=tuple(fold_micro), fold_macro=tuple(fold_macro),
        micro_f=float(np.mean(fold_micro)),
        macro_f=float(np.mean(fold_macro)),
        per_class=per_class)
    if baseline is not None:
        report = with_baseline(report, baseline)
    return report


def with_baseline(report, baseline):
    """Attach percent improvement over the baseline report."""
    return replace(
        report,
        baseline_name=baseline.name,
        micro_improvement_pct=percent_improvement(report.micro_f,
                                                  baseline.micro_f),
        macro_improvement_pct=percent_improvement(report.macro_f,
                                                  baseline.macro_f))


def _fmt_improvement(value):
    return "" if value is None else f"{value:.2f}"


def write_report_csv(path, reports):
    """Table-shaped summary, one row per report."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["enrichment", "micro", "macro",
                         "micro_improvement_pct", "macro_improvement_pct"])
        for report in reports:
            writer.writerow([report.name,
                             f"{report.micro_f:.6f}",
                             f"{report.macro_f:.6f}",
                             _fmt_improvement(report.micro_improvement_pct),
                             _fmt_improvement(report.macro_improvement_pct)])


def write_folds_csv(path, reports):
    """Per-fold scores, one row per (report, fold)."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["enrichment", "fold", "micro", "macro"])
        for report in reports:
            for fold, (micro, macro) in enumerate(
                    zip(report.fold_micro, report.fold_macro)):
                writer.writerow([report.name, str(fold),
                                 f"{micro:.6f}", f"{macro:.6f}"])
