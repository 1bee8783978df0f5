"""Multinomial Naive Bayes with Laplace smoothing, in log space.

Trained from count vectors: log_prior_c = ln(n_c / n) and
log_likelihood[c, t] = ln((count_{c,t} + alpha) / (total_c + alpha * V)).
Prediction scores a document as log_prior_c + sum_t tf_t * log_likelihood[c, t]
and takes the argmax, breaking ties toward the lowest class index.
"""

from dataclasses import dataclass

import numpy as np

from .errors import EmptyClass


@dataclass(frozen=True)
class NbModel:
    log_prior: np.ndarray       # (num_classes,)
    log_likelihood: np.ndarray  # (num_classes, vocab_size)
    class_token_totals: np.ndarray
    alpha: float

    @property
    def num_classes(self):
        return len(self.log_prior)

    @property
    def vocab_size(self):
        return self.log_likelihood.shape[1]


def train_nb(vectors, labels, num_classes, vocab_size, alpha=1.0):
    """Fit from count SparseVectors and integer class labels."""
    if alpha <= 0.0:
        raise ValueError(f"alpha must be > 0, got {alpha}")
    if vocab_size < 1:
        raise ValueError(f"vocab_size must be >= 1, got {vocab_size}")
    if len(vectors) != len(labels):
        raise ValueError("vectors and labels differ in length")

    doc_counts = np.zeros(num_classes, dtype=np.int64)
    term_counts = np.zeros((num_classes, vocab_size), dtype=np.float64)
    for vec, label in zip(vectors, labels):
        doc_counts[label] += 1
        if len(vec):
            term_counts[label, vec.indices] += vec.values
    if np.any(doc_counts == 0):
        empty = np.nonzero(doc_counts == 0)[0].tolist()
        raise EmptyClass(f"classes with no training documents: {empty}")

    totals = term_counts.sum(axis=1)
    log_prior = np.log(doc_counts / doc_counts.sum())
    log_likelihood = np.log((term_counts + alpha)
                            / (totals[:, None] + alpha * vocab_size))

    model = NbModel(log_prior=log_prior, log_likelihood=log_likelihood,
                    class_token_totals=totals, alpha=alpha)
    _check_normalization(model)
    return model


def _check_normalization(model, tol=1e-9):
    prior_sum = float(np.exp(model.log_prior).sum())
    if abs(prior_sum - 1.0) > tol:
        raise AssertionError(f"class priors sum to {prior_sum}, not 1")
    likelihood_sums = np.exp(model.log_likelihood).sum(axis=1)
    worst = float(np.abs(likelihood_sums - 1.0).max())
    if worst > tol:
        raise AssertionError(f"per-class likelihoods deviate from 1 by {worst}")


def predict_nb(model, vec):
    """Return (predicted class, per-class log scores)."""
    scores = model.log_prior.copy()
    if len(vec):
        scores += model.log_likelihood[:, vec.indices] @ vec.values
    return int(np.argmax(scores)), scores
