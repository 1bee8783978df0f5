"""Linear SVM trained by dual coordinate descent, one-vs-rest multiclass.

Solves min_w 1/2 ||w||^2 + C sum_i max(0, 1 - y_i w.x_i), no bias term.
The coordinate order is a seeded random permutation per epoch, so training
is bit-reproducible for a given seed.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DegenerateLabels, EmptyClass
from .features import stack_csr


@dataclass(frozen=True)
class BinarySvm:
    w: np.ndarray            # dense weights over vocabulary ids
    c: float
    tol: float
    alpha: np.ndarray        # dual variables, training diagnostics
    epochs: int
    violation: float         # max projected-gradient violation, last epoch
    converged: bool
    dual_trace: tuple | None = None


@dataclass(frozen=True)
class SvmModel:
    machines: tuple          # one BinarySvm per class, class index order
    num_classes: int
    num_features: int

    @property
    def weights(self):
        """Class-by-feature weight matrix."""
        return np.stack([m.w for m in self.machines])


def train_binary_svm(vectors, y, num_features, c=1.0, tol=1e-3,
                     max_epochs=1000, seed=0, verify=False):
    """Train one binary machine on labels in {-1, +1}.

    verify=True records the dual objective each epoch and asserts it never
    decreases (slower; meant for tests and debugging).
    """
    y_arr = np.asarray(y, dtype=np.float64)
    if y_arr.ndim != 1 or len(y_arr) != len(vectors):
        raise ValueError("y must be one label per vector")
    if not np.all(np.isin(y_arr, (-1.0, 1.0))):
        raise ValueError("binary labels must be -1 or +1")
    if len(set(y_arr.tolist())) < 2:
        raise DegenerateLabels("all training labels are identical")
    if c <= 0:
        raise ValueError("c must be positive")

    data, indices, indptr, _ = stack_csr(vectors, num_features)
    w, alpha, epochs, violation, trace = kernels.dcd_train(
        data, indices, indptr, y_arr, num_features, float(c), float(tol),
        int(max_epochs), seed & 0xFFFFFFFFFFFFFFFF, record_dual=verify)

    if verify and trace:
        for prev, cur in zip(trace, trace[1:]):
            slack = 1e-9 * max(1.0, abs(prev))
            assert cur >= prev - slack, "dual objective decreased"

    return BinarySvm(w=w, c=float(c), tol=float(tol), alpha=alpha,
                     epochs=epochs, violation=violation,
                     converged=violation < tol,
                     dual_trace=tuple(trace) if trace else None)


def train_ovr(vectors, labels, num_classes, num_features, c=1.0, tol=1e-3,
              max_epochs=1000, seed=0, verify=False):
    """One-vs-rest: train one binary machine per class index."""
    labels_arr = np.asarray(labels, dtype=np.int64)
    counts = np.bincount(labels_arr, minlength=num_classes)
    for cls in range(num_classes):
        if counts[cls] == 0:
            raise EmptyClass(f"class {cls} has no training examples")

    machines = []
    for cls in range(num_classes):
        y = np.where(labels_arr == cls, 1.0, -1.0)
        machines.append(train_binary_svm(
            vectors, y, num_features, c=c, tol=tol, max_epochs=max_epochs,
            seed=seed + cls, verify=verify))
    return SvmModel(machines=tuple(machines), num_classes=num_classes,
                    num_features=num_features)


def decision_values(model, vec):
    """Per-class decision values w_c . x."""
    scores = np.zeros(model.num_classes, dtype=np.float64)
    if len(vec) == 0:
        return scores
    for cls, machine in enumerate(model.machines):
        scores[cls] = machine.w[vec.indices] @ vec.values
    return scores


def predict_svm(model, vec):
    """Return (class index, decision values); ties go to the lowest index."""
    scores = decision_values(model, vec)
    return int(np.argmax(scores)), scores
