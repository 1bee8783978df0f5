"""Vocabulary construction and sparse count / TF-IDF vectors.

The vocabulary is always built from training-fold token lists only; test
documents are vectorized against it with out-of-vocabulary tokens dropped.
Term ids are assigned in lexicographic term order, so identical inputs
always produce identical ids.
"""

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import EmptyVocabulary


@dataclass(frozen=True)
class Vocabulary:
    term_to_id: dict
    df: np.ndarray          # document frequency per term id
    n_docs: int

    def __len__(self):
        return len(self.term_to_id)


@dataclass(frozen=True)
class SparseVector:
    """Strictly increasing term ids with finite non-zero weights."""

    indices: np.ndarray     # int32
    values: np.ndarray      # float64

    def __len__(self):
        return len(self.indices)


_EMPTY = SparseVector(indices=np.empty(0, dtype=np.int32),
                      values=np.empty(0, dtype=np.float64))


def build_vocab(token_lists, min_df=1):
    """Count document frequencies and keep terms with df >= min_df."""
    if min_df < 1:
        raise ValueError(f"min_df must be >= 1, got {min_df}")
    df_counts = Counter()
    n_docs = 0
    for tokens in token_lists:
        n_docs += 1
        df_counts.update(set(tokens))
    terms = sorted(t for t, df in df_counts.items() if df >= min_df)
    if not terms:
        raise EmptyVocabulary(
            f"no term reaches min_df={min_df} over {n_docs} documents")
    term_to_id = {term: i for i, term in enumerate(terms)}
    df = np.array([df_counts[term] for term in terms], dtype=np.int64)
    return Vocabulary(term_to_id=term_to_id, df=df, n_docs=n_docs)


def vectorize_count(tokens, vocab):
    """Raw term-frequency vector; out-of-vocabulary tokens are dropped."""
    counts = Counter(tokens)
    pairs = sorted((vocab.term_to_id[t], float(tf))
                   for t, tf in counts.items() if t in vocab.term_to_id)
    if not pairs:
        return _EMPTY
    return SparseVector(
        indices=np.array([i for i, _ in pairs], dtype=np.int32),
        values=np.array([v for _, v in pairs], dtype=np.float64))


def vectorize_tfidf(tokens, vocab):
    """L2-normalized tf * ln(N/df) vector; terms present in every training
    document get weight 0 and drop out."""
    counts = vectorize_count(tokens, vocab)
    if len(counts) == 0:
        return _EMPTY
    idf = np.log(vocab.n_docs / vocab.df[counts.indices])
    weights = counts.values * idf
    nonzero = weights != 0.0
    if not np.any(nonzero):
        return _EMPTY
    indices = counts.indices[nonzero]
    weights = weights[nonzero]
    norm = math.sqrt(float(np.dot(weights, weights)))
    return SparseVector(indices=indices, values=weights / norm)


def stack_csr(vectors, n_features):
    """Concatenate sparse vectors into CSR arrays (data, indices, indptr)."""
    indptr = np.zeros(len(vectors) + 1, dtype=np.int64)
    for i, vec in enumerate(vectors):
        indptr[i + 1] = indptr[i] + len(vec)
    nnz = int(indptr[-1])
    data = np.empty(nnz, dtype=np.float64)
    indices = np.empty(nnz, dtype=np.int32)
    for i, vec in enumerate(vectors):
        start, stop = indptr[i], indptr[i + 1]
        data[start:stop] = vec.values
        indices[start:stop] = vec.indices
    return data, indices, indptr, n_features
