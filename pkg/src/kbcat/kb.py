"""Local knowledge base: article records plus an inverted TF-IDF index.

Articles live in a line-delimited TSV file, one per line::

    id<TAB>title<TAB>categories<TAB>links<TAB>body

where ``categories`` and ``links`` are ``|``-separated lists (empty string
for an empty list). The index scores queries by cosine similarity over
TF-IDF vectors with tf = raw count, idf = ln(N/df) and L2 normalization.
"""

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import DuplicateArticleId, EmptyKb, KbFormatError

_FIELD_COUNT = 5


@dataclass(frozen=True)
class KbArticle:
    id: str
    title: str
    body: str
    categories: tuple = field(default_factory=tuple)
    links: tuple = field(default_factory=tuple)


@dataclass(frozen=True)
class ScoredArticle:
    article: KbArticle
    score: float


def _split_list(text):
    return tuple(part for part in text.split("|") if part) if text else ()


def load_kb(path):
    """Parse a KB TSV file into a list of articles."""
    articles = []
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) != _FIELD_COUNT:
                raise KbFormatError(
                    f"{path}:{lineno}: expected {_FIELD_COUNT} tab-separated "
                    f"fields, got {len(fields)}")
            art_id, title, categories, links, body = fields
            if not title:
                raise KbFormatError(f"{path}:{lineno}: empty title")
            if art_id in seen:
                raise DuplicateArticleId(f"{path}:{lineno}: duplicate id "
                                         f"{art_id!r}")
            seen.add(art_id)
            articles.append(KbArticle(id=art_id, title=title, body=body,
                                      categories=_split_list(categories),
                                      links=_split_list(links)))
    if not articles:
        raise EmptyKb(f"no articles in {path}")
    return articles


class KbIndex:
    """Immutable inverted index over a fixed article list.

    ``postings`` maps term -> (article ordinals, term frequencies);
    ``idf`` maps term -> ln(N/df); ``doc_norms`` holds each article's
    TF-IDF L2 norm (0.0 when every indexed term occurs in all articles).
    """

    def __init__(self, articles, postings, idf, doc_norms):
        self.articles = tuple(articles)
        self.postings = postings
        self.idf = idf
        self.doc_norms = doc_norms

    def __len__(self):
        return len(self.articles)


def build_index(articles, tokens_fn):
    """Index title + body of every article with the supplied T1 pipeline.

    ``tokens_fn`` maps raw text to the processed token list and must be the
    same pipeline used on query documents.
    """
    if not articles:
        raise EmptyKb("cannot index an empty article list")
    ids = [a.id for a in articles]
    if len(set(ids)) != len(ids):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise DuplicateArticleId(f"duplicate article ids: {dupes}")

    n = len(articles)
    term_counts = []
    raw_postings = {}
    for ordinal, article in enumerate(articles):
        counts = Counter(tokens_fn(article.title + " " + article.body))
        term_counts.append(counts)
        for term, tf in counts.items():
            raw_postings.setdefault(term, []).append((ordinal, tf))

    idf = {term: math.log(n / len(plist))
           for term, plist in raw_postings.items()}
    postings = {
        term: (np.array([o for o, _ in plist], dtype=np.int32),
               np.array([tf for _, tf in plist], dtype=np.float64))
        for term, plist in raw_postings.items()
    }
    doc_norms = np.zeros(n, dtype=np.float64)
    for ordinal, counts in enumerate(term_counts):
        doc_norms[ordinal] = math.sqrt(
            sum((tf * idf[term]) ** 2 for term, tf in counts.items()))
    return KbIndex(articles, postings, idf, doc_norms)


def query_top_k(index, query_tokens, k):
    """Top-k articles by cosine similarity; zero-scored articles excluded,
    ties broken by ascending article id."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    query_counts = Counter(query_tokens)
    q_norm_sq = 0.0
    dots = np.zeros(len(index.articles), dtype=np.float64)
    for term, tf in query_counts.items():
        idf = index.idf.get(term)
        if idf is None or idf == 0.0:
            continue
        weight = tf * idf
        q_norm_sq += weight * weight
        ordinals, tfs = index.postings[term]
        dots[ordinals] += weight * idf * tfs
    if q_norm_sq == 0.0:
        return []
    q_norm = math.sqrt(q_norm_sq)

    matched = np.nonzero(dots > 0.0)[0]
    scored = []
    for ordinal in matched:
        article = index.articles[ordinal]
        score = dots[ordinal] / (q_norm * index.doc_norms[ordinal])
        scored.append(ScoredArticle(article=article, score=min(score, 1.0)))
    scored.sort(key=lambda sa: (-sa.score, sa.article.id))
    return scored[:k]


def index_stats(index):
    """Summary counts for diagnostics and the CLI's KB check."""
    n_postings = sum(len(ordinals) for ordinals, _ in index.postings.values())
    return {
        "articles": len(index.articles),
        "terms": len(index.postings),
        "postings": n_postings,
        "articles_with_empty_vector": int(np.sum(index.doc_norms == 0.0)),
    }
