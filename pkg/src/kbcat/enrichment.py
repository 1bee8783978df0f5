"""Knowledge-base enrichment: retrieval of candidate terms, filtering,
cleaning, and the five named approach configurations A1-A5.

An approach queries the article index with the document's token stream,
turns the retrieved articles into candidates (titles, categories and
optionally linked concepts), filters them by relative retrieval score,
cleans each survivor into tokens, and appends those tokens after the
original document tokens.
"""

import re
from dataclasses import dataclass
from enum import Enum

from .errors import ClientUnavailable  # noqa: F401  (re-exported contract)
from .kb import query_top_k
from .porter import porter_stem
from .textproc import remove_stopwords, tokenize

_TRAILING_QUALIFIER_RE = re.compile(r"\s*\([^()]*\)\s*$")
_TAGGED_TOKEN_RE = re.compile(r"^(person|location|organization):")


class Source(Enum):
    TITLE = "title"
    CATEGORY = "category"
    LINK = "link"


@dataclass(frozen=True)
class Candidate:
    source: Source
    text: str
    score: float


@dataclass(frozen=True)
class ApproachConfig:
    """One of the named enrichment approaches.

    ======  ==========================  ===  =====
    name    techniques                  k    links
    ======  ==========================  ===  =====
    A1      E1, E4, E5                  5    no
    A2      E1, E4, E5                  20   no
    A3      E2, E4, E5                  5    yes
    A4      E2, E4, E5                  20   yes
    A5      E1, E2, E4, E5              20   yes
    ======  ==========================  ===  =====
    """

    name: str
    k: int
    include_links: bool
    techniques: frozenset
    filter_tau: float = 0.5

    def __post_init__(self):
        if self.k not in (5, 20):
            raise ValueError(f"k must be 5 or 20, got {self.k}")
        if not 0.0 < self.filter_tau <= 1.0:
            raise ValueError(f"filter_tau must be in (0, 1], got "
                             f"{self.filter_tau}")
        unknown = self.techniques - {"E1", "E2", "E4", "E5"}
        if unknown:
            raise ValueError(f"unknown techniques: {sorted(unknown)}")


_APPROACH_TABLE = {
    "A1": (5, False, frozenset({"E1", "E4", "E5"})),
    "A2": (20, False, frozenset({"E1", "E4", "E5"})),
    "A3": (5, True, frozenset({"E2", "E4", "E5"})),
    "A4": (20, True, frozenset({"E2", "E4", "E5"})),
    "A5": (20, True, frozenset({"E1", "E2", "E4", "E5"})),
}

APPROACH_NAMES = tuple(_APPROACH_TABLE)


def approach_config(name, filter_tau=0.5):
    try:
        k, include_links, techniques = _APPROACH_TABLE[name]
    except KeyError:
        raise ValueError(f"unknown approach {name!r}; expected one of "
                         f"{', '.join(APPROACH_NAMES)}") from None
    return ApproachConfig(name=name, k=k, include_links=include_links,
                          techniques=techniques, filter_tau=filter_tau)


def _retrieve(doc_tokens, index, k, include_links):
    candidates = []
    for scored in query_top_k(index, doc_tokens, k):
        article, score = scored.article, scored.score
        candidates.append(Candidate(Source.TITLE, article.title, score))
        for category in article.categories:
            candidates.append(Candidate(Source.CATEGORY, category, score))
        if include_links:
            for link in article.links:
                candidates.append(Candidate(Source.LINK, link, score))
    return candidates


def enrich_e1(doc_tokens, index, k):
    """Titles and categories of the top-k similar articles."""
    return _retrieve(doc_tokens, index, k, include_links=False)


def enrich_e2(doc_tokens, index, k):
    """As E1, plus the linked concepts of each retrieved article."""
    return _retrieve(doc_tokens, index, k, include_links=True)


class NullEntityClient:
    """Default external-entity client: always empty (no remote service)."""

    def lookup(self, entity):
        return []


class FileEntityClient:
    """Test/demo client backed by an ``entity<TAB>concept`` map file; keys
    are full tagged tokens such as ``location:karachi``."""

    def __init__(self, path):
        self._mapping = {}
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.rstrip("\n")
                if not line or line.startswith("#"):
                    continue
                entity, concept = line.split("\t")
                self._mapping.setdefault(entity, []).append(concept)

    def lookup(self, entity):
        return [Candidate(Source.LINK, concept, 1.0)
                for concept in self._mapping.get(entity, [])]


def filter_e4(candidates, tau):
    """Keep candidates scoring at least ``tau`` times the best score, then
    deduplicate by (source, normalized text) keeping the highest score."""
    if not 0.0 < tau <= 1.0:
        raise ValueError(f"tau must be in (0, 1], got {tau}")
    if not candidates:
        return []
    s_max = max(c.score for c in candidates)
    kept = {}
    order = []
    for cand in candidates:
        if cand.score < tau * s_max:
            continue
        key = (cand.source, cand.text.strip().lower())
        best = kept.get(key)
        if best is None:
            kept[key] = cand
            order.append(key)
        elif cand.score > best.score:
            kept[key] = cand
    return [kept[key] for key in order]


def clean_e5(candidate_text, stoplist, stem_tokens=True):
    """Strip a trailing parenthetical qualifier, then tokenize, drop stop
    words and (optionally) stem."""
    text = _TRAILING_QUALIFIER_RE.sub("", candidate_text)
    tokens = remove_stopwords(tokenize(text), stoplist)
    if stem_tokens:
        tokens = [porter_stem(t) for t in tokens]
    return tokens


def apply_approach(doc_tokens, config, index, stoplist, stem_enrichment=True,
                   entity_client=None):
    """Append an approach's cleaned enrichment tokens to a document.

    The original tokens are returned unchanged as a prefix. ``entity_client``
    is the optional external-entity hook: when set, tagged tokens in the
    document are looked up and the results join the candidate pool.
    """
    candidates = []
    if "E1" in config.techniques:
        candidates.extend(enrich_e1(doc_tokens, index, config.k))
    if "E2" in config.techniques:
        candidates.extend(enrich_e2(doc_tokens, index, config.k))
    if entity_client is not None:
        for token in doc_tokens:
            if _TAGGED_TOKEN_RE.match(token):
                candidates.extend(entity_client.lookup(token))
    if "E4" in config.techniques:
        candidates = filter_e4(candidates, config.filter_tau)

    out = list(doc_tokens)
    for cand in candidates:
        if "E5" in config.techniques:
            out.extend(clean_e5(cand.text, stoplist, stem_enrichment))
        else:
            out.extend(tokenize(cand.text))
    return out
