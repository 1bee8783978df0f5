"""Tokenization, stop-word removal and the document representation techniques.

The four techniques build on one another:

* T1 - tokenize, drop stop words, stem.
* T2 - T1, but tokens a tagger recognizes are rewritten ``type:stem``.
* T3 - T1 restricted to tokens found in a noun lexicon.
* T4 - T3 with T2's entity tagging on the survivors.

Noun-lexicon and gazetteer lookups use the surface form (pre-stem); the
emitted token is always the stemmed form.
"""

import re
from enum import Enum
from importlib import resources

from .errors import MissingLexicon, MissingTagger
from .porter import porter_stem

__all__ = [
    "EntityTag",
    "GazetteerTagger",
    "Technique",
    "apply_representation",
    "default_gazetteer_path",
    "default_noun_lexicon_path",
    "default_stopwords_path",
    "load_noun_lexicon",
    "load_stopwords",
    "porter_stem",
    "remove_stopwords",
    "tokenize",
]

# runs of letters/digits; underscore and all punctuation are delimiters
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


class Technique(Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"


class EntityTag(Enum):
    PERSON = "person"
    LOCATION = "location"
    ORGANIZATION = "organization"
    NONE = "none"


def tokenize(raw_text):
    """Split on any non-alphanumeric character and lowercase.

    Empty fragments, pure-digit tokens and single characters are dropped.
    """
    out = []
    for match in _TOKEN_RE.finditer(raw_text.lower()):
        token = match.group()
        if len(token) < 2 or token.isdigit():
            continue
        out.append(token)
    return out


def remove_stopwords(tokens, stoplist):
    return [t for t in tokens if t not in stoplist]


class GazetteerTagger:
    """Surface-form lookup tagger backed by a ``surface<TAB>TYPE`` file."""

    def __init__(self, mapping):
        self._mapping = dict(mapping)

    @classmethod
    def from_file(cls, path):
        mapping = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.rstrip("\n")
                if not line or line.startswith("#"):
                    continue
                try:
                    surface, tag = line.split("\t")
                    mapping[surface.strip().lower()] = EntityTag[tag.strip()]
                except (ValueError, KeyError) as exc:
                    raise ValueError(
                        f"{path}:{lineno}: expected 'surface<TAB>"
                        f"PERSON|LOCATION|ORGANIZATION', got {line!r}"
                    ) from exc
        return cls(mapping)

    def tag(self, token):
        return self._mapping.get(token, EntityTag.NONE)


def load_stopwords(path):
    """One lowercase token per line, UTF-8; '#' lines are comments."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            word = line.strip()
            if word and not word.startswith("#"):
                words.add(word)
    return frozenset(words)


def load_noun_lexicon(path):
    """One surface form per line."""
    return load_stopwords(path)


def _resource(name):
    return resources.files("kbcat.resources").joinpath(name)


def default_stopwords_path():
    return str(_resource("stopwords.txt"))


def default_noun_lexicon_path():
    return str(_resource("nouns.txt"))


def default_gazetteer_path():
    return str(_resource("gazetteer.tsv"))


def _emit(surface, stoplist, tagger):
    """Stem one surviving surface token, tagging it when requested."""
    stemmed = porter_stem(surface)
    if tagger is not None:
        tag = tagger.tag(surface)
        if tag is not EntityTag.NONE:
            return f"{tag.value}:{stemmed}"
    # stemming can recreate a stop word ("having" -> "have"); drop those too
    if stemmed in stoplist:
        return None
    return stemmed


def apply_representation(raw_text, technique, stoplist, tagger=None,
                         noun_lexicon=None):
    """Produce the token stream for one document under a technique.

    ``tagger`` is required for T2/T4 and ``noun_lexicon`` for T3/T4; tagged
    tokens replace their plain form and are rendered ``type:stem`` so they
    become distinct vocabulary entries.
    """
    technique = Technique(technique)
    if technique in (Technique.T2, Technique.T4) and tagger is None:
        raise MissingTagger(f"{technique.value} requires an entity tagger")
    if technique in (Technique.T3, Technique.T4) and noun_lexicon is None:
        raise MissingLexicon(f"{technique.value} requires a noun lexicon")

    surfaces = remove_stopwords(tokenize(raw_text), stoplist)
    if technique in (Technique.T3, Technique.T4):
        surfaces = [s for s in surfaces if s in noun_lexicon]
    use_tagger = tagger if technique in (Technique.T2, Technique.T4) else None

    out = []
    for surface in surfaces:
        token = _emit(surface, stoplist, use_tagger)
        if token is not None:
            out.append(token)
    return out
