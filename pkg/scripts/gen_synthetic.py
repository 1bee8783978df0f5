"""Generate the shipped synthetic corpus, knowledge base, and configs.

Deterministic: a fixed seed produces byte-identical data/ trees. The
corpus is deliberately vocabulary-sparse (few topic words per document)
while the KB's categories and links are class-pure, so enrichment has
real signal to add. Class vocabularies use disjoint consonant alphabets,
which keeps the stemmer from merging words across classes; assertions
below re-check every pool after stemming.

Usage: python scripts/gen_synthetic.py [--root DATA_DIR]
"""

import argparse
import random
from pathlib import Path

from kbcat.porter import porter_stem
from kbcat.textproc import default_stopwords_path, load_stopwords, tokenize

SEED = 7077
CLASSES = ("astronomy", "botany", "finance", "sports")
CONCEPTS_PER_CLASS = 24
WORDS_PER_CONCEPT = 6
DOCS_PER_CLASS = 50

# disjoint consonant alphabets per class keep vocabularies separated
SYLLABLES = {
    "astronomy": [c + v for c in "bdgl" for v in "ao"],
    "botany": [c + v for c in "mnpr" for v in "ei"],
    "finance": [c + v for c in "stvz" for v in "au"],
    "sports": [c + v for c in "fhkw" for v in "oi"],
}

CATEGORIES = {
    "astronomy": ("stellar astrophysics", "orbital telescopes"),
    "botany": ("botanical horticulture", "foliage seedlings"),
    "finance": ("monetary banking", "commodity ledgers"),
    "sports": ("athletic tournaments", "stadium referees"),
}

NOISE_WORDS = ("morning", "window", "coffee", "street", "paper",
               "letter", "friend", "house", "number", "table")


def make_words(rng, cls):
    """Concept word lists for one class, unique after stemming."""
    syllables = SYLLABLES[cls]
    seen = set()
    concepts = []
    while len(concepts) < CONCEPTS_PER_CLASS:
        words = []
        while len(words) < WORDS_PER_CONCEPT:
            word = "".join(rng.choice(syllables) for _ in range(3))
            stem = porter_stem(word)
            if stem in seen:
                continue
            seen.add(stem)
            words.append(word)
        concepts.append(tuple(words))
    return concepts


def check_pools(concepts_by_class, stoplist):
    """All signal pools must stay disjoint after stemming."""
    pools = {}
    for cls in CLASSES:
        tokens = [w for concept in concepts_by_class[cls] for w in concept]
        for phrase in CATEGORIES[cls]:
            tokens.extend(tokenize(phrase))
        pools[cls] = {porter_stem(t) for t in tokens}
    pools["noise"] = {porter_stem(t) for t in NOISE_WORDS}
    names = list(pools)
    for i, a in enumerate(names):
        assert not (pools[a] & stoplist), f"{a} collides with stopwords"
        for b in names[i + 1:]:
            overlap = pools[a] & pools[b]
            assert not overlap, f"{a}/{b} share stems: {overlap}"


def write_corpus(rng, root, concepts_by_class):
    doc_counter = 0
    for cls in CLASSES:
        cls_dir = root / "corpus" / cls
        cls_dir.mkdir(parents=True, exist_ok=True)
        concepts = concepts_by_class[cls]
        for doc_idx in range(DOCS_PER_CLASS):
            primary = rng.randrange(CONCEPTS_PER_CLASS)
            tokens = rng.sample(concepts[primary], 2)
            if rng.random() < 0.3:
                other = rng.randrange(CONCEPTS_PER_CLASS)
                tokens.append(rng.choice(concepts[other]))
            tokens.extend(rng.choice(NOISE_WORDS)
                          for _ in range(rng.randrange(5, 9)))
            tokens.append(f"xq{doc_counter}a")
            tokens.append(f"xq{doc_counter}b")
            doc_counter += 1
            rng.shuffle(tokens)
            sentences = []
            for start in range(0, len(tokens), 6):
                chunk = tokens[start:start + 6]
                sentences.append(chunk[0].capitalize() + " "
                                 + " ".join(chunk[1:]) + ".")
            path = cls_dir / f"doc{doc_idx:03d}.txt"
            path.write_text(" ".join(sentences) + "\n", encoding="utf-8")


def write_kb(rng, root, concepts_by_class):
    rows = []
    for cls in CLASSES:
        concepts = concepts_by_class[cls]
        for i, words in enumerate(concepts):
            headword = words[0]
            title = headword.capitalize()
            if i % 4 == 3:
                title += " (terminology)"
            body_words = list(words) * 2 + list(rng.sample(words, 3))
            rng.shuffle(body_words)
            body = " ".join(body_words)
            links = "|".join(
                concepts[(i + step) % CONCEPTS_PER_CLASS][0].capitalize()
                for step in (1, 2, 3))
            categories = "|".join(CATEGORIES[cls])
            rows.append(f"{cls}_{i:02d}\t{title}\t{categories}\t{links}\t"
                        f"{body}")
    (root / "kb.tsv").write_text("\n".join(rows) + "\n", encoding="utf-8")


CONFIGS = {
    "baseline_nb.cfg": """\
# baseline: no enrichment, multinomial naive bayes
corpus = ../corpus
representation = T1
approach = baseline
classifier = nb
k_folds = 10
seed = 7
""",
    "a4_nb.cfg": """\
# A4 enrichment (titles, categories, links; k = 20), naive bayes
corpus = ../corpus
kb = ../kb.tsv
representation = T1
approach = A4
classifier = nb
k_folds = 10
seed = 7
""",
    "baseline_svm.cfg": """\
# baseline: no enrichment, linear svm
corpus = ../corpus
representation = T1
approach = baseline
classifier = svm
k_folds = 10
seed = 7
svm.C = 1.0
svm.tol = 0.001
""",
    "matrix_nb.cfg": """\
# Table-shaped run: baseline plus two enrichment approaches
corpus = ../corpus
kb = ../kb.tsv
representation = T1
approaches = baseline, A1, A4
classifier = nb
k_folds = 10
seed = 7
""",
}


def write_configs(root):
    cfg_dir = root / "configs"
    cfg_dir.mkdir(parents=True, exist_ok=True)
    for name, text in CONFIGS.items():
        (cfg_dir / name).write_text(text, encoding="utf-8")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--root", default=Path(__file__).parent.parent
                        / "data", type=Path)
    args = parser.parse_args()

    rng = random.Random(SEED)
    stoplist = load_stopwords(default_stopwords_path())
    concepts_by_class = {cls: make_words(rng, cls) for cls in CLASSES}
    check_pools(concepts_by_class, stoplist)
    write_corpus(rng, args.root, concepts_by_class)
    write_kb(rng, args.root, concepts_by_class)
    write_configs(args.root)
    n_docs = len(CLASSES) * DOCS_PER_CLASS
    print(f"wrote {n_docs} documents, "
          f"{len(CLASSES) * CONCEPTS_PER_CLASS} KB articles, "
          f"{len(CONFIGS)} configs under {args.root}")


if __name__ == "__main__":
    main()
