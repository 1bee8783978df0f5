"""Knowledge-base text categorization toolkit.

Pipeline: document representations (T1-T4), knowledge-base enrichment
(E1-E5 composed as approaches A1-A5) against a local TF-IDF indexed
article store, Naive Bayes and linear SVM classifiers, and stratified
k-fold evaluation with micro/macro F-measure and paired t-tests.
"""

from .corpus import Document, LabeledCorpus, corpus_stats, load_corpus
from .enrichment import (ApproachConfig, Candidate, FileEntityClient,
                         NullEntityClient, Source, apply_approach,
                         approach_config, clean_e5, enrich_e1, enrich_e2,
                         filter_e4)
from .errors import KbcatError
from .evaluation import (EvalReport, FoldPlan, TTestResult, confusion_counts,
                         micro_macro_f, paired_t_test, percent_improvement,
                         run_experiment, stratified_folds, with_baseline,
                         write_folds_csv, write_report_csv)
from .features import (SparseVector, Vocabulary, build_vocab, stack_csr,
                       vectorize_count, vectorize_tfidf)
from .kb import (KbArticle, KbIndex, ScoredArticle, build_index, index_stats,
                 load_kb, query_top_k)
from .kernels import backend_name
from .naive_bayes import NbModel, predict_nb, train_nb
from .porter import porter_stem
from .svm import (BinarySvm, SvmModel, decision_values, predict_svm,
                  train_binary_svm, train_ovr)
from .textproc import (EntityTag, GazetteerTagger, Technique,
                       apply_representation, load_noun_lexicon,
                       load_stopwords, remove_stopwords, tokenize)

__version__ = "0.1.0"

__all__ = [
    "ApproachConfig", "BinarySvm", "Candidate", "Document", "EntityTag",
    "EvalReport", "FileEntityClient", "FoldPlan", "GazetteerTagger",
    "KbArticle", "KbIndex", "KbcatError", "LabeledCorpus", "NbModel",
    "NullEntityClient", "ScoredArticle", "Source", "SparseVector",
    "SvmModel", "Technique", "TTestResult", "Vocabulary",
    "apply_approach", "apply_representation", "approach_config",
    "backend_name", "build_index", "build_vocab", "clean_e5",
    "confusion_counts", "corpus_stats", "decision_values", "enrich_e1",
    "enrich_e2", "filter_e4", "index_stats", "load_corpus", "load_kb",
    "load_noun_lexicon", "load_stopwords", "micro_macro_f", "paired_t_test",
    "percent_improvement", "porter_stem", "predict_nb", "predict_svm",
    "query_top_k", "remove_stopwords", "run_experiment", "stack_csr",
    "stratified_folds", "tokenize", "train_binary_svm", "train_nb",
    "train_ovr", "vectorize_count", "vectorize_tfidf", "with_baseline",
    "write_folds_csv", "write_report_csv",
]
