"""Command-line front end.

Commands: run (one experiment from a config file), matrix (baseline plus
enrichment approaches in one table), compare (paired t-test between two
folds.csv files), build-kb-check (validate a KB file and print index
stats). Every failure exits 1 with a single CODE: message line on stderr.
"""

import argparse
import csv
import sys
from dataclasses import replace
from pathlib import Path

from .config import load_config
from .corpus import load_corpus
from .enrichment import apply_approach, approach_config
from .errors import (ConfigError, FoldCountMismatch, KbcatError,
                     MatrixNoBaseline)
from .evaluation import (paired_t_test, percent_improvement, run_experiment,
                         write_folds_csv, write_report_csv)
from .kb import build_index, index_stats, load_kb
from .textproc import (GazetteerTagger, Technique, apply_representation,
                       default_gazetteer_path, default_noun_lexicon_path,
                       default_stopwords_path, load_noun_lexicon,
                       load_stopwords)


class _Parser(argparse.ArgumentParser):
    # argparse prints usage plus an error line; the CLI contract is a
    # single line, so route parse errors through the normal handler
    def error(self, message):
        raise ConfigError(message)


def _load_resources(cfg):
    stoplist = load_stopwords(cfg.stopwords or default_stopwords_path())
    noun_lexicon = load_noun_lexicon(cfg.nouns or default_noun_lexicon_path())
    tagger = GazetteerTagger.from_file(cfg.gazetteer
                                       or default_gazetteer_path())
    return stoplist, noun_lexicon, tagger


def _kb_tokens(stoplist):
    def tokens_fn(text):
        return apply_representation(text, Technique.T1, stoplist)
    return tokens_fn


def prepare_tokens(cfg, approach_name):
    """Load corpus and produce (tokens per doc, labels, categories).

    Applies the configured representation, then the enrichment approach
    when approach_name is not "baseline". Enrichment only depends on the
    fixed KB, so tokens are computed once, outside the fold loop.
    """
    corpus = load_corpus(cfg.corpus, strip_headers=cfg.strip_headers)
    stoplist, noun_lexicon, tagger = _load_resources(cfg)
    technique = Technique[cfg.representation]
    tokens_by_doc = [
        apply_representation(doc.raw_text, technique, stoplist,
                             tagger=tagger, noun_lexicon=noun_lexicon)
        for doc in corpus.documents]

    if approach_name != "baseline":
        articles = load_kb(cfg.kb)
        index = build_index(articles, _kb_tokens(stoplist))
        approach = approach_config(approach_name, filter_tau=cfg.filter_tau)
        tokens_by_doc = [
            apply_approach(tokens, approach, index, stoplist,
                           stem_enrichment=cfg.stem_enrichment)
            for tokens in tokens_by_doc]

    return tokens_by_doc, corpus.label_indices(), corpus.categories


def run_one(cfg, approach_name, baseline_report=None):
    """Run one cross-validated experiment for a single approach."""
    tokens_by_doc, labels, categories = prepare_tokens(cfg, approach_name)
    return run_experiment(
        tokens_by_doc, labels, len(categories), classifier=cfg.classifier,
        k_folds=cfg.k_folds, seed=cfg.seed, nb_alpha=cfg.nb_alpha,
        svm_c=cfg.svm_c, svm_tol=cfg.svm_tol,
        svm_max_epochs=cfg.svm_max_epochs, name=approach_name,
        baseline=baseline_report)


def read_report_csv(path):
    """Rows of a report.csv as (name, micro, macro) tuples."""
    with open(path, encoding="utf-8", newline="") as handle:
        rows = list(csv.reader(handle))
    if not rows or rows[0][:3] != ["enrichment", "micro", "macro"]:
        raise ConfigError(f"{path} is not a report.csv")
    return [(row[0], float(row[1]), float(row[2])) for row in rows[1:]]


def read_folds_csv(path):
    """Micro and macro per-fold series from a single-experiment folds.csv."""
    with open(path, encoding="utf-8", newline="") as handle:
        rows = list(csv.reader(handle))
    if not rows or rows[0] != ["enrichment", "fold", "micro", "macro"]:
        raise ConfigError(f"{path} is not a folds.csv")
    names = {row[0] for row in rows[1:]}
    if len(names) != 1:
        raise ConfigError(
            f"{path} must hold exactly one experiment, found {len(names)}")
    micro = [float(row[2]) for row in rows[1:]]
    macro = [float(row[3]) for row in rows[1:]]
    return micro, macro


def _out_paths(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out / "report.csv", out / "folds.csv"


def cmd_run(args):
    cfg = load_config(args.config)
    if args.seed is not None:
        cfg.seed = args.seed
    report = run_one(cfg, cfg.approach)
    if args.baseline:
        base_rows = read_report_csv(args.baseline)
        if not base_rows:
            raise ConfigError(f"{args.baseline} has no data rows")
        base_name, base_micro, base_macro = base_rows[0]
        report = replace(
            report, baseline_name=base_name,
            micro_improvement_pct=percent_improvement(report.micro_f,
                                                      base_micro),
            macro_improvement_pct=percent_improvement(report.macro_f,
                                                      base_macro))
    report_path, folds_path = _out_paths(args.out)
    write_report_csv(report_path, [report])
    write_folds_csv(folds_path, [report])
    print(f"{report.name}: micro={report.micro_f:.6f} "
          f"macro={report.macro_f:.6f} ({report_path})")
    return 0


def cmd_matrix(args):
    cfg = load_config(args.config)
    if args.seed is not None:
        cfg.seed = args.seed
    if not cfg.approaches:
        raise ConfigError("matrix requires an 'approaches' list in config")
    ordered = []
    for name in cfg.approaches:
        if name in ordered:
            print(f"WARNING: duplicate approach {name} ignored",
                  file=sys.stderr)
            continue
        ordered.append(name)
    if "baseline" not in ordered:
        raise MatrixNoBaseline("approaches list must include baseline")

    reports = {name: run_one(cfg, name) for name in ordered}
    baseline = reports["baseline"]
    rows = []
    for name in ordered:
        report = reports[name]
        if name != "baseline":
            report = replace(
                report, baseline_name="baseline",
                micro_improvement_pct=percent_improvement(
                    report.micro_f, baseline.micro_f),
                macro_improvement_pct=percent_improvement(
                    report.macro_f, baseline.macro_f))
        rows.append(report)

    report_path, folds_path = _out_paths(args.out)
    write_report_csv(report_path, rows)
    write_folds_csv(folds_path, rows)
    for report in rows:
        print(f"{report.name}: micro={report.micro_f:.6f} "
              f"macro={report.macro_f:.6f}")
    print(f"wrote {report_path} and {folds_path}")
    return 0


def cmd_compare(args):
    micro_a, macro_a = read_folds_csv(args.folds_a)
    micro_b, macro_b = read_folds_csv(args.folds_b)
    if len(micro_a) != len(micro_b):
        raise FoldCountMismatch(
            f"{len(micro_a)} folds vs {len(micro_b)} folds")
    print("metric,t,df,p")
    for metric, a, b in (("micro", micro_a, micro_b),
                         ("macro", macro_a, macro_b)):
        result = paired_t_test(a, b)
        print(f"{metric},{result.t:.6f},{result.df},{result.p:.6f}")
    return 0


def cmd_build_kb_check(args):
    articles = load_kb(args.kb)
    stoplist = load_stopwords(args.stopwords or default_stopwords_path())
    index = build_index(articles, _kb_tokens(stoplist))
    stats = index_stats(index)
    for key in ("articles", "terms", "postings",
                "articles_with_empty_vector"):
        print(f"{key}={stats[key]}")
    return 0


def build_parser():
    parser = _Parser(prog="kbcat",
                     description="Knowledge-base text categorization toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one experiment from a config")
    p_run.add_argument("--config", required=True)
    p_run.add_argument("--baseline",
                       help="report.csv to compute improvement against")
    p_run.add_argument("--out", default=".")
    p_run.add_argument("--seed", type=int, help="override the config seed")
    p_run.set_defaults(func=cmd_run)

    p_matrix = sub.add_parser(
        "matrix", help="run baseline plus approaches into one table")
    p_matrix.add_argument("--config", required=True)
    p_matrix.add_argument("--out", default=".")
    p_matrix.add_argument("--seed", type=int,
                          help="override the config seed")
    p_matrix.set_defaults(func=cmd_matrix)

    p_compare = sub.add_parser(
        "compare", help="paired t-test between two folds.csv files")
    p_compare.add_argument("folds_a")
    p_compare.add_argument("folds_b")
    p_compare.set_defaults(func=cmd_compare)

    p_check = sub.add_parser(
        "build-kb-check", help="validate a KB file and print index stats")
    p_check.add_argument("kb")
    p_check.add_argument("--stopwords")
    p_check.set_defaults(func=cmd_build_kb_check)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except KbcatError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"IO_ERROR: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
