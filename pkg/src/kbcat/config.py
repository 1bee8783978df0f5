"""Flat key = value experiment configuration.

One assignment per line, dotted keys for grouped settings (svm.C = 1.0),
full-line # comments, booleans written as true/false. Relative paths are
resolved against the directory containing the config file.
"""

from dataclasses import dataclass, field
from pathlib import Path

from .errors import ConfigError

REPRESENTATIONS = ("T1", "T2", "T3", "T4")
APPROACHES = ("baseline", "A1", "A2", "A3", "A4", "A5")

_KNOWN_KEYS = {
    "corpus", "kb", "representation", "approach", "approaches", "classifier",
    "k_folds", "seed", "nb.alpha", "svm.C", "svm.tol", "svm.max_epochs",
    "filter_tau", "stem_enrichment", "strip_headers", "stopwords", "nouns",
    "gazetteer",
}


@dataclass
class ExperimentConfig:
    corpus: Path
    kb: Path | None = None
    representation: str = "T1"
    approach: str = "baseline"
    approaches: tuple = ()
    classifier: str = "nb"
    k_folds: int = 10
    seed: int = 7
    nb_alpha: float = 1.0
    svm_c: float = 1.0
    svm_tol: float = 1e-3
    svm_max_epochs: int = 1000
    filter_tau: float = 0.5
    stem_enrichment: bool = True
    strip_headers: bool = False
    stopwords: Path | None = None
    nouns: Path | None = None
    gazetteer: Path | None = None
    source_dir: Path = field(default_factory=Path)


def _parse_bool(key, value):
    lowered = value.lower()
    if lowered == "true":
        return True
    if lowered == "false":
        return False
    raise ConfigError(f"{key} must be true or false, got {value!r}")


def _parse_int(key, value):
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {value!r}") from None


def _parse_float(key, value):
    try:
        return float(value)
    except ValueError:
        raise ConfigError(f"{key} must be a number, got {value!r}") from None


def parse_config_text(text, source_dir):
    """Parse config text into raw key/value strings, then typed fields."""
    raw = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, _, value = stripped.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in raw:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        raw[key] = value

    if "corpus" not in raw:
        raise ConfigError("missing required key 'corpus'")

    def path_of(key):
        if key not in raw:
            return None
        return (source_dir / raw[key]).resolve()

    cfg = ExperimentConfig(corpus=(source_dir / raw["corpus"]).resolve(),
                           source_dir=source_dir)
    cfg.kb = path_of("kb")
    cfg.stopwords = path_of("stopwords")
    cfg.nouns = path_of("nouns")
    cfg.gazetteer = path_of("gazetteer")
    if "representation" in raw:
        cfg.representation = raw["representation"]
    if "approach" in raw:
        cfg.approach = raw["approach"]
    if "approaches" in raw:
        cfg.approaches = tuple(part.strip()
                               for part in raw["approaches"].split(",")
                               if part.strip())
    if "classifier" in raw:
        cfg.classifier = raw["classifier"]
    if "k_folds" in raw:
        cfg.k_folds = _parse_int("k_folds", raw["k_folds"])
    if "seed" in raw:
        cfg.seed = _parse_int("seed", raw["seed"])
    if "nb.alpha" in raw:
        cfg.nb_alpha = _parse_float("nb.alpha", raw["nb.alpha"])
    if "svm.C" in raw:
        cfg.svm_c = _parse_float("svm.C", raw["svm.C"])
    if "svm.tol" in raw:
        cfg.svm_tol = _parse_float("svm.tol", raw["svm.tol"])
    if "svm.max_epochs" in raw:
        cfg.svm_max_epochs = _parse_int("svm.max_epochs",
                                        raw["svm.max_epochs"])
    if "filter_tau" in raw:
        cfg.filter_tau = _parse_float("filter_tau", raw["filter_tau"])
    if "stem_enrichment" in raw:
        cfg.stem_enrichment = _parse_bool("stem_enrichment",
                                          raw["stem_enrichment"])
    if "strip_headers" in raw:
        cfg.strip_headers = _parse_bool("strip_headers", raw["strip_headers"])
    validate_config(cfg)
    return cfg


def validate_config(cfg):
    if cfg.representation not in REPRESENTATIONS:
        raise ConfigError(f"representation must be one of "
                          f"{', '.join(REPRESENTATIONS)}")
    if cfg.approach not in APPROACHES:
        raise ConfigError(f"approach must be one of {', '.join(APPROACHES)}")
    for name in cfg.approaches:
        if name not in APPROACHES:
            raise ConfigError(f"approaches entry {name!r} is not one of "
                              f"{', '.join(APPROACHES)}")
    if cfg.classifier not in ("nb", "svm"):
        raise ConfigError("classifier must be nb or svm")
    if cfg.k_folds < 2:
        raise ConfigError("k_folds must be at least 2")
    if cfg.nb_alpha <= 0:
        raise ConfigError("nb.alpha must be positive")
    if cfg.svm_c <= 0:
        raise ConfigError("svm.C must be positive")
    if cfg.svm_tol <= 0:
        raise ConfigError("svm.tol must be positive")
    if cfg.svm_max_epochs < 1:
        raise ConfigError("svm.max_epochs must be at least 1")
    if not 0 < cfg.filter_tau <= 1:
        raise ConfigError("filter_tau must be in (0, 1]")
    needs_kb = cfg.approach != "baseline" or any(
        name != "baseline" for name in cfg.approaches)
    if needs_kb and cfg.kb is None:
        raise ConfigError("approach requires a kb path",
                          code="CONFIG_KB_REQUIRED")


def load_config(path):
    """Read and validate a config file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    return parse_config_text(text, path.resolve().parent)
