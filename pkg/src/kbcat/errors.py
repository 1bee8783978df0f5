"""Exception hierarchy. Every error carries a stable machine-readable code
that the CLI prints as ``CODE: message`` on its single stderr line."""


class KbcatError(Exception):
    code = "ERROR"

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class CorpusNotFound(KbcatError):
    code = "NOT_FOUND"


class EmptyCorpus(KbcatError):
    code = "EMPTY_CORPUS"


class MissingTagger(KbcatError):
    code = "MISSING_TAGGER"


class MissingLexicon(KbcatError):
    code = "MISSING_LEXICON"


class KbFormatError(KbcatError):
    code = "KB_FORMAT"


class DuplicateArticleId(KbcatError):
    code = "DUPLICATE_ARTICLE_ID"


class EmptyKb(KbcatError):
    code = "EMPTY_KB"


class ClientUnavailable(KbcatError):
    code = "CLIENT_UNAVAILABLE"


class EmptyVocabulary(KbcatError):
    code = "EMPTY_VOCABULARY"


class EmptyClass(KbcatError):
    code = "EMPTY_CLASS"


class DegenerateLabels(KbcatError):
    code = "DEGENERATE_LABELS"


class ClassTooSmall(KbcatError):
    code = "CLASS_TOO_SMALL"


class LengthMismatch(KbcatError):
    code = "LENGTH_MISMATCH"


class ZeroBaseline(KbcatError):
    code = "ZERO_BASELINE"


class FoldCountMismatch(KbcatError):
    code = "FOLD_COUNT_MISMATCH"


class MatrixNoBaseline(KbcatError):
    code = "MATRIX_NO_BASELINE"


class ConfigError(KbcatError):
    code = "CONFIG_INVALID"
