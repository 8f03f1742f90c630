"""Exception types shared across the package.

The CLI maps these onto exit codes: configuration problems exit 1, data
problems exit 2, anything else exits 3.
"""


class ConfigError(ValueError):
    """Invalid configuration value or unusable config/flag combination."""


class CorpusFormatError(ValueError):
    """A corpus file failed to parse or violated a corpus invariant."""


class ResourceError(ValueError):
    """A resource file (acronyms, stoplists, patterns, ...) is invalid."""


class EmbeddingFormatError(ValueError):
    """A word-vector file does not conform to the text format."""


class StageError(RuntimeError):
    """A pipeline stage failed; carries the stage name for error reporting."""

    def __init__(self, stage, message):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
