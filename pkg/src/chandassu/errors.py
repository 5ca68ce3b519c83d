"""Exception taxonomy shared across the analysis pipeline.

Two families matter to callers: input-shaped problems (bad or degenerate
text, bad dataset rows) and configuration problems (unknown meter types,
malformed config files). The CLI maps the first family to exit code 1 and
the second to exit code 2.
"""


class ChandassuError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ChandassuError):
    """Problems with the text or dataset being analyzed."""


class ConfigError(ChandassuError):
    """Problems with meter configurations or lookup tables."""


class InputShapeError(InputError):
    """Input text is structurally degenerate (e.g. a dangling word-final
    virama with no preceding aksharam to absorb it)."""


class EmptyInputError(InputError):
    """No Telugu aksharams remain after cleanup."""


class LookupMissError(InputError):
    """A token-final codepoint is missing from the weight map; signals a
    gap in the character tables rather than in the input itself."""


class UnknownGanamError(ConfigError):
    """Ganam name not in the 17-entry table."""


class UnknownTypeError(ConfigError):
    """Padyam type name not among the supported meter types."""


class ConfigValidationError(ConfigError):
    """A meter config file violates the schema or its invariants."""


class ConfigShapeError(ConfigError):
    """A config's yati position does not fit the matched ganam rows."""


class SchemaError(InputError):
    """A dataset row is malformed. Carries the offending row number."""

    def __init__(self, row: int, message: str):
        super().__init__(f"row {row}: {message}")
        self.row = row
