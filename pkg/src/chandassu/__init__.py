"""Automated metrical analysis for Telugu chandassu poetry.

Pipeline: aksharam tokenization -> laghuvu/guruvu weighting -> ganam
sequence matching against per-meter configs -> yati/prasa validation ->
micro-scores and the aggregate Chandassu Score. Exposed as a library
(this package), a CLI (``chandassu``), a corpus benchmark harness, and a
small HTTP analysis service.
"""

from .errors import (
    ChandassuError,
    ConfigError,
    ConfigShapeError,
    ConfigValidationError,
    EmptyInputError,
    InputError,
    InputShapeError,
    LookupMissError,
    SchemaError,
    UnknownGanamError,
    UnknownTypeError,
)
from .ganam import GanamSpec, expand_class, ganam_by_name, ganam_by_pattern
from .lakshanam import prasa_yati_check, yati_check
from .meter_config import (
    PadyamConfig,
    YatiTable,
    list_types,
    load_config,
    load_yati_table,
)
from .padya_bhedam import (
    GanamMatchCell,
    ScoreReport,
    evaluate,
    evaluate_auto,
    match_ganams,
)
from .prosody import AnnotatedToken, annotate_tokens, generate_lg, render_lg
from .tokenizer import grapheme_split, tokenize, tokenize_lines
from .varnamala import (
    CharClass,
    VowelLength,
    classify,
    extract_aksharam,
    extract_gunintha_chihnam,
    remove_gunintha_chihnam,
    strip_bindu_visarga,
)

__version__ = "0.1.0"

__all__ = [
    "AnnotatedToken",
    "ChandassuError",
    "CharClass",
    "ConfigError",
    "ConfigShapeError",
    "ConfigValidationError",
    "EmptyInputError",
    "GanamMatchCell",
    "GanamSpec",
    "InputError",
    "InputShapeError",
    "LookupMissError",
    "PadyamConfig",
    "SchemaError",
    "ScoreReport",
    "UnknownGanamError",
    "UnknownTypeError",
    "VowelLength",
    "YatiTable",
    "annotate_tokens",
    "classify",
    "evaluate",
    "evaluate_auto",
    "expand_class",
    "extract_aksharam",
    "extract_gunintha_chihnam",
    "ganam_by_name",
    "ganam_by_pattern",
    "generate_lg",
    "grapheme_split",
    "list_types",
    "load_config",
    "load_yati_table",
    "match_ganams",
    "prasa_yati_check",
    "remove_gunintha_chihnam",
    "render_lg",
    "strip_bindu_visarga",
    "tokenize",
    "tokenize_lines",
    "yati_check",
]
