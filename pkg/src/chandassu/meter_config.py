"""Meter configurations: per-type constraint sets and the yati table.

Each supported padyam type ships as one YAML file under ``configs/``.
The schema (version 1):

    schema_version: 1
    type_name: <identifier>
    class_name: Vruttamu | Jaathi | Vupajaathi
    n_paadalu: <int>              # logical paadams
    n_aksharalu: <int>            # Vruttamu only
    prasa: <bool>
    only_generic_yati: <bool>     # false admits prasa-yati as fallback
    yati_sthanam: [ganam_index, aksharam_offset]   # 1-based, 0-based
    yati_paadalu: [line numbers expected to satisfy yati]
    gana_kramam:                  # one entry per physical line
      - [NAME, SURYA, [GAA, SA], ...]

A position is a ganam name, a class macro (INDRA / SURYA, expanded to the
member list), or an explicit list of alternative names tried in order.

Configs are resolved from, in order: an explicit ``config_dir`` argument,
the CHANDASSU_CONFIG_DIR environment variable, then the packaged files.
Loaded configs are immutable and cached, so concurrent readers share them
freely.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Optional

import yaml

from .errors import ConfigValidationError, UnknownTypeError
from .ganam import GANAM_BY_NAME, expand_class

ENV_CONFIG_DIR = "CHANDASSU_CONFIG_DIR"

# The eight supported types with their prosodic classes, in the
# traditional tabulation order (also the auto-detect tie-break order).
TYPE_ORDER: tuple[tuple[str, str], ...] = (
    ("vutpalamaala", "Vruttamu"),
    ("champakamaala", "Vruttamu"),
    ("saardulamu", "Vruttamu"),
    ("mattebhamu", "Vruttamu"),
    ("kandamu", "Jaathi"),
    ("teytageethi", "Vupajaathi"),
    ("aataveladi", "Vupajaathi"),
    ("seesamu", "Vupajaathi"),
)
CLASS_OF_TYPE = dict(TYPE_ORDER)
CLASS_ORDER = ("Vruttamu", "Jaathi", "Vupajaathi")

_CLASS_MACROS = ("INDRA", "SURYA")


@dataclass(frozen=True)
class PadyamConfig:
    type_name: str
    class_name: str
    n_paadalu: int
    # line -> position -> ordered alternative ganam names
    gana_kramam: tuple[tuple[tuple[str, ...], ...], ...]
    n_aksharalu: Optional[int]
    yati_sthanam: tuple[int, int]
    yati_paadalu: tuple[int, ...]
    prasa: bool
    only_generic_yati: bool

    @property
    def total_positions(self) -> int:
        return sum(len(line) for line in self.gana_kramam)

    def applicable_scores(self) -> list[str]:
        """Micro-score keys this type contributes, in report order."""
        keys = ["n_paadalu_score", "gana_kramam_score", "yati_score"]
        if self.n_aksharalu is not None:
            keys.append("n_aksharaalu_score")
        if self.prasa:
            keys.append("prasa_score")
        return keys


@dataclass(frozen=True)
class YatiTable:
    vowel_classes: tuple[str, ...]
    letter_classes: tuple[str, ...]

    def all_classes(self) -> tuple[str, ...]:
        return self.vowel_classes + self.letter_classes


def _resolve_dir(config_dir) -> Optional[str]:
    if config_dir is not None:
        return str(config_dir)
    env = os.environ.get(ENV_CONFIG_DIR)
    return env if env else None


def _read_yaml(filename: str, dir_key: Optional[str]) -> dict:
    if dir_key is not None:
        path = Path(dir_key) / filename
        if not path.is_file():
            raise FileNotFoundError(path)
        text = path.read_text(encoding="utf-8")
    else:
        text = (
            resources.files("chandassu") / "configs" / filename
        ).read_text(encoding="utf-8")
    data = yaml.safe_load(text)
    if not isinstance(data, dict):
        raise ConfigValidationError(f"{filename}: expected a mapping")
    return data


def _normalize_position(entry, where: str) -> tuple[str, ...]:
    if isinstance(entry, str):
        if entry in _CLASS_MACROS:
            return tuple(
                g.name for g in expand_class(entry.capitalize())
            )
        names = (entry,)
    elif isinstance(entry, list) and entry and all(
        isinstance(x, str) for x in entry
    ):
        names = tuple(entry)
    else:
        raise ConfigValidationError(
            f"{where}: position must be a ganam name, a class macro, "
            f"or a list of names, got {entry!r}"
        )
    for name in names:
        if name not in GANAM_BY_NAME:
            raise ConfigValidationError(f"{where}: unknown ganam {name!r}")
    return names


def _require(data: dict, key: str, kind, where: str):
    if key not in data:
        raise ConfigValidationError(f"{where}: missing field {key!r}")
    value = data[key]
    if kind is int and isinstance(value, bool):
        raise ConfigValidationError(f"{where}: {key!r} must be an integer")
    if not isinstance(value, kind):
        raise ConfigValidationError(
            f"{where}: {key!r} must be {kind.__name__}, got {type(value).__name__}"
        )
    return value


def _validate(config: PadyamConfig, where: str) -> None:
    cfg = config
    if cfg.n_paadalu < 1:
        raise ConfigValidationError(f"{where}: n_paadalu must be positive")
    expected_lines = (
        2 * cfg.n_paadalu if cfg.type_name == "seesamu" else cfg.n_paadalu
    )
    if len(cfg.gana_kramam) != expected_lines:
        raise ConfigValidationError(
            f"{where}: expected {expected_lines} gana_kramam lines, "
            f"got {len(cfg.gana_kramam)}"
        )
    if not cfg.yati_paadalu:
        raise ConfigValidationError(f"{where}: yati_paadalu is empty")
    for idx in cfg.yati_paadalu:
        if not 1 <= idx <= len(cfg.gana_kramam):
            raise ConfigValidationError(
                f"{where}: yati_paadalu entry {idx} outside 1..{len(cfg.gana_kramam)}"
            )
    ys_ganam, ys_offset = cfg.yati_sthanam
    if ys_ganam < 1 or ys_offset < 0:
        raise ConfigValidationError(f"{where}: bad yati_sthanam {cfg.yati_sthanam}")
    checked_lines = (
        [cfg.gana_kramam[i - 1] for i in cfg.yati_paadalu]
        if cfg.type_name == "kandamu"
        else list(cfg.gana_kramam)
    )
    for line in checked_lines:
        if ys_ganam > len(line):
            raise ConfigValidationError(
                f"{where}: yati_sthanam ganam {ys_ganam} beyond line of {len(line)}"
            )
        max_len = max(
            len(GANAM_BY_NAME[name].pattern) for name in line[ys_ganam - 1]
        )
        if ys_offset >= max_len:
            raise ConfigValidationError(
                f"{where}: yati_sthanam offset {ys_offset} beyond ganam length"
            )
    # Constraint presence must follow the prosodic class.
    if cfg.class_name == "Vruttamu":
        if cfg.n_aksharalu is None:
            raise ConfigValidationError(f"{where}: Vruttamu needs n_aksharalu")
        if not cfg.prasa:
            raise ConfigValidationError(f"{where}: Vruttamu needs prasa")
        implied = sum(
            len(GANAM_BY_NAME[pos[0]].pattern)
            for line in cfg.gana_kramam
            for pos in line
        )
        if implied != cfg.n_paadalu * cfg.n_aksharalu:
            raise ConfigValidationError(
                f"{where}: ganam patterns imply {implied} aksharams, "
                f"config says {cfg.n_paadalu * cfg.n_aksharalu}"
            )
    else:
        if cfg.n_aksharalu is not None:
            raise ConfigValidationError(
                f"{where}: {cfg.class_name} must not set n_aksharalu"
            )
        if cfg.class_name == "Vupajaathi" and cfg.prasa:
            raise ConfigValidationError(
                f"{where}: Vupajaathi must not require prasa"
            )


@lru_cache(maxsize=None)
def _load_config_cached(type_name: str, dir_key: Optional[str]) -> PadyamConfig:
    where = f"{type_name}.yaml"
    try:
        data = _read_yaml(where, dir_key)
    except FileNotFoundError:
        raise UnknownTypeError(
            f"no config file for type {type_name!r}"
        ) from None
    declared = _require(data, "type_name", str, where)
    if declared != type_name:
        raise ConfigValidationError(
            f"{where}: declares type_name {declared!r}"
        )
    class_name = _require(data, "class_name", str, where)
    if class_name not in CLASS_ORDER:
        raise ConfigValidationError(f"{where}: unknown class {class_name!r}")
    if CLASS_OF_TYPE.get(type_name) != class_name:
        raise ConfigValidationError(
            f"{where}: {type_name} must be class {CLASS_OF_TYPE.get(type_name)}"
        )
    raw_kramam = _require(data, "gana_kramam", list, where)
    gana_kramam = []
    for line_no, line in enumerate(raw_kramam, start=1):
        if not isinstance(line, list) or not line:
            raise ConfigValidationError(
                f"{where}: line {line_no} must be a non-empty list"
            )
        gana_kramam.append(
            tuple(
                _normalize_position(entry, f"{where} line {line_no}")
                for entry in line
            )
        )
    yati_sthanam = _require(data, "yati_sthanam", list, where)
    if len(yati_sthanam) != 2 or not all(isinstance(v, int) for v in yati_sthanam):
        raise ConfigValidationError(f"{where}: yati_sthanam must be [int, int]")
    yati_paadalu = _require(data, "yati_paadalu", list, where)
    if not all(isinstance(v, int) for v in yati_paadalu):
        raise ConfigValidationError(f"{where}: yati_paadalu must be integers")
    n_aksharalu = data.get("n_aksharalu")
    if n_aksharalu is not None and not isinstance(n_aksharalu, int):
        raise ConfigValidationError(f"{where}: n_aksharalu must be an integer")

    config = PadyamConfig(
        type_name=type_name,
        class_name=class_name,
        n_paadalu=_require(data, "n_paadalu", int, where),
        gana_kramam=tuple(gana_kramam),
        n_aksharalu=n_aksharalu,
        yati_sthanam=(yati_sthanam[0], yati_sthanam[1]),
        yati_paadalu=tuple(yati_paadalu),
        prasa=_require(data, "prasa", bool, where),
        only_generic_yati=_require(data, "only_generic_yati", bool, where),
    )
    _validate(config, where)
    return config


def load_config(type_name: str, config_dir=None) -> PadyamConfig:
    """Load and validate the config for one padyam type."""
    if type_name not in CLASS_OF_TYPE:
        raise UnknownTypeError(f"unknown padyam type: {type_name!r}")
    return _load_config_cached(type_name, _resolve_dir(config_dir))


@lru_cache(maxsize=None)
def _load_yati_cached(dir_key: Optional[str]) -> YatiTable:
    data = _read_yaml("yati.yaml", dir_key)
    table = YatiTable(
        vowel_classes=tuple(_require(data, "vowel_classes", list, "yati.yaml")),
        letter_classes=tuple(_require(data, "letter_classes", list, "yati.yaml")),
    )
    for kind, classes in (
        ("vowel", table.vowel_classes),
        ("letter", table.letter_classes),
    ):
        seen: set[str] = set()
        for cls in classes:
            if not isinstance(cls, str) or not cls:
                raise ConfigValidationError(
                    f"yati.yaml: {kind} classes must be non-empty strings"
                )
            overlap = seen.intersection(cls)
            if overlap:
                raise ConfigValidationError(
                    f"yati.yaml: symbol(s) {sorted(overlap)} appear in "
                    f"two {kind} classes"
                )
            seen.update(cls)
    return table


def load_yati_table(config_dir=None) -> YatiTable:
    """Load and validate the yati equivalence table."""
    return _load_yati_cached(_resolve_dir(config_dir))


def list_types() -> list[tuple[str, str]]:
    """The supported (type_name, class_name) pairs in table order."""
    return list(TYPE_ORDER)


def clear_caches() -> None:
    """Drop cached configs (used by tests that swap config directories)."""
    _load_config_cached.cache_clear()
    _load_yati_cached.cache_clear()
