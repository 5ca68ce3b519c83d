"""Ganam taxonomy: named laghuvu/guruvu patterns and functional classes.

Seventeen ganams, one to four marks long, each with a unique pattern.
Vupajaathi meters pick positions from the two functional classes: Indra
(BHA RA THA NALA NAGA SALA) and Surya (HA NA).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import UnknownGanamError


@dataclass(frozen=True)
class GanamSpec:
    name: str
    pattern: str  # string over {"|", "U"}
    functional_class: Optional[str]  # "Indra", "Surya", or None


INDRA_NAMES = ("BHA", "RA", "THA", "NALA", "NAGA", "SALA")
SURYA_NAMES = ("HA", "NA")


def _cls(name: str) -> Optional[str]:
    if name in INDRA_NAMES:
        return "Indra"
    if name in SURYA_NAMES:
        return "Surya"
    return None


# Traditional tabulation order: by token count, then the customary listing.
GANAM_TABLE: tuple[GanamSpec, ...] = tuple(
    GanamSpec(name, pattern, _cls(name))
    for name, pattern in (
        ("LA", "|"),
        ("GA", "U"),
        ("LAA", "||"),
        ("VA", "|U"),
        ("HA", "U|"),
        ("GAA", "UU"),
        ("NA", "|||"),
        ("SA", "||U"),
        ("JA", "|U|"),
        ("YA", "|UU"),
        ("BHA", "U||"),
        ("RA", "U|U"),
        ("THA", "UU|"),
        ("MA", "UUU"),
        ("NALA", "||||"),
        ("NAGA", "|||U"),
        ("SALA", "||U|"),
    )
)

GANAM_BY_NAME: dict[str, GanamSpec] = {g.name: g for g in GANAM_TABLE}
PATTERN_TO_NAME: dict[str, str] = {g.pattern: g.name for g in GANAM_TABLE}


def ganam_by_name(name: str) -> GanamSpec:
    try:
        return GANAM_BY_NAME[name]
    except KeyError:
        raise UnknownGanamError(f"unknown ganam name: {name!r}") from None


def ganam_by_pattern(pattern: str) -> Optional[GanamSpec]:
    """The ganam with this exact pattern, or None (not every short LG
    sequence has a name)."""
    name = PATTERN_TO_NAME.get(pattern)
    return GANAM_BY_NAME[name] if name else None


def expand_class(class_name: str) -> list[GanamSpec]:
    """Members of a functional class, in table order."""
    if class_name == "Indra":
        names = INDRA_NAMES
    elif class_name == "Surya":
        names = SURYA_NAMES
    else:
        raise UnknownGanamError(f"unknown ganam class: {class_name!r}")
    return [GANAM_BY_NAME[n] for n in names]
