"""Telugu character inventory and diacritic utilities.

Single source of truth for which codepoints are vowels, consonants,
diacritics and signs, their hraswa/deergha length, and the inherent
laghuvu/guruvu weight of every codepoint that can legally end an aksharam
token. Everything downstream (tokenizer, weight generator, yati checks)
consults these tables; nothing else hardcodes Telugu codepoints.

The tables are hardcoded rather than derived from ``unicodedata`` so the
classification cannot drift with the interpreter's Unicode database. A
human-readable audit file (one codepoint per row) ships alongside and can
be regenerated with :func:`write_audit_table`.
"""

from __future__ import annotations

import enum
from typing import Iterator, Optional


class CharClass(enum.Enum):
    """Orthographic category of a single codepoint."""

    INDEPENDENT_VOWEL = "achhu"
    CONSONANT = "hallu"
    VOWEL_DIACRITIC = "gunintha_chihnam"
    VIRAMA = "pollu"
    ANUSVARA = "purna_bindu"
    VISARGA = "visarga"
    CANDRABINDU = "ara_sunna"
    DIGIT = "digit"
    OTHER = "other"


class VowelLength(enum.Enum):
    HRASWA = "hraswa"
    DEERGHA = "deergha"


# Laghuvu/guruvu weights use the traditional symbols directly; they double
# as the serialization alphabet for LG strings.
LAGHUVU = "|"
GURUVU = "U"

# Named signs referenced individually by the algorithms.
POLLU = "్"        # ్ virama / vowel killer
PURNA_BINDU = "ం"  # ం anusvara
VISARGA_SIGN = "ః"  # ః
ARA_SUNNA = "ఁ"    # ఁ candrabindu, removed before analysis
RA = "ర"           # ర, special-cased for subscript-Ra conjuncts

# Independent vowels (achhulu), short then long, plus the archaic vocalic
# letters kept for totality.
HRASWA_ACHHULU = "అఇఉఋఌఎఒ"  # అ ఇ ఉ ఋ ఌ ఎ ఒ
DEERGHA_ACHHULU = (
    "ఆఈఊఏఐఓఔౠౡ"  # ఆ ఈ ఊ ఏ ఐ ఓ ఔ ౠ ౡ
)
INDEPENDENT_VOWELS = frozenset(HRASWA_ACHHULU + DEERGHA_ACHHULU)

# Consonants (hallulu): the two main ranges plus the modern TSA/DZA/RRRA
# letters and the nakaara pollu letter (U+0C5D, added in Unicode 14).
CONSONANTS = frozenset(
    [chr(cp) for cp in range(0x0C15, 0x0C29)]
    + [chr(cp) for cp in range(0x0C2A, 0x0C3A)]
    + ["ౘ", "ౙ", "ౚ", "ౝ"]
)

# Dependent vowel signs (gunintha chihnamulu), split by length. The
# length marks U+0C55/U+0C56 only ever lengthen, so they sit with the
# deergha signs.
HRASWA_CHIHNAMULU = "ిుృెొౢ"  # ి ు ృ ె ొ ౢ
DEERGHA_CHIHNAMULU = (
    "ాీూౄేైోౌౣౕౖ"
)  # ా ీ ూ ౄ ే ై ో ౌ ౣ ౕ ౖ
VOWEL_DIACRITICS = frozenset(HRASWA_CHIHNAMULU + DEERGHA_CHIHNAMULU)

TELUGU_DIGITS = frozenset(
    [chr(cp) for cp in range(0x0C66, 0x0C70)]
    + [chr(cp) for cp in range(0x0C78, 0x0C7F)]  # fraction digits
)

# Base letters: what counts as "the alphabet" when sizing conjuncts.
VARNAMALA = INDEPENDENT_VOWELS | CONSONANTS

_VOWEL_LENGTH: dict[str, VowelLength] = {}
for _ch in HRASWA_ACHHULU + HRASWA_CHIHNAMULU:
    _VOWEL_LENGTH[_ch] = VowelLength.HRASWA
for _ch in DEERGHA_ACHHULU + DEERGHA_CHIHNAMULU:
    _VOWEL_LENGTH[_ch] = VowelLength.DEERGHA

# Inherent weight of a token by its final codepoint. Laghuvu: short
# vowels/signs and bare consonants (inherent short vowel). Guruvu: long
# vowels/signs, anusvara, visarga, and a trailing pollu (a closed
# syllable, e.g. word-final "సున్", is heavy). The nasal combining signs
# U+0C00/U+0C04 behave like the anusvara.
LG_MAP: dict[str, str] = {}
for _ch in HRASWA_ACHHULU + HRASWA_CHIHNAMULU:
    LG_MAP[_ch] = LAGHUVU
for _ch in CONSONANTS:
    LG_MAP[_ch] = LAGHUVU
for _ch in DEERGHA_ACHHULU + DEERGHA_CHIHNAMULU:
    LG_MAP[_ch] = GURUVU
for _ch in (PURNA_BINDU, VISARGA_SIGN, POLLU, "ఀ", "ఄ"):
    LG_MAP[_ch] = GURUVU
del _ch


def classify(ch: str) -> CharClass:
    """Classify one codepoint. Total: anything non-Telugu is OTHER."""
    if ch in CONSONANTS:
        return CharClass.CONSONANT
    if ch in INDEPENDENT_VOWELS:
        return CharClass.INDEPENDENT_VOWEL
    if ch in VOWEL_DIACRITICS:
        return CharClass.VOWEL_DIACRITIC
    if ch == POLLU:
        return CharClass.VIRAMA
    if ch == PURNA_BINDU or ch == "ఄ":
        return CharClass.ANUSVARA
    if ch == VISARGA_SIGN:
        return CharClass.VISARGA
    if ch == ARA_SUNNA or ch == "ఀ":
        return CharClass.CANDRABINDU
    if ch in TELUGU_DIGITS:
        return CharClass.DIGIT
    return CharClass.OTHER


def vowel_length(ch: str) -> Optional[VowelLength]:
    """Hraswa/deergha length of a vowel or vowel sign, else None."""
    return _VOWEL_LENGTH.get(ch)


def extract_gunintha_chihnam(token: str) -> str:
    """Vowel diacritics present in the token, in order.

    Returns "" when the token carries only the inherent vowel or is an
    independent vowel. The empty string is deliberate: the yati tables are
    strings and membership tests rely on "" being a substring of every
    class (see lakshanam).
    """
    return "".join(ch for ch in token if ch in VOWEL_DIACRITICS)


def remove_gunintha_chihnam(token: str) -> str:
    """Strip all vowel diacritics; consonant skeleton and viramas stay."""
    return "".join(ch for ch in token if ch not in VOWEL_DIACRITICS)


def extract_aksharam(token: str) -> list[str]:
    """Base letters (consonants and independent vowels) of the token."""
    return [ch for ch in token if ch in VARNAMALA]


def strip_bindu_visarga(token: str) -> str:
    """Remove anusvara and visarga signs from the token."""
    return "".join(
        ch for ch in token if ch != PURNA_BINDU and ch != VISARGA_SIGN
    )


def audit_rows() -> Iterator[tuple[str, str, str, str, str]]:
    """Rows for the human-readable character table: every assigned-here
    codepoint of the Telugu block, as (hex, glyph, category, length, lg)."""
    for cp in range(0x0C00, 0x0C80):
        ch = chr(cp)
        cls = classify(ch)
        if cls is CharClass.OTHER:
            continue
        length = _VOWEL_LENGTH.get(ch)
        yield (
            f"U+{cp:04X}",
            ch,
            cls.value,
            length.value if length else "-",
            LG_MAP.get(ch, "-"),
        )


def write_audit_table(path) -> None:
    """Write the audit table as a TSV file linguists can review."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("codepoint\tglyph\tcategory\tvowel_length\tlg_weight\n")
        for row in audit_rows():
            fh.write("\t".join(row) + "\n")
