"""Aksharam tokenizer: Unicode Telugu text to prosodic script units.

Two stages. First the text is split into extended grapheme clusters, so a
base letter travels with its combining signs (a virama extends its base:
"అమ్మ" splits as అ / మ్ / మ). Then a small state machine fuses
virama-final clusters with what follows, producing conjunct aksharams
(మ్ + మ -> మ్మ), and absorbs word-final viramas into the preceding token
(మనసున్ -> మ, న, సున్). Whitespace separates words; digits, Latin text,
punctuation and the ara sunna sign are dropped before fusion.

The grapheme segmenter is implemented here instead of using the ``regex``
module's ``\\X``: recent Unicode versions (15.1+) added conjunct-cluster
rules (GB9c) that glue Telugu virama sequences into whole conjuncts, which
would silently change cluster boundaries mid-token. The fusion logic needs
the older, stable behavior where a cluster is a base plus its combining
marks, nothing more.
"""

from __future__ import annotations

import unicodedata

from .errors import InputShapeError
from .varnamala import ARA_SUNNA, POLLU, VARNAMALA, CharClass, classify

_JOINERS = ("‌", "‍")  # ZWNJ / ZWJ never break a cluster


def _extends(ch: str) -> bool:
    if ch in _JOINERS:
        return True
    return unicodedata.category(ch) in ("Mn", "Me", "Mc")


def _is_control(ch: str) -> bool:
    cat = unicodedata.category(ch)
    if cat in ("Zl", "Zp", "Cc"):
        return True
    return cat == "Cf" and ch not in _JOINERS


def grapheme_split(text: str) -> list[str]:
    """Split text into extended grapheme clusters.

    A cluster is CRLF, a control character, or a base codepoint followed
    by its run of combining marks and joiners. Concatenating the clusters
    reproduces the input exactly. Hangul jamo and emoji ZWJ sequences are
    approximated (adjacent to the Telugu domain, irrelevant to it).
    """
    clusters: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\r" and i + 1 < n and text[i + 1] == "\n":
            clusters.append("\r\n")
            i += 2
            continue
        if _is_control(ch) or ch in ("\r", "\n"):
            clusters.append(ch)
            i += 1
            continue
        j = i + 1
        while j < n and _extends(text[j]):
            j += 1
        clusters.append(text[i:j])
        i = j
    return clusters


def _clean_cluster(cluster: str) -> str:
    """Drop non-Telugu letters, digits and symbols from a cluster.

    Whitespace clusters survive untouched: they mark word boundaries for
    the fusion pass. Everything whose class is OTHER or DIGIT goes away
    (Latin, punctuation, Telugu and ASCII digits, ZWJ/ZWNJ). A cluster
    left with combining signs but no base letter is orthographic noise,
    not an aksharam, and is dropped whole.
    """
    if cluster.isspace():
        return cluster
    kept = "".join(
        ch
        for ch in cluster
        if classify(ch) not in (CharClass.OTHER, CharClass.DIGIT)
    )
    if kept and not any(ch in VARNAMALA for ch in kept):
        return ""
    return kept


def tokenize(text: str) -> list[str]:
    """Segment text into aksharam tokens.

    Virama-final clusters buffer and fuse with the next cluster of the
    same word; a virama-final cluster at a word boundary is absorbed into
    the previous token. Returns [] when nothing Telugu remains.

    Raises InputShapeError when a word-final virama cluster has no
    previous token to attach to (corrupt input starting with a dead
    consonant).
    """
    clusters = [_clean_cluster(c) for c in grapheme_split(text)]
    clusters = [c for c in clusters if c]

    tokens: list[str] = []
    pending = ""  # virama-final clusters awaiting their conjunct partner
    last = len(clusters) - 1
    for index, cluster in enumerate(clusters):
        cluster = cluster.replace(ARA_SUNNA, "")
        if not cluster:
            continue
        if cluster.isspace():
            continue
        if cluster.endswith(POLLU):
            if index < last and not clusters[index + 1].isspace():
                pending += cluster
                continue
            # Word- or input-final dead consonant: attach to the previous
            # token, together with any pending conjunct buffer, in input
            # order. Dropping or reordering the buffer here would break
            # the reconstruction guarantee.
            absorbed = pending + cluster
            pending = ""
            if not tokens:
                raise InputShapeError(
                    "dangling word-final virama with no preceding aksharam"
                )
            tokens[-1] += absorbed
        elif pending:
            tokens.append(pending + cluster)
            pending = ""
        else:
            tokens.append(cluster)
    return tokens


def tokenize_lines(text: str) -> list[list[str]]:
    """Tokenize per input line, dropping lines with no aksharams."""
    lines = []
    for raw in text.split("\n"):
        tokens = tokenize(raw)
        if tokens:
            lines.append(tokens)
    return lines
