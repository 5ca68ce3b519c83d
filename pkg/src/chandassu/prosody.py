"""Laghuvu/guruvu weight assignment over aksharam tokens.

A token's inherent weight comes from its final codepoint (short vowel or
bare consonant -> laghuvu "|"; long vowel, anusvara, visarga, trailing
virama -> guruvu "U"). Context then overrides: a token followed by a
conjunct is forced guruvu, because the cluster's onset closes the
preceding syllable. The well-known exception is the subscript-Ra
conjunct (Ra-vattu), which by the convention adopted here does not
lengthen its predecessor: such conjuncts are sized as if the subscript ర
were absent.
"""

from __future__ import annotations

from collections import Counter
from typing import NamedTuple

from .errors import LookupMissError
from .tokenizer import grapheme_split, tokenize
from .varnamala import CONSONANTS, LG_MAP, POLLU, RA, VARNAMALA


class AnnotatedToken(NamedTuple):
    token: str
    mark: str  # "|" or "U"


def _inherent_mark(token: str) -> str:
    try:
        return LG_MAP[token[-1]]
    except KeyError:
        raise LookupMissError(
            f"no weight for token-final codepoint U+{ord(token[-1]):04X} "
            f"in {token!r}"
        ) from None


def annotate_tokens(tokens: list[str]) -> list[AnnotatedToken]:
    """Assign a weight to every token of an already-tokenized stream."""
    marking: list[str] = []
    for index, token in enumerate(tokens):
        if index == len(tokens) - 1:
            marking.append(_inherent_mark(token))
            continue

        nxt = tokens[index + 1]
        clusters = grapheme_split(nxt)
        if clusters[-1].endswith(POLLU):
            body = "".join(clusters[:-1])  # word-final pollu doesn't count
        else:
            body = "".join(clusters)
        counts = Counter(body)
        counts.pop(RA, None)
        non_ra_consonants = sum(
            n for ch, n in counts.items() if ch in CONSONANTS
        )

        if RA in nxt and (
            non_ra_consonants == 0
            or (non_ra_consonants == 1 and not nxt.startswith(RA))
        ):
            # Ra-vattu: the subscript ర is ignored, the neighbor keeps its
            # inherent weight.
            marking.append(_inherent_mark(token))
            continue

        base_letters = sum(1 for ch in nxt if ch in VARNAMALA)
        if base_letters > 1 and not nxt.endswith(POLLU):
            marking.append("U")
        elif (
            base_letters > 1
            and nxt.endswith(POLLU)
            and clusters[0].endswith(POLLU)
        ):
            marking.append("U")
        else:
            # A pollu-final neighbor closes its own syllable, not this one.
            marking.append(_inherent_mark(token))

    return [AnnotatedToken(t, m) for t, m in zip(tokens, marking)]


def generate_lg(text: str) -> list[AnnotatedToken]:
    """Tokenize text and weight every aksharam."""
    return annotate_tokens(tokenize(text))


def render_lg(annotated: list[AnnotatedToken]) -> str:
    """Compact LG string, one "|" or "U" per token."""
    return "".join(a.mark for a in annotated)
