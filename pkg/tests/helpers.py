"""Shared hypothesis strategies for the text-processing tests."""

from hypothesis import strategies as st

# Telugu letters and signs, Latin, digits, whitespace, punctuation,
# joiners; plenty of chances for degenerate sequences.
FUZZ_ALPHABET = (
    "అఆఇఐకమరసత"
    "ాిీు్ంఃఁ౦"
    "ab1 .\n\t,-‌‍"
)

fuzz_text = st.text(alphabet=FUZZ_ALPHABET, max_size=40)
