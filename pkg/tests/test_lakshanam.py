import pytest

from chandassu.errors import ConfigShapeError
from chandassu.lakshanam import prasa_yati_check, yati_check
from chandassu.meter_config import load_config, load_yati_table
from chandassu.padya_bhedam import GanamMatchCell
from chandassu.prosody import AnnotatedToken


@pytest.fixture(scope="module")
def table():
    return load_yati_table()


class TestYatiCheck:
    def test_identical_tokens(self, table):
        assert yati_check("రా", "రా", table) is True

    def test_same_base_short_vs_long_vowel(self, table):
        # ి and ీ share a vowel class; త shares its own letter class.
        assert yati_check("తి", "తీ", table) is True

    def test_different_letter_classes(self, table):
        assert yati_check("రా", "కి", table) is False

    def test_vowel_initial_tokens(self, table):
        assert yati_check("అ", "ఆ", table) is True

    def test_bare_versus_bare(self, table):
        assert yati_check("క", "క", table) is True

    def test_asymmetry_of_bare_second_token(self, table):
        # A marked first aksharam tolerates a bare second one; the swap
        # fails at the first class that excludes the marked diacritic.
        assert yati_check("రా", "ర", table) is True
        assert yati_check("ర", "రా", table) is False

    def test_mismatched_diacritics_fail_both_ways(self, table):
        assert yati_check("రా", "రి", table) is False
        assert yati_check("రి", "రా", table) is False

    def test_bindu_visarga_stripped_first(self, table):
        assert yati_check("కం", "క", table) is True

    def test_letter_congruence_within_varga(self, table):
        # క and ఖ sit in one varga; the vowels match exactly.
        assert yati_check("కా", "ఖా", table) is True


def cell(tokens, name="HA"):
    return GanamMatchCell([AnnotatedToken(t, m) for t, m in tokens], name)


def teyta_row(first_tokens, ys_tokens):
    """A five-cell row shaped like a teytageethi line; the yati sthanam
    is the 4th cell's first aksharam."""
    mid = cell([("తీ", "U"), ("తి", "|"), ("తి", "|")], "BHA")
    tail = cell([("తీ", "U"), ("తి", "|")])
    return [cell(first_tokens), mid, mid, cell(ys_tokens), tail]


@pytest.fixture(scope="module")
def teyta_config():
    return load_config("teytageethi")


PASSING = [("తీ", "U"), ("తి", "|")]


class TestPrasaYatiCheck:
    def test_generic_pass(self, teyta_config, table):
        rows = [teyta_row(PASSING, PASSING)]
        assert prasa_yati_check(rows, "teytageethi", teyta_config, False, table) == [True]

    def test_degenerate_first_cell(self, teyta_config, table):
        rows = [teyta_row([("తీ", "U")], PASSING)]
        assert prasa_yati_check(rows, "teytageethi", teyta_config, False, table) == [False]

    def test_degenerate_yati_cell(self, teyta_config, table):
        rows = [teyta_row(PASSING, [("తీ", "U")])]
        assert prasa_yati_check(rows, "teytageethi", teyta_config, False, table) == [False]

    def test_prasa_yati_rescues_generic_failure(self, teyta_config, table):
        # క vs చ fails letter congruence, but both first vowels are
        # hraswa and the second aksharams share the skeleton మ.
        rows = [teyta_row([("క", "|"), ("మి", "|")], [("చ", "|"), ("మా", "U")])]
        assert prasa_yati_check(rows, "teytageethi", teyta_config, False, table) == [True]

    def test_only_generic_disables_rescue(self, teyta_config, table):
        rows = [teyta_row([("క", "|"), ("మి", "|")], [("చ", "|"), ("మా", "U")])]
        assert prasa_yati_check(rows, "teytageethi", teyta_config, True, table) == [False]

    def test_rescue_blocked_by_vowel_length(self, teyta_config, table):
        rows = [teyta_row([("కి", "|"), ("మి", "|")], [("చా", "U"), ("మా", "U")])]
        assert prasa_yati_check(rows, "teytageethi", teyta_config, False, table) == [False]

    def test_rescue_blocked_by_skeleton(self, teyta_config, table):
        rows = [teyta_row([("క", "|"), ("మి", "|")], [("చ", "|"), ("తా", "U")])]
        assert prasa_yati_check(rows, "teytageethi", teyta_config, False, table) == [False]

    def test_only_generic_maps_yati_check(self, teyta_config, table):
        rows = [
            teyta_row(PASSING, PASSING),
            teyta_row([("తీ", "U")], PASSING),  # degenerate
            teyta_row([("క", "|"), ("మి", "|")], [("చ", "|"), ("మా", "U")]),
        ]
        verdicts = prasa_yati_check(rows, "teytageethi", teyta_config, True, table)
        assert verdicts == [True, False, False]
        assert len(verdicts) == len(rows)

    def test_kandamu_checks_only_yati_paadalu(self, table):
        config = load_config("kandamu")
        short = [cell(PASSING, "GAA")] * 3  # rows 1 and 3: never examined
        passing_row = [
            cell(PASSING, "GAA"),
            cell(PASSING, "GAA"),
            cell([("తి", "|"), ("తీ", "U"), ("తి", "|")], "JA"),
            cell(PASSING, "GAA"),
            cell(PASSING, "GAA"),
        ]
        degenerate_row = [
            cell([("తీ", "U")], "GAA"),
            cell(PASSING, "GAA"),
            cell(PASSING, "GAA"),
            cell(PASSING, "GAA"),
            cell(PASSING, "GAA"),
        ]
        rows = [short, passing_row, short, degenerate_row]
        verdicts = prasa_yati_check(rows, "kandamu", config, False, table)
        assert verdicts == [True, False]

    def test_config_shape_error_on_short_row(self, teyta_config, table):
        rows = [[cell(PASSING), cell(PASSING)]]  # yati sthanam needs 4 cells
        with pytest.raises(ConfigShapeError):
            prasa_yati_check(rows, "teytageethi", teyta_config, False, table)

    def test_offset_within_truncated_cell_still_checks(self, table):
        # champakamaala reads the yati cell at offset 1; a two-token cell
        # truncated at the stream's end still resolves it.
        config = load_config("champakamaala")
        row = [
            cell(PASSING, "NA"),
            cell(PASSING, "JA"),
            cell(PASSING, "BHA"),
            cell([("తి", "|"), ("తీ", "U")], "JA"),
            cell(PASSING, "JA"),
            cell(PASSING, "JA"),
            cell(PASSING, "RA"),
        ]
        verdicts = prasa_yati_check([row], "champakamaala", config, True, table)
        assert verdicts == [True]

    def test_offset_beyond_truncated_cell_is_degenerate(self, teyta_config, table):
        import dataclasses

        config = dataclasses.replace(teyta_config, yati_sthanam=(4, 2))
        rows = [teyta_row(PASSING, PASSING)]  # yati cell has two tokens
        assert prasa_yati_check(rows, "teytageethi", config, False, table) == [False]
