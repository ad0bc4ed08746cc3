"""Progression parsing and analysis, commuting squares, and parsimony."""

import pytest

from tonnetz.analysis import (
    Progression,
    analyze,
    beethoven_sequence,
    contextual_displacements,
    find_parsimony_row,
    fixture_path,
    format_analysis,
    format_parsimony,
    ives_dual_motion_report,
    list_fixtures,
    load_progression,
    parse_progression,
    parsimony_study,
    verify_square,
)
from tonnetz.pitchspace import TIElement
from tonnetz.transforms import DihedralNormalForm, PlrWord
from tonnetz.triads import ChordParseError, TRIADS, parse_name


class TestParsing:
    def test_tokens_split_on_whitespace_and_newlines(self):
        p = parse_progression("C a\nF   d")
        assert p.names() == ("C", "a", "F", "d")
        assert len(p) == 4

    def test_comment_lines_are_skipped(self):
        p = parse_progression("# a remark\nC G\n  # another\na")
        assert p.names() == ("C", "G", "a")

    def test_literals_mix_with_names(self):
        p = parse_progression("C <9,5,2>")
        assert p.names() == ("C", "d")

    def test_error_carries_line_and_column(self):
        with pytest.raises(ChordParseError) as info:
            parse_progression("C G\nd X e")
        assert info.value.token == "X"
        assert info.value.line == 2
        assert info.value.column == 3

    def test_empty_input_is_an_error(self):
        with pytest.raises(ChordParseError, match="no chords"):
            parse_progression("# only comments\n")

    def test_progression_must_be_nonempty(self):
        with pytest.raises(ValueError):
            Progression(())


class TestFixtures:
    def test_four_bundled_progressions(self):
        names = sorted(p.stem for p in list_fixtures())
        assert names == [
            "beethoven_ninth", "ives_religion", "pachelbel_canon", "wagner_grail",
        ]

    def test_fixture_path_resolves(self):
        assert fixture_path("pachelbel_canon").is_file()
        with pytest.raises(FileNotFoundError):
            fixture_path("missing_piece")

    def test_pachelbel_fixture_contents(self):
        p = load_progression(fixture_path("pachelbel_canon"))
        assert p.names() == ("D", "A", "b", "f#")
        assert p.source == "pachelbel_canon"


class TestAnalyze:
    def test_pachelbel_steps(self):
        steps = analyze(load_progression(fixture_path("pachelbel_canon")))
        assert [(str(s.ti), str(s.plr)) for s in steps] == [
            ("T_7", "s^11"),
            ("I_3", "s^2 t"),
            ("T_7", "s"),
        ]

    def test_wagner_first_step_is_t5_then_r(self):
        steps = analyze(load_progression(fixture_path("wagner_grail")))
        assert str(steps[0].ti) == "T_5"
        assert steps[1].plr == DihedralNormalForm(0, 1)  # A♭ chain hits L next

    def test_repeated_chord_yields_identities(self):
        c = parse_name("C")
        steps = analyze(Progression((c, c)))
        assert steps[0].ti == TIElement("T", 0)
        assert steps[0].plr == DihedralNormalForm(0, 0)

    def test_too_short(self):
        with pytest.raises(ValueError, match="at least two"):
            analyze(Progression((parse_name("C"),)))

    def test_each_step_maps_start_to_end(self):
        steps = analyze(beethoven_sequence())
        for s in steps:
            from tonnetz.transforms import ti_on_triad
            assert ti_on_triad(s.ti, s.start) == s.end
            assert s.plr.apply(s.start) == s.end

    def test_format_includes_alias_markers(self):
        steps = analyze(load_progression(fixture_path("wagner_grail")))
        text = format_analysis(steps)
        assert text.splitlines()[0].startswith("step")
        assert "t (= L)" in text

    def test_step_dict_shape(self):
        step = analyze(Progression((parse_name("C"), parse_name("G"))))[0]
        assert step.to_dict() == {
            "from": "C", "to": "G", "ti": "T_7", "plr": "s^11",
        }


class TestSquares:
    def test_pachelbel_square(self):
        report = verify_square(
            parse_name("D"), TIElement("T", 7), PlrWord.from_string("R")
        )
        assert report.corners() == ("D", "A", "b", "f#")
        assert report.commutes

    def test_wagner_square(self):
        report = verify_square(
            parse_name("Ab"), TIElement("T", 5), PlrWord.from_string("R")
        )
        assert report.corners() == ("G#", "C#", "f", "a#")
        assert report.commutes

    def test_ives_square(self):
        report = verify_square(
            parse_name("D"), TIElement("I", 6), PlrWord.from_string("LR")
        )
        assert report.corners() == ("D", "a", "G", "e")
        assert report.commutes

    def test_every_square_commutes(self):
        """Any horizontal T/I against any vertical PLR word, from any corner."""
        words = [PlrWord.from_string(w) for w in ("P", "L", "R", "LR", "RLP")]
        for horiz in (TIElement("T", 3), TIElement("I", 8)):
            for word in words:
                for triad in TRIADS[::5]:
                    assert verify_square(triad, horiz, word).commutes

    def test_render_mentions_commutation(self):
        report = verify_square(
            parse_name("D"), TIElement("T", 7), PlrWord.from_string("R")
        )
        assert "commutes: True" in report.render()


class TestBeethoven:
    def test_sequence_matches_the_bundled_fixture(self):
        computed = beethoven_sequence()
        fixture = load_progression(fixture_path("beethoven_ninth"))
        assert computed.triads == fixture.triads

    def test_first_five_and_last_entries(self):
        names = beethoven_sequence().names()
        assert names[:5] == ("C", "a", "F", "d", "A#")
        assert names[-1] == "C"
        assert len(names) == 25

    def test_visits_every_triad_once(self):
        triads = beethoven_sequence().triads
        assert len(set(triads[:-1])) == 24
        assert triads[0] == triads[-1]


class TestDualMotion:
    def test_report_passes(self):
        report = ives_dual_motion_report()
        assert report.passed
        assert report.major_shift == 5
        assert report.minor_shift == 7  # -5 mod 12
        assert report.example_major == ("D", "G")
        assert report.example_minor == ("a", "e")

    def test_render(self):
        text = ives_dual_motion_report().render()
        assert "up 5" in text
        assert "down 5" in text


@pytest.fixture(scope="module")
def rows():
    return parsimony_study()


class TestParsimony:
    def test_consonant_triad_displacements(self):
        assert contextual_displacements((0, 4, 7)) == (1, 1, 2)
        assert contextual_displacements((0, 3, 7)) == (1, 2, 1)

    def test_augmented_triad_is_fixed_by_all_three(self):
        assert contextual_displacements((0, 4, 8)) == (0, 0, 0)

    def test_clustered_chord_moves_far(self):
        assert contextual_displacements((0, 1, 3)) == (1, 4, 5)

    def test_twelve_classes_one_excluded(self, rows):
        assert len(rows) == 12
        excluded = [r for r in rows if r.excluded]
        assert len(excluded) == 1
        assert excluded[0].class_rep == (0, 4, 8)
        assert rows[-1].excluded

    def test_consonant_class_is_ranked_first_and_strictly_minimal(self, rows):
        first = rows[0]
        assert first.class_rep == (0, 3, 7)
        assert first.max_disp == 2
        assert rows[1].max_disp == 3  # strict: every other class is worse

    def test_ranked_rows_are_sorted(self, rows):
        keys = [(r.max_disp, r.sum_disp) for r in rows if not r.excluded]
        assert keys == sorted(keys)

    def test_membership_lookup(self, rows):
        row = find_parsimony_row(rows, (0, 4, 7))
        assert row is rows[0]
        assert row.member((0, 4, 7)).displacements == (1, 1, 2)
        with pytest.raises(ValueError):
            find_parsimony_row(rows, (0, 0, 1))

    def test_displacement_multiset_is_constant_on_each_class(self, rows):
        for row in rows:
            multisets = {tuple(sorted(m.displacements)) for m in row.members}
            assert len(multisets) == 1

    def test_consonant_multiset_is_1_1_2(self, rows):
        assert sorted(rows[0].displacements) == [1, 1, 2]

    def test_chord_013_strictly_worse_than_consonant(self, rows):
        worse = find_parsimony_row(rows, (0, 1, 3))
        assert worse.max_disp == 5
        assert worse.max_disp > rows[0].max_disp

    def test_formatting(self, rows):
        text = format_parsimony(rows)
        assert text.splitlines()[0].startswith("class")
        assert "<0,3,7>" in text
        assert "excluded (all voices fixed)" in text
