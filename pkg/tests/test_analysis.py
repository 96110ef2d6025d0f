import json

import pytest

from pctorus import (
    ChordEntry,
    LocusKind,
    ParseError,
    coefficient_ranking,
    indicator,
    parse_sequence,
    recommend_selection,
    report_csv_tables,
    report_json,
    run_analysis,
    serialize_entries,
)
from pctorus.catalog import consonant_triads


class TestParser:
    def test_plain_triad(self):
        entries = parse_sequence("Cmaj: 0,4,7\n")
        assert entries == [ChordEntry("Cmaj", {0: 1.0, 4: 1.0, 7: 1.0})]

    def test_weighted_tonic(self):
        entries = parse_sequence("CmajDbl: 0:2,4,7\n")
        assert entries[0].weights == {0: 2.0, 4: 1.0, 7: 1.0}

    def test_dominant_seventh(self):
        entries = parse_sequence("G7: 7,11,2,5\n")
        assert entries[0].weights == {7: 1.0, 11: 1.0, 2: 1.0, 5: 1.0}

    def test_comments_and_blank_lines(self):
        text = "# fixture\n\nCmaj: 0,4,7  # tonic\n"
        assert len(parse_sequence(text)) == 1

    def test_mod_reduction_accumulates(self):
        entries = parse_sequence("X: 12,0\n")
        assert entries[0].weights == {0: 2.0}

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("Cmaj 0,4,7\n", "line 1"),
            ("Cmaj: 0,x,7\n", "bad pitch class"),
            ("Cmaj: 0:-1,4\n", "negative weight"),
            ("A: 0\nA: 1\n", "duplicate label"),
            (": 0,4\n", "empty label"),
            ("A: 0,,4\n", "empty pitch-class"),
        ],
    )
    def test_errors(self, text, fragment):
        with pytest.raises(ParseError, match=fragment):
            parse_sequence(text)

    def test_round_trip(self):
        text = "Cmaj: 0,4,7\nCmajDbl: 0:2,4,7\nG7: 2,5,7,11\n"
        entries = parse_sequence(text)
        assert parse_sequence(serialize_entries(entries)) == entries


class TestRecommendSelection:
    def test_consonant_triads(self):
        sel = recommend_selection([d for _, d in consonant_triads()])
        assert {sel.j, sel.k} == {3, 5}

    def test_diminished_seventh_forces_four(self):
        chords = [d for _, d in consonant_triads()] + [indicator({0, 3, 6, 9})]
        ranking = coefficient_ranking(chords)
        assert ranking[0][0] == 4
        sel = recommend_selection(chords)
        assert sel.j == 4
        assert sel.k not in (3, 5)

    def test_augmented_alone(self):
        sel = recommend_selection([indicator({0, 4, 8})])
        assert {sel.j, sel.k} == {3, 6}


class TestReport:
    def test_rows_align_with_input(self):
        entries = parse_sequence("A: 0,4,7\nB: 0,3,7\nC: 0,4,8\n")
        report = run_analysis(entries, selection=None, include_distances=True)
        assert report.labels == ["A", "B", "C"]
        assert len(report.magnitude_rows) == 3
        assert report.distances.shape == (3, 3)

    def test_locus_kind_matches_zero_pattern(self):
        from pctorus import SELECTION_35

        entries = parse_sequence("pt: 0,4,7\ncirc: 0,4,8\nfull: 0,3,6,9\n")
        report = run_analysis(entries, selection=SELECTION_35)
        kinds = [locus.kind for locus in report.loci]
        assert kinds == [
            LocusKind.POINT,
            LocusKind.CIRCLE_FREE_K,
            LocusKind.FULL_TORUS,
        ]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            run_analysis([])

    def test_csv_determinism(self):
        entries = parse_sequence("A: 0,4,7\nB: 2,6,9\n")
        one = report_csv_tables(run_analysis(entries, include_distances=True))
        two = report_csv_tables(run_analysis(entries, include_distances=True))
        assert one == two

    def test_phase_csv_blank_for_undefined(self):
        entries = parse_sequence("aug: 0,4,8\n")
        table = report_csv_tables(run_analysis(entries))["phases"]
        row = table.splitlines()[1].split(",")
        # a_1, a_2, a_4, a_5 vanish on the augmented triad
        assert row[1] == row[2] == row[4] == row[5] == ""
        assert row[3] == "0.000000"

    def test_json_full_precision(self):
        entries = parse_sequence("A: 0,3,7\n")
        doc = json.loads(report_json(run_analysis(entries)))
        chord = doc["chords"][0]
        assert chord["label"] == "A"
        assert chord["phases"][3] == pytest.approx(1.1071487177940909, abs=1e-15)

    def test_trajectory_samples(self):
        entries = parse_sequence("A: 0,4,7\n")
        report = run_analysis(entries, path_bases=entries, path_resolution=24)
        assert len(report.trajectories["A"]) == 24
        table = report_csv_tables(report)["path_A"]
        assert table.splitlines()[0] == "t,arg_a3,arg_a5"
