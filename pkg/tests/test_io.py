from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import corpus_instance
from known_instances import (
    A_HASSE_EDGES,
    A_M1,
    B_HASSE_EDGES,
    B_M,
    INSTANCE_A,
    INSTANCE_B,
)
from spas import (
    HasseDiagram,
    Matching,
    ParseError,
    ValidationReport,
    build_hasse,
    emit_dot,
    enumerate_all,
    parse_instance_file,
    parse_matching_file,
    serialize_instance,
    serialize_matching,
)

DATA = Path(__file__).parent / "data"


class TestInstanceFiles:
    def test_parse_known_file_matches_programmatic_instance(self):
        parsed = parse_instance_file((DATA / "instance_a.spa").read_text())
        assert parsed == INSTANCE_A

    def test_empty_file_is_empty_instance(self):
        parsed = parse_instance_file("")
        assert parsed.num_students == 0
        assert parsed.num_projects == 0
        parsed = parse_instance_file("# only a comment\n\n")
        assert parsed.num_lecturers == 0

    def test_serialize_parse_round_trip_bytes(self):
        for path in ("instance_a.spa", "instance_b.spa"):
            text = (DATA / path).read_text()
            assert serialize_instance(parse_instance_file(text)) == text

    def test_comments_blanks_and_order_tolerated(self):
        text = (DATA / "instance_b.spa").read_text()
        lines = text.splitlines()
        shuffled = lines[:3] + lines[3:][::-1]  # entity lines reversed
        noisy = "\n# noise\n".join(shuffled) + "\n"
        assert parse_instance_file(noisy) == INSTANCE_B

    def test_semantic_errors_deferred_to_validation(self):
        report = parse_instance_file((DATA / "instance_a_bad.spa").read_text())
        assert isinstance(report, ValidationReport)
        assert any(v.rule == "capacity-bound" for v in report.violations)

    @pytest.mark.parametrize("text,fragment", [
        ("students 2\nprojects x\n", "count"),
        ("students 1\nprojects 1\nlecturers 1\ns1 p1\n", "':'"),
        ("s1 : p1\n", "header"),
        ("students 1\nprojects 1\nlecturers 1\nq1 : p1\n", "unrecognised"),
        ("students 0\nprojects 1\nlecturers 1\np1 : capacity 1 lecturer l1\n"
         "l1 : capacity 1 :\np1 : capacity 1 lecturer l1\n", "duplicate"),
        ("students 1\nprojects 0\nlecturers 0\n", "missing line for s1"),
        ("students 1\nstudents 1\n", "duplicate"),
    ])
    def test_syntax_errors(self, text, fragment):
        with pytest.raises(ParseError) as err:
            parse_instance_file(text)
        assert fragment in str(err.value)

    def test_error_carries_line_number(self):
        with pytest.raises(ParseError) as err:
            parse_instance_file(
                "students 1\nprojects 1\nlecturers 1\ns1 : bad\n")
        assert err.value.line == 4
        assert err.value.column is not None

    @given(st.integers(1, 10**6))
    @settings(max_examples=80, deadline=None)
    def test_round_trip_on_generated_instances(self, seed):
        instance = corpus_instance(seed, 7, 6, 3)
        assert parse_instance_file(serialize_instance(instance)) == instance


class TestMatchingFiles:
    def test_parse_known_matching(self):
        text = (DATA / "a_m1.match").read_text()
        assert parse_matching_file(text, INSTANCE_A) == A_M1

    def test_empty_file_empty_matching(self):
        assert parse_matching_file("", INSTANCE_A) == Matching(())

    def test_unassigned_marker_and_omission(self):
        text = "s1 p1\ns2 -\n"
        assert parse_matching_file(text, INSTANCE_A) == Matching(((1, 1),))

    def test_round_trip_all_table_rows(self):
        for m in B_M:
            assert parse_matching_file(serialize_matching(m), INSTANCE_B) == m

    def test_unknown_ids_rejected(self):
        with pytest.raises(ParseError):
            parse_matching_file("s9 p1\n", INSTANCE_A)
        with pytest.raises(ParseError):
            parse_matching_file("s1 p9\n", INSTANCE_A)

    def test_duplicate_student_rejected(self):
        with pytest.raises(ParseError):
            parse_matching_file("s1 p1\ns1 p2\n", INSTANCE_A)
        with pytest.raises(ParseError):
            parse_matching_file("s1 -\ns1 p2\n", INSTANCE_A)


class TestDot:
    def test_table_instance_dot(self):
        diagram = build_hasse(INSTANCE_B, enumerate_all(INSTANCE_B))
        dot = emit_dot(diagram)
        edge_lines = [l for l in dot.splitlines() if "->" in l]
        assert len(edge_lines) == 8
        assert dot.startswith("digraph hasse {")
        assert dot.endswith("}\n")
        for a, b in B_HASSE_EDGES:
            assert f"  M{a + 1} -> M{b + 1};" in dot

    def test_singleton_dot(self):
        diagram = HasseDiagram(nodes=(A_M1,), edges=())
        dot = emit_dot(diagram)
        assert "M1;" in dot
        assert "->" not in dot

    def test_small_instance_dot_is_the_diamond(self):
        diagram = build_hasse(INSTANCE_A, enumerate_all(INSTANCE_A))
        dot = emit_dot(diagram)
        edge_lines = [l.strip() for l in dot.splitlines() if "->" in l]
        assert edge_lines == [
            f"M{a + 1} -> M{b + 1};" for a, b in A_HASSE_EDGES
        ]

    def test_deterministic(self):
        diagram = build_hasse(INSTANCE_B, enumerate_all(INSTANCE_B))
        assert emit_dot(diagram) == emit_dot(diagram)
