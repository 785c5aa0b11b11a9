from __future__ import annotations

from fractions import Fraction

import pytest

from shared.constants import FIXTURE_DIR
from shared.formats import (
    FormatError,
    format_int_list,
    format_rational,
    parse_instance,
    parse_int_list,
    parse_partition,
    parse_rational,
    render_instance,
    render_partition,
)

HEADER = "tvb1\nd 1\nr 2\nm 2\ncaps 1 2\n"


@pytest.mark.parametrize("path", sorted(FIXTURE_DIR.glob("*.tvb1")), ids=lambda p: p.stem)
def test_fixture_instances_are_canonical(path) -> None:
    text = path.read_text(encoding="utf-8")
    assert render_instance(parse_instance(text)) == text


def test_partition_fixture_is_canonical() -> None:
    text = (FIXTURE_DIR / "worked_example.part1").read_text(encoding="utf-8")
    partition = parse_partition(text)
    assert partition.faces == ((0, 5, 11), (4, 8, 13), (9, 10))
    assert render_partition(partition) == text


def test_rationals() -> None:
    assert parse_rational("5/2", 1) == Fraction(5, 2)
    assert parse_rational("-4/6", 1) == Fraction(-2, 3)
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(7) == "7"
    with pytest.raises(FormatError, match="not a rational"):
        parse_rational("1/0", 3)
    with pytest.raises(FormatError, match="not a rational"):
        parse_rational("0.5", 3)
    for token in ("1_000", "+3", "3/+4", "1/-2", "\u0663"):
        with pytest.raises(FormatError, match="not a rational"):
            parse_rational(token, 4)


def test_integer_fields_reject_python_only_spellings() -> None:
    with pytest.raises(FormatError, match=r"line 5: cap must be an integer, got '\+1'"):
        parse_instance("tvb1\nd 1\nr 2\nm 2\ncaps +1 2\npoints 2\n1 0\n2 1\n")
    with pytest.raises(FormatError, match="vertex id must be an integer"):
        parse_partition("part1 2\n0\n1_0\n")


def test_comments_are_skipped_but_counted() -> None:
    text = "# two colours on a line\n" + HEADER + "points 2\n1 0\n# second\n2 1/3\n"
    instance = parse_instance(text)
    assert instance.coloring.color_of == (0, 1)
    assert instance.config.points[1] == (Fraction(1, 3),)
    with pytest.raises(FormatError) as excinfo:
        parse_instance("# comment\n" + HEADER + "points 2\n1 0\n3 1\n")
    assert excinfo.value.line == 9
    assert "out of range" in excinfo.value.reason


def test_instance_errors_name_the_line() -> None:
    with pytest.raises(FormatError, match="line 1: expected header"):
        parse_instance("tvb2\n")
    with pytest.raises(FormatError, match="line 5: .*CapVector bound"):
        parse_instance("tvb1\nd 1\nr 2\nm 1\ncaps 3\npoints 1\n1 0\n")
    with pytest.raises(FormatError, match="expected 2 point lines, found 1"):
        parse_instance(HEADER + "points 2\n1 0\n")
    with pytest.raises(FormatError, match="expected 1 coordinates"):
        parse_instance(HEADER + "points 2\n1 0 0\n2 1\n")
    with pytest.raises(FormatError, match="requires a 'colorsizes' line"):
        parse_instance(HEADER + "points 0\n")
    with pytest.raises(FormatError, match="C_2 is empty"):
        parse_instance(HEADER + "points 2\n1 0\n1 1\n")
    with pytest.raises(FormatError, match="missing 'points' line"):
        parse_instance(HEADER)


def test_combinatorial_instance() -> None:
    instance = parse_instance(HEADER + "colorsizes 2 3\npoints 0\n")
    assert instance.is_combinatorial
    assert instance.coloring.sizes == (2, 3)
    with pytest.raises(FormatError, match="only allowed with 'points 0'"):
        parse_instance(HEADER + "colorsizes 1 1\npoints 2\n1 0\n2 1\n")


def test_partition_parsing_rules() -> None:
    partition = parse_partition("part1 2\n3\n0 4\nwitness 1\n")
    assert partition.faces == ((0, 4), (3,))
    assert partition.witness == (Fraction(1),)
    with pytest.raises(FormatError, match="strictly ascending"):
        parse_partition("part1 2\n4 0\n3\n")
    with pytest.raises(FormatError, match="must come last"):
        parse_partition("part1 2\n0\nwitness 1\n3\n")
    with pytest.raises(FormatError, match="expected 2 faces, got 1"):
        parse_partition("part1 2\n0\n")
    with pytest.raises(FormatError, match="duplicate witness"):
        parse_partition("part1 1\n0\nwitness 1\nwitness 2\n")


def test_int_lists() -> None:
    assert parse_int_list("2,3,5") == [2, 3, 5]
    assert parse_int_list("4, 4,") == [4, 4]
    assert format_int_list([5, 5, 1]) == "5,5,1"
    with pytest.raises(ValueError, match="comma separated"):
        parse_int_list("2;3")


def test_committed_fixtures_match_the_generator() -> None:
    from scripts.generate_fixtures import generate_all_fixtures

    for filename, text in generate_all_fixtures().items():
        assert (FIXTURE_DIR / filename).read_text(encoding="utf-8") == text
