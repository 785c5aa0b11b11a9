from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from shared.constants import FIXTURE_DIR
from shared.formats import parse_instance
from shared.instance import RainbowPartition
from worker.search import find_partition
from worker.svg import convex_hull, emit_svg

NS = {"svg": "http://www.w3.org/2000/svg"}


def load(name: str):
    return parse_instance((FIXTURE_DIR / f"{name}.tvb1").read_text(encoding="utf-8"))


def test_convex_hull_drops_interior_and_collinear_points() -> None:
    F = Fraction
    points = [(F(0), F(0)), (F(2), F(0)), (F(1), F(0)), (F(2), F(2)), (F(0), F(2)), (F(1), F(1))]
    assert convex_hull(points) == [(0, 0), (2, 0), (2, 2), (0, 2)]
    assert convex_hull([(F(1), F(1)), (F(1), F(1))]) == [(1, 1)]


def test_square_figure_with_partition() -> None:
    instance = load("square_radon")
    partition = find_partition(instance)
    root = ET.fromstring(emit_svg(instance, partition))
    assert root.get("viewBox") == "-0.1 -2.1 2.2 2.2"
    assert root.get("width") == "800"
    assert root.get("height") == "800"

    groups = root.findall("svg:g", NS)
    assert [g.get("class") for g in groups] == ["faces", "points"]
    lines = groups[0].findall("svg:line", NS)
    assert len(lines) == 2
    assert all(line.get("fill-opacity") == "0.3" for line in lines)

    dots = groups[1].findall("svg:circle", NS)
    assert [dot.get("data-color") for dot in dots] == ["1", "2", "3", "4"]
    assert len({dot.get("fill") for dot in dots}) == 4
    assert (dots[2].get("cx"), dots[2].get("cy")) == ("2", "-2")
    # 4 canvas pixels of an 800 pixel canvas spanning 2.2 user units
    assert all(dot.get("r") == "0.011" for dot in dots)

    witness = root.find("svg:path", NS)
    assert witness is not None and witness.get("class") == "witness"


def test_figure_without_partition_has_only_points() -> None:
    root = ET.fromstring(emit_svg(load("coincident_pair")))
    assert [g.get("class") for g in root.findall("svg:g", NS)] == ["points"]
    assert root.find("svg:path", NS) is None


def test_triangle_face_becomes_a_polygon() -> None:
    instance = load("square_radon")
    partition = RainbowPartition(faces=((0, 1, 2), (3,)))
    root = ET.fromstring(emit_svg(instance, partition))
    faces = root.find("svg:g", NS)
    assert len(faces.findall("svg:polygon", NS)) == 1
    assert len(faces.findall("svg:circle", NS)) == 1


def test_figures_are_deterministic() -> None:
    instance = load("square_radon")
    partition = find_partition(instance)
    assert emit_svg(instance, partition) == emit_svg(instance, partition)


def test_only_planar_instances_are_drawn() -> None:
    with pytest.raises(ValueError, match="d = 2"):
        emit_svg(load("interleaved_line"))
    with pytest.raises(ValueError, match="d = 2"):
        emit_svg(load("worked_example"))
