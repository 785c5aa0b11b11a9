"""Planar figures of an instance and, optionally, one of its partitions."""
from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction
from typing import Sequence

from shared.constants import SVG_CANVAS_WIDTH, SVG_PALETTE
from shared.instance import Instance, Point, RainbowPartition

POINT_RADIUS_PX = 4
MARGIN = Fraction(1, 20)
FACE_FILL = "#7f7f7f"
FACE_STROKE = "#333333"


def _num(value: Fraction | float) -> str:
    text = f"{float(value):.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Sequence[Point]) -> list[Point]:
    """Monotone chain, counter-clockwise, without repeated or collinear points."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _screen(p: Point) -> tuple[str, str]:
    # y grows downward in SVG
    return _num(p[0]), _num(-p[1])


def emit_svg(instance: Instance, partition: RainbowPartition | None = None) -> str:
    if instance.d != 2 or instance.config is None:
        raise ValueError("figures are only drawn for planar instances with coordinates (d = 2)")
    points = instance.config.points
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    if partition is not None and partition.witness is not None:
        xs.append(partition.witness[0])
        ys.append(partition.witness[1])
    width = max(xs) - min(xs) or Fraction(1)
    height = max(ys) - min(ys) or Fraction(1)
    pad_x = width * MARGIN
    pad_y = height * MARGIN
    view_w = width + 2 * pad_x
    view_h = height + 2 * pad_y
    min_x = min(xs) - pad_x
    min_y = -max(ys) - pad_y
    unit = view_w / SVG_CANVAS_WIDTH
    radius = POINT_RADIUS_PX * unit

    root = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=str(SVG_CANVAS_WIDTH),
        height=str(max(1, round(SVG_CANVAS_WIDTH * view_h / view_w))),
        viewBox=" ".join(_num(v) for v in (min_x, min_y, view_w, view_h)),
    )

    if partition is not None:
        faces = ET.SubElement(root, "g", {"class": "faces"})
        for index, face in enumerate(partition.faces):
            hull = convex_hull([points[v] for v in face])
            style = {
                "class": "face",
                "data-face": str(index + 1),
                "fill": FACE_FILL,
                "fill-opacity": "0.3",
                "stroke": FACE_STROKE,
                "stroke-width": _num(unit),
            }
            if len(hull) >= 3:
                coords = " ".join(",".join(_screen(p)) for p in hull)
                ET.SubElement(faces, "polygon", {"points": coords, **style})
            elif len(hull) == 2:
                (x1, y1), (x2, y2) = _screen(hull[0]), _screen(hull[1])
                ET.SubElement(faces, "line", {"x1": x1, "y1": y1, "x2": x2, "y2": y2, **style})
            else:
                cx, cy = _screen(hull[0])
                ET.SubElement(faces, "circle", {"cx": cx, "cy": cy, "r": _num(2 * radius), **style})

    dots = ET.SubElement(root, "g", {"class": "points"})
    for vertex, point in enumerate(points):
        color = instance.coloring.color_of[vertex]
        cx, cy = _screen(point)
        ET.SubElement(
            dots,
            "circle",
            {
                "cx": cx,
                "cy": cy,
                "r": _num(radius),
                "fill": SVG_PALETTE[color % len(SVG_PALETTE)],
                "data-vertex": str(vertex),
                "data-color": str(color + 1),
            },
        )

    if partition is not None and partition.witness is not None:
        wx, wy = partition.witness[0], -partition.witness[1]
        arm = 2 * radius
        d = (
            f"M{_num(wx - arm)} {_num(wy - arm)}L{_num(wx + arm)} {_num(wy + arm)}"
            f"M{_num(wx - arm)} {_num(wy + arm)}L{_num(wx + arm)} {_num(wy - arm)}"
        )
        ET.SubElement(
            root,
            "path",
            {"class": "witness", "d": d, "stroke": "#000000", "stroke-width": _num(unit), "fill": "none"},
        )
    return ET.tostring(root, encoding="unicode") + "\n"
