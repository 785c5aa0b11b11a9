"""Line-oriented text formats: ``tvb1`` instances and ``part1`` partitions.

Both formats are UTF-8, ``#`` starts a comment line, rationals are written as
``p/q`` or bare integers. Renderers emit the canonical form, so
``render(parse(text)) == text`` for canonical files.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from shared.constants import INSTANCE_TAG, PARTITION_TAG
from shared.instance import CapVector, Coloring, Instance, PointConfiguration, RainbowPartition


RATIONAL_TOKEN = re.compile(r"-?[0-9]+(/[0-9]+)?")
INTEGER_TOKEN = re.compile(r"-?[0-9]+")


class FormatError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.reason = message


def parse_rational(token: str, line: int) -> Fraction:
    if not RATIONAL_TOKEN.fullmatch(token):
        raise FormatError(f"not a rational number: {token!r}", line)
    try:
        if "/" in token:
            num, den = token.split("/", 1)
            value = Fraction(int(num), int(den))
        else:
            value = Fraction(int(token))
    except ZeroDivisionError as exc:
        raise FormatError(f"not a rational number: {token!r}", line) from exc
    return value


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    return rows


def _int(token: str, line: int, what: str) -> int:
    if not INTEGER_TOKEN.fullmatch(token):
        raise FormatError(f"{what} must be an integer, got {token!r}", line)
    return int(token)


def _keyed(rows: list[tuple[int, list[str]]], index: int, key: str, last_line: int) -> tuple[int, list[str]]:
    if index >= len(rows):
        raise FormatError(f"missing '{key}' line", last_line)
    lineno, tokens = rows[index]
    if tokens[0] != key:
        raise FormatError(f"expected '{key}' line, got {tokens[0]!r}", lineno)
    return lineno, tokens[1:]


def parse_instance(text: str) -> Instance:
    rows = _content_lines(text)
    last_line = max(len(text.splitlines()), 1)
    if not rows or rows[0][1] != [INSTANCE_TAG]:
        raise FormatError(f"expected header '{INSTANCE_TAG}'", rows[0][0] if rows else 1)

    scalars: dict[str, int] = {}
    for offset, key in enumerate(("d", "r", "m"), start=1):
        lineno, values = _keyed(rows, offset, key, last_line)
        if len(values) != 1:
            raise FormatError(f"'{key}' takes exactly one integer", lineno)
        scalars[key] = _int(values[0], lineno, key)
    d, r, m = scalars["d"], scalars["r"], scalars["m"]
    if d < 1:
        raise FormatError("d must be >= 1", rows[1][0])
    if r < 2:
        raise FormatError("r must be >= 2", rows[2][0])
    if m < 1:
        raise FormatError("m must be >= 1", rows[3][0])

    caps_line, cap_tokens = _keyed(rows, 4, "caps", last_line)
    if len(cap_tokens) != m:
        raise FormatError(f"expected {m} caps, got {len(cap_tokens)}", caps_line)
    caps = [_int(token, caps_line, "cap") for token in cap_tokens]
    for index, cap in enumerate(caps):
        if not 1 <= cap <= r:
            raise FormatError(
                f"cap l_{index + 1} = {cap} violates the CapVector bound 1 <= l_i <= r = {r}",
                caps_line,
            )

    cursor = 5
    color_sizes: list[int] | None = None
    if cursor < len(rows) and rows[cursor][1][0] == "colorsizes":
        sizes_line, size_tokens = rows[cursor][0], rows[cursor][1][1:]
        if len(size_tokens) != m:
            raise FormatError(f"expected {m} colour sizes, got {len(size_tokens)}", sizes_line)
        color_sizes = [_int(token, sizes_line, "colour size") for token in size_tokens]
        if any(size < 1 for size in color_sizes):
            raise FormatError("colour sizes must be >= 1", sizes_line)
        cursor += 1

    points_line, point_tokens = _keyed(rows, cursor, "points", last_line)
    if len(point_tokens) != 1:
        raise FormatError("'points' takes exactly one integer", points_line)
    count = _int(point_tokens[0], points_line, "point count")
    if count < 0:
        raise FormatError("point count must be >= 0", points_line)
    cursor += 1

    body = rows[cursor:]
    if len(body) != count:
        where = body[count][0] if len(body) > count else last_line
        raise FormatError(f"expected {count} point lines, found {len(body)}", where)

    if count == 0:
        if color_sizes is None:
            raise FormatError("'points 0' requires a 'colorsizes' line", points_line)
        coloring = Coloring.from_sizes(color_sizes)
        return Instance(d=d, r=r, coloring=coloring, caps=CapVector(tuple(caps)))
    if color_sizes is not None:
        raise FormatError("'colorsizes' is only allowed with 'points 0'", points_line)

    colors: list[int] = []
    coords: list[tuple[Fraction, ...]] = []
    for lineno, tokens in body:
        color = _int(tokens[0], lineno, "colour")
        if not 1 <= color <= m:
            raise FormatError(f"colour {color} out of range [1, {m}]", lineno)
        if len(tokens) - 1 != d:
            raise FormatError(f"expected {d} coordinates, got {len(tokens) - 1}", lineno)
        colors.append(color - 1)
        coords.append(tuple(parse_rational(token, lineno) for token in tokens[1:]))

    try:
        coloring = Coloring(m=m, color_of=tuple(colors))
    except ValueError as exc:
        raise FormatError(str(exc), points_line) from exc
    return Instance(
        d=d,
        r=r,
        coloring=coloring,
        caps=CapVector(tuple(caps)),
        config=PointConfiguration(d=d, points=tuple(coords)),
    )


def render_instance(instance: Instance) -> str:
    lines = [
        INSTANCE_TAG,
        f"d {instance.d}",
        f"r {instance.r}",
        f"m {instance.coloring.m}",
        "caps " + " ".join(str(cap) for cap in instance.caps),
    ]
    if instance.config is None:
        lines.append("colorsizes " + " ".join(str(size) for size in instance.coloring.sizes))
        lines.append("points 0")
    else:
        lines.append(f"points {instance.num_vertices}")
        for color, point in zip(instance.coloring.color_of, instance.config.points):
            lines.append(" ".join([str(color + 1), *(format_rational(x) for x in point)]))
    return "\n".join(lines) + "\n"


def parse_partition(text: str) -> RainbowPartition:
    rows = _content_lines(text)
    if not rows or rows[0][1][0] != PARTITION_TAG or len(rows[0][1]) != 2:
        raise FormatError(f"expected header '{PARTITION_TAG} <r>'", rows[0][0] if rows else 1)
    header_line = rows[0][0]
    r = _int(rows[0][1][1], header_line, "r")
    if r < 1:
        raise FormatError("r must be >= 1", header_line)

    faces: list[tuple[int, ...]] = []
    witness: tuple[Fraction, ...] | None = None
    for lineno, tokens in rows[1:]:
        if tokens[0] == "witness":
            if witness is not None:
                raise FormatError("duplicate witness line", lineno)
            witness = tuple(parse_rational(token, lineno) for token in tokens[1:])
            continue
        if witness is not None:
            raise FormatError("the witness line must come last", lineno)
        face = tuple(_int(token, lineno, "vertex id") for token in tokens)
        if any(v < 0 for v in face):
            raise FormatError("vertex ids must be non-negative", lineno)
        if list(face) != sorted(set(face)):
            raise FormatError("face ids must be strictly ascending", lineno)
        faces.append(face)
    if len(faces) != r:
        raise FormatError(f"expected {r} faces, got {len(faces)}", header_line)
    return RainbowPartition(faces=tuple(faces), witness=witness)


def render_partition(partition: RainbowPartition) -> str:
    lines = [f"{PARTITION_TAG} {partition.r}"]
    lines.extend(" ".join(str(v) for v in face) for face in partition.faces)
    if partition.witness is not None:
        lines.append("witness " + " ".join(format_rational(x) for x in partition.witness))
    return "\n".join(lines) + "\n"


def parse_int_list(text: str) -> list[int]:
    """Comma separated integers, as taken by ``--primes`` and ``--sizes``."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ValueError(f"expected a comma separated integer list, got {text!r}") from exc


def format_int_list(values: Sequence[int]) -> str:
    return ",".join(str(v) for v in values)
