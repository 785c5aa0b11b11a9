from __future__ import annotations

import pytest

from shared.constants import FIXTURE_DIR
from shared.validation import UploadValidationError, validate_instance_upload


def test_validate_upload_accepts_fixture() -> None:
    content = (FIXTURE_DIR / "square_radon.tvb1").read_bytes()
    text, instance = validate_instance_upload("square.tvb1", content)
    assert text.startswith("tvb1\n")
    assert instance.num_vertices == 4
    assert not instance.is_combinatorial


def test_validate_upload_rejects_wrong_extension() -> None:
    with pytest.raises(UploadValidationError, match="allowed"):
        validate_instance_upload("points.csv", b"1,2")


def test_validate_upload_rejects_binary_and_empty_files() -> None:
    with pytest.raises(UploadValidationError, match="UTF-8"):
        validate_instance_upload("points.tvb1", b"\xff\xfe\x00")
    with pytest.raises(UploadValidationError, match="empty"):
        validate_instance_upload("points.tvb1", b"  \n")


def test_validate_upload_rejects_oversized_files() -> None:
    with pytest.raises(UploadValidationError, match="exceeds"):
        validate_instance_upload("points.txt", b"#" * 70_000)


def test_validate_upload_reports_format_errors_with_lines() -> None:
    content = b"tvb1\nd 1\nr 2\nm 1\ncaps 3\npoints 1\n1 0\n"
    with pytest.raises(UploadValidationError, match="line 5"):
        validate_instance_upload("points.tvb1", content)


def test_validate_upload_rejects_high_dimensions() -> None:
    content = b"tvb1\nd 7\nr 2\nm 1\ncaps 1\npoints 1\n1 0 0 0 0 0 0 0\n"
    with pytest.raises(UploadValidationError, match="d exceeds"):
        validate_instance_upload("points.tvb1", content)
