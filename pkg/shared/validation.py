from __future__ import annotations

from pathlib import Path

from shared.constants import LIMITS, UPLOAD_ALLOWED_EXTENSIONS
from shared.formats import FormatError, parse_instance
from shared.instance import Instance


class UploadValidationError(ValueError):
    pass


def validate_instance_upload(filename: str, content: bytes) -> tuple[str, Instance]:
    """Decode and parse an uploaded ``tvb1`` file; returns the text and the instance."""
    extension = Path(filename).suffix.lower()
    if extension not in UPLOAD_ALLOWED_EXTENSIONS:
        allowed = ", ".join(sorted(UPLOAD_ALLOWED_EXTENSIONS))
        raise UploadValidationError(f"Only {allowed} files are allowed")

    if len(content) > LIMITS["upload_max_bytes"]:
        raise UploadValidationError(f"File exceeds {LIMITS['upload_max_bytes']} bytes")

    try:
        text = content.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise UploadValidationError("File must be UTF-8 text") from exc

    if not text.strip():
        raise UploadValidationError("File is empty")

    try:
        instance = parse_instance(text)
    except (FormatError, ValueError) as exc:
        raise UploadValidationError(f"Invalid instance: {exc}") from exc

    if instance.d > LIMITS["ambient_dim_max"]:
        raise UploadValidationError(f"d exceeds {LIMITS['ambient_dim_max']}")
    if instance.num_vertices > LIMITS["instance_points_max"]:
        raise UploadValidationError(
            f"Too many points: {instance.num_vertices} > {LIMITS['instance_points_max']}"
        )
    return text, instance
