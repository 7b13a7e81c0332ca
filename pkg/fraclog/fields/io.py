"""Flat binary container for grid fields.

Layout (all little-endian):
    int64 dim | int64 N | float64 L | N^d complex128 samples (interleaved re, im)
"""

import logging
from pathlib import Path

import numpy as np

from fraclog.errors import DomainError, FieldFormatError
from fraclog.fields.grid import GridField, make_field

logger = logging.getLogger(__name__)

_HEADER_BYTES = 24


def encode_field(field_: GridField) -> bytes:
    """Serialize a grid field to bytes."""
    header = np.array([field_.dim, field_.points_per_axis], dtype="<i8").tobytes()
    header += np.array([field_.half_width], dtype="<f8").tobytes()
    return header + np.ascontiguousarray(field_.samples, dtype="<c16").tobytes()


def decode_field(blob: bytes) -> GridField:
    """Parse bytes produced by :func:`encode_field`.

    Raises:
        FieldFormatError: If the header or payload size is inconsistent
    """
    if len(blob) < _HEADER_BYTES:
        raise FieldFormatError(f"field container too short: {len(blob)} bytes")
    dim, points = (int(v) for v in np.frombuffer(blob, dtype="<i8", count=2))
    half_width = float(np.frombuffer(blob, dtype="<f8", count=1, offset=16)[0])
    if not 1 <= dim <= 3 or points < 1:
        raise FieldFormatError(f"invalid header: dim={dim}, N={points}")
    expected = _HEADER_BYTES + 16 * points**dim
    if len(blob) != expected:
        raise FieldFormatError(f"payload size mismatch: expected {expected} bytes, got {len(blob)}")
    samples = np.frombuffer(blob, dtype="<c16", offset=_HEADER_BYTES).reshape((points,) * dim)
    try:
        return make_field(dim, half_width, points, samples)
    except DomainError as e:
        raise FieldFormatError(f"invalid field contents: {e}") from e


def save_field(field_: GridField, path: str | Path) -> None:
    """Write a field container to disk."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(encode_field(field_))
    logger.debug(f"Wrote {field_.resolution} field to {path}")


def load_field(path: str | Path) -> GridField:
    """Read a field container from disk.

    Raises:
        FieldFormatError: If the file is malformed
    """
    try:
        blob = Path(path).read_bytes()
    except OSError as e:
        raise FieldFormatError(f"Cannot read {path}: {e}") from e
    return decode_field(blob)
