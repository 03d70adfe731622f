"""Fixed little-endian byte layout for canonical keys (see docs/ENCODING.md)."""

from __future__ import annotations

import struct

from garside.core.element import GroupElement

ENCODING_VERSION = 1

_HEADER = struct.Struct("<iH")


def encode_element(a: GroupElement) -> bytes:
    """int32 p, uint16 l, then l fixed-width simple encodings."""
    body = b"".join(a.structure.encode_simple(f) for f in a.factors)
    return _HEADER.pack(a.p, len(a.factors)) + body


def decode_element_header(data: bytes) -> tuple[int, int]:
    """Return (p, canonical length) from an encoded element."""
    return _HEADER.unpack_from(data)
