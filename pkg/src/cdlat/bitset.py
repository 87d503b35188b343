"""Dense element-set helpers: sets of element ids packed into Python ints.

Bit i of a mask corresponds to element id i.  The hex encoding used in
cache files is the little-endian byte string of the mask, so masks round
trip through ``mask_to_hex``/``mask_from_hex`` for a fixed group order.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np


def mask_nbytes(n: int) -> int:
    return (n + 7) // 8


def mask_from_indices(ids: Iterable[int]) -> int:
    mask = 0
    for x in ids:
        mask |= 1 << int(x)
    return mask


def mask_to_indices(mask: int, n: int) -> np.ndarray:
    """Set bit positions as an int64 index array."""
    raw = np.frombuffer(mask.to_bytes(mask_nbytes(n), "little"), dtype=np.uint8)
    bits = np.unpackbits(raw, count=n, bitorder="little")
    return np.flatnonzero(bits)

def mask_to_bool(mask: int, n: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes(mask_nbytes(n), "little"), dtype=np.uint8)
    return np.unpackbits(raw, count=n, bitorder="little").astype(bool)


def mask_from_bool(flags: np.ndarray) -> int:
    packed = np.packbits(flags, bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_to_hex(mask: int, n: int) -> str:
    return mask.to_bytes(mask_nbytes(n), "little").hex()


def mask_from_hex(text: str, n: int) -> int:
    raw = bytes.fromhex(text)
    if len(raw) != mask_nbytes(n):
        raise ValueError(
            f"bitset hex has {len(raw)} bytes; expected {mask_nbytes(n)} for order {n}"
        )
    mask = int.from_bytes(raw, "little")
    if mask >> n:
        raise ValueError("bitset hex has bits beyond the group order")
    return mask
