"""Sortable unique proposal ids: 48-bit millisecond timestamp + 80-bit entropy."""

from __future__ import annotations

import os
import threading
import time

_CROCKFORD = "0123456789ABCDEFGHJKMNPQRSTVWXYZ"
_RAND_MASK = (1 << 80) - 1


class UlidGenerator:
    """Thread-safe generator; ids issued in the same millisecond stay ordered."""

    def __init__(self):
        self._lock = threading.Lock()
        self._last_ms = -1
        self._last_rand = 0

    def generate(self) -> str:
        with self._lock:
            ms = time.time_ns() // 1_000_000
            if ms <= self._last_ms:
                ms = self._last_ms
                self._last_rand = (self._last_rand + 1) & _RAND_MASK
            else:
                self._last_ms = ms
                self._last_rand = int.from_bytes(os.urandom(10), "big")
            value = (ms << 80) | self._last_rand
        chars = []
        for _ in range(26):
            chars.append(_CROCKFORD[value & 31])
            value >>= 5
        return "".join(reversed(chars))


_default = UlidGenerator()


def new_ulid() -> str:
    return _default.generate()
