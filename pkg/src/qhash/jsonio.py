"""JSON serialization with round-trip-faithful floats.

Floats are emitted with 17 significant digits so every double survives a
write/read cycle; output is byte-stable for identical payloads, which the
CLI's determinism contract relies on.
"""

from __future__ import annotations

import json
import os
from typing import Any


class _Float17Encoder(json.JSONEncoder):
    """JSONEncoder whose float formatting is %.17g instead of repr."""

    def iterencode(self, o: Any, _one_shot: bool = False):
        def floatstr(value: float) -> str:
            if value != value or value in (float("inf"), float("-inf")):
                raise ValueError(f"non-finite float {value!r} not representable in JSON")
            return format(value, ".17g")

        markers = {} if self.check_circular else None
        return json.encoder._make_iterencode(
            markers,
            self.default,
            json.encoder.encode_basestring_ascii,
            self.indent,
            floatstr,
            self.key_separator,
            self.item_separator,
            self.sort_keys,
            self.skipkeys,
            _one_shot=False,
        )(o, 0)


def dumps_json(payload: Any) -> str:
    return json.dumps(payload, cls=_Float17Encoder, indent=2, sort_keys=True) + "\n"


def dump_json(payload: Any, path: str) -> None:
    """Serialize fully, then write atomically (no partial files on error)."""
    text = dumps_json(payload)
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def complex_pair(z: complex) -> list:
    """[re, im] encoding used by all state/overlap exports."""
    return [float(z.real), float(z.imag)]
