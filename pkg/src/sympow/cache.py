"""Process-wide cache for reduced Groebner bases.

Two layers: an always-on in-memory table, plus an optional on-disk layer
holding one JSON file per basis under a user-chosen directory.  Disk
entries are versioned; anything unreadable or from another format version
is ignored rather than trusted.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction

_FORMAT = 1

_memory: dict = {}
_directory = None
_hits = 0
_misses = 0


def configure(directory) -> None:
    """Set (or clear) the persistent cache directory."""
    global _directory
    if directory is not None:
        os.makedirs(directory, exist_ok=True)
    _directory = directory


def clear_memory() -> None:
    _memory.clear()


def counters() -> dict:
    return {"hits": _hits, "misses": _misses}


def reset_counters() -> None:
    global _hits, _misses
    _hits = 0
    _misses = 0


def _path(key: str) -> str:
    return os.path.join(_directory, f"gb-{key}.json")


def _encode(elements) -> list:
    out = []
    for p in elements:
        terms = []
        for exp, c in p.terms:
            if isinstance(c, Fraction):
                terms.append([list(exp), [c.numerator, c.denominator]])
            else:
                terms.append([list(exp), [c]])
        out.append(terms)
    return out


def _decode(data, ring):
    elements = []
    for terms in data:
        rebuilt = []
        for exp, coeff in terms:
            if len(coeff) == 2:
                rebuilt.append((tuple(exp), Fraction(coeff[0], coeff[1])))
            else:
                rebuilt.append((tuple(exp), coeff[0]))
        elements.append(ring.poly(rebuilt))
    return tuple(elements)


def lookup(key: str, ring):
    global _hits, _misses
    if key in _memory:
        _hits += 1
        return _memory[key]
    if _directory is not None:
        try:
            with open(_path(key)) as fh:
                data = json.load(fh)
            if data.get("format") != _FORMAT:
                raise ValueError("format mismatch")
            elements = _decode(data["elements"], ring)
        except Exception:
            pass  # unreadable or stale entry: treat as a miss
        else:
            _memory[key] = elements
            _hits += 1
            return elements
    _misses += 1
    return None


def store(key: str, ring, elements) -> None:
    _memory[key] = tuple(elements)
    if _directory is None:
        return
    payload = {"format": _FORMAT, "elements": _encode(elements)}
    fd, tmp = tempfile.mkstemp(dir=_directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, _path(key))
    except Exception:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
