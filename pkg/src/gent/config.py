"""Enumeration caps and solver defaults.

Caps are plain module-level defaults that can be overridden per call or
through the ``GENT_CAP_OVERRIDE`` environment variable, e.g.
``GENT_CAP_OVERRIDE="mis_vertices=40,power_vertices=10000"``.
"""

from __future__ import annotations

import os

DEFAULT_TOL = 1e-7
DEFAULT_BUDGET = 100_000

_DEFAULT_CAPS = {
    "mis_vertices": 30,  # maximal independent set enumeration / MWIS
    "power_vertices": 4096,  # conormal, normal and OR products
    "chromatic_vertices": 64,
    "grundy_vertices": 12,
    "coloring_vertices": 16,  # exact minimum-entropy colouring
    "lp_columns": 500,
    "odd_set_vertices": 22,
    "bipartite_vertices": 24,
    "perfect_definition_vertices": 12,
    "perfect_vertices": 16,
    "clique_partition_vertices": 20,
    "matching_part": 14,
}


def _parse_override(text: str) -> dict[str, int]:
    out: dict[str, int] = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in _DEFAULT_CAPS:
            raise ValueError(f"bad GENT_CAP_OVERRIDE entry {item!r}")
        n = int(value)
        if n < 1:
            raise ValueError(f"cap {key} must be >= 1")
        out[key] = n
    return out


def cap(name: str, override: int | None = None) -> int:
    """Return the effective value of cap ``name``."""
    if override is not None:
        if override < 1:
            raise ValueError(f"cap {name} must be >= 1")
        return override
    env = os.environ.get("GENT_CAP_OVERRIDE")
    if env:
        parsed = _parse_override(env)
        if name in parsed:
            return parsed[name]
    return _DEFAULT_CAPS[name]


def default_caps() -> dict[str, int]:
    return dict(_DEFAULT_CAPS)
