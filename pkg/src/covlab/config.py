"""Enumeration bounds, overridable via the COVLAB_ENUM_CAP environment variable."""

import os

DEFAULT_ENUM_CAP = 10_000_000


def enum_cap() -> int:
    raw = os.environ.get("COVLAB_ENUM_CAP")
    if raw is None:
        return DEFAULT_ENUM_CAP
    cap = int(raw)
    if cap <= 0:
        raise ValueError("COVLAB_ENUM_CAP must be positive")
    return cap
