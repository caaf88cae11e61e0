"""Universe-size caps for operations whose cost grows with the powerset.

Caps can be overridden globally through ``PRAX_CAP_OVERRIDE``, either as a
bare integer applied to every cap or as ``name=value`` pairs separated by
commas (``definites=18,quotient=15``).
"""

from __future__ import annotations

import logging
import os

from roughprax.errors import CapExceeded, FormatError

log = logging.getLogger(__name__)

DEFAULT_CAPS: dict[str, int] = {
    "relation": 24,
    "definites": 16,
    "quotient": 14,
    "critical": 10,
    "brooms": 6,
    "oracle": 8,
}

ENV_VAR = "PRAX_CAP_OVERRIDE"

_overrides: dict[str, int] = {}


def parse_override(text: str) -> dict[str, int]:
    text = text.strip()
    if not text:
        return {}
    if text.isdigit():
        return {name: int(text) for name in DEFAULT_CAPS}
    out: dict[str, int] = {}
    for part in text.split(","):
        name, sep, value = part.partition("=")
        name = name.strip()
        if not sep or name not in DEFAULT_CAPS or not value.strip().isdigit():
            raise FormatError(f"bad cap override entry {part!r}")
        out[name] = int(value)
    return out


def set_override(overrides: dict[str, int]) -> None:
    """Install process-wide cap overrides (used by the CLI ``--cap`` flag)."""
    for name, value in overrides.items():
        if value > DEFAULT_CAPS[name]:
            log.warning("raising %s cap from %d to %d", name, DEFAULT_CAPS[name], value)
    _overrides.clear()
    _overrides.update(overrides)


def cap(name: str) -> int:
    if name in _overrides:
        return _overrides[name]
    env = os.environ.get(ENV_VAR)
    if env:
        return parse_override(env).get(name, DEFAULT_CAPS[name])
    return DEFAULT_CAPS[name]


def require(name: str, size: int, what: str | None = None) -> None:
    limit = cap(name)
    if size > limit:
        raise CapExceeded(what or name, size, limit)
