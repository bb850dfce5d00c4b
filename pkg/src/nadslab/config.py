"""Materialization cap shared by every routine that builds long prefixes."""

import os
from contextlib import contextmanager
from contextvars import ContextVar

DEFAULT_CAP = 1 << 22
ENV_VAR = "NADSLAB_CAP"

_cap: ContextVar[int | None] = ContextVar("nadslab_cap", default=None)


class CapExceeded(Exception):
    """A request would materialize more symbols than the configured cap allows."""

    def __init__(self, requested, cap):
        super().__init__(f"requested {requested} symbols, cap is {cap}")
        self.requested = requested
        self.cap = cap


def get_cap() -> int:
    override = _cap.get()
    if override is not None:
        return override
    env = os.environ.get(ENV_VAR)
    if env:
        return int(env)
    return DEFAULT_CAP


def check_cap(requested: int) -> None:
    cap = get_cap()
    if requested > cap:
        raise CapExceeded(requested, cap)


@contextmanager
def cap_limit(cap: int):
    """Temporarily override the cap for the current context."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    token = _cap.set(cap)
    try:
        yield cap
    finally:
        _cap.reset(token)
