"""Runtime knobs: the tensor-power column cap.

Brute-force operations realize objects inside tensor powers whose column
count grows exponentially.  Every such operation takes an optional ``cap``
argument; when it is None the default below applies.  The environment
variable VERLINDE_LAB_CAP overrides the built-in default of 20000.
"""

from __future__ import annotations

import os

from .errors import CapExceededError, ValidationError

DEFAULT_CAP = 20000


def dimension_cap(cap=None):
    """Resolve the effective column cap for a brute-force computation."""
    if cap is not None:
        if cap < 1:
            raise ValidationError(f"cap must be positive, got {cap}")
        return int(cap)
    env = os.environ.get("VERLINDE_LAB_CAP")
    if env is not None:
        try:
            value = int(env)
        except ValueError as exc:
            raise ValidationError(f"VERLINDE_LAB_CAP is not an integer: {env!r}") from exc
        if value < 1:
            raise ValidationError(f"VERLINDE_LAB_CAP must be positive, got {value}")
        return value
    return DEFAULT_CAP


def check_cap(needed, cap=None):
    """Raise CapExceededError when *needed* columns exceed the effective cap."""
    effective = dimension_cap(cap)
    if needed > effective:
        raise CapExceededError(needed, effective)
    return effective
