"""Global tolerances with scoped overrides.

All predicates in the package read the active values through
:func:`get_tol` and :func:`get_angle_tol`.  Overrides are scoped with
:func:`tolerances`, which uses a context variable so concurrent callers
never see each other's settings.
"""

from __future__ import annotations

import contextlib
import contextvars

TOL = 1e-9
ANGLE_TOL = 1e-12
# antipodal detection on the unit circle is done with a looser angle
ANTIPODAL_TOL = 1e-9

_tol = contextvars.ContextVar("tol", default=TOL)
_angle_tol = contextvars.ContextVar("angle_tol", default=ANGLE_TOL)


def get_tol() -> float:
    return _tol.get()


def get_angle_tol() -> float:
    return _angle_tol.get()


@contextlib.contextmanager
def tolerances(tol: float | None = None, angle_tol: float | None = None):
    """Temporarily override the coordinate and/or angular tolerance."""
    tokens = []
    if tol is not None:
        if not tol > 0:
            raise ValueError("tol must be positive")
        tokens.append((_tol, _tol.set(float(tol))))
    if angle_tol is not None:
        if not angle_tol > 0:
            raise ValueError("angle_tol must be positive")
        tokens.append((_angle_tol, _angle_tol.set(float(angle_tol))))
    try:
        yield
    finally:
        for var, token in reversed(tokens):
            var.reset(token)
