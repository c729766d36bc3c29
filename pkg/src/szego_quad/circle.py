"""Angle bookkeeping on the unit circle."""

from __future__ import annotations

import numpy as np

TWO_PI = 2.0 * np.pi


def fold_angle(angle, omega0=0.0):
    """Map an angle (or array of angles) into the window [omega0, omega0 + 2*pi)."""
    a = np.asarray(angle, dtype=float)
    out = omega0 + np.mod(a - omega0, TWO_PI)
    # float rounding in mod can land exactly on the upper edge
    out = np.where(out >= omega0 + TWO_PI, omega0, out)
    return float(out) if np.ndim(angle) == 0 else out


def circular_distance(a, b):
    """Shortest angular distance between angles a and b (broadcasts)."""
    d = np.mod(np.asarray(a, dtype=float) - np.asarray(b, dtype=float), TWO_PI)
    return np.minimum(d, TWO_PI - d)


def half_power(angle, m):
    """exp(i*m*angle/2); the determination is fixed by the angle itself.

    Every half-integer power in this package is realized through this helper,
    always applied to angles already folded into an agreed window, so that the
    same branch is used consistently on both sides of any identity.
    """
    return np.exp(0.5j * m * np.asarray(angle, dtype=float))


def in_open_arc(theta, lo, hi):
    """Membership of angles in the open counterclockwise arc from lo to hi."""
    width = np.mod(hi - lo, TWO_PI)
    if width == 0.0 and hi != lo:
        width = TWO_PI
    rel = np.mod(np.asarray(theta, dtype=float) - lo, TWO_PI)
    return (rel > 0.0) & (rel < width)
