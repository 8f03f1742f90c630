"""Input validation helpers used by the estimators and pipeline stages."""

from __future__ import annotations

import numpy as np


def check_matrix(X, *, name="X", min_rows=1, dtype=np.float64):
    """Coerce ``X`` to a 2-D float array and check that it is finite.

    Returns a C-contiguous ``ndarray`` of the requested dtype. Raises
    ``ValueError`` with the offending detail otherwise.
    """
    X = np.asarray(X, dtype=dtype)
    if X.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got shape {X.shape}")
    if X.shape[0] < min_rows:
        raise ValueError(f"{name} needs at least {min_rows} rows, got {X.shape[0]}")
    if not np.all(np.isfinite(X)):
        bad = int(np.flatnonzero(~np.isfinite(X).all(axis=1))[0])
        raise ValueError(f"{name} contains non-finite values (first bad row: {bad})")
    return np.ascontiguousarray(X)


def check_vector(v, *, name="vector", dtype=np.float64):
    v = np.asarray(v, dtype=dtype).ravel()
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} contains non-finite values")
    return v


def check_positive_int(value, *, name, minimum=1):
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


def check_fraction(value, *, name, low=0.0, high=1.0, inclusive_low=True, inclusive_high=True):
    value = float(value)
    ok_low = value >= low if inclusive_low else value > low
    ok_high = value <= high if inclusive_high else value < high
    if not (ok_low and ok_high):
        lo = "[" if inclusive_low else "("
        hi = "]" if inclusive_high else ")"
        raise ValueError(f"{name} must lie in {lo}{low}, {high}{hi}, got {value}")
    return value
