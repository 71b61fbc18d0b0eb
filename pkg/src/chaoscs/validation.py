"""Input validation helpers.

Small checks shared by the public entry points so error messages name the
offending argument instead of surfacing as numpy broadcasting failures.
"""

import numpy as np

from .errors import DimensionMismatchError


def as_float_vector(x, name, min_len=0):
    """Coerce to a finite 1-D float64 array."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size < min_len:
        raise ValueError(f"{name} must have at least {min_len} entries, got {arr.size}")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite values")
    return arr


def as_float_matrix(x, name):
    """Coerce to a finite 2-D float64 array."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be two-dimensional, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError(f"{name} contains non-finite values")
    return arr


def check_positive(value, name):
    if not value > 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def check_count(value, name, minimum=1):
    if int(value) != value or value < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value}")
    return int(value)


def check_same_length(a, b, name_a, name_b, exc=DimensionMismatchError):
    if len(a) != len(b):
        raise exc(f"{name_a} has length {len(a)} but {name_b} has length {len(b)}")
