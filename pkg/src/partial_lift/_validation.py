"""Input validation helpers shared by the estimator and the CLI."""

from __future__ import annotations

import numbers

import numpy as np
from sklearn.utils.validation import check_array

from .field import MAX_ELL, FieldError


def check_ell(ell) -> int:
    if not isinstance(ell, numbers.Integral) or isinstance(ell, bool):
        raise TypeError(f"ell must be an integer, got {type(ell).__name__}")
    if not 1 <= ell <= MAX_ELL:
        raise FieldError(f"ell must be in [1, {MAX_ELL}], got {ell}")
    return int(ell)


def check_even_ell(ell) -> int:
    if not isinstance(ell, numbers.Integral) or isinstance(ell, bool):
        raise TypeError(f"ell must be an integer, got {type(ell).__name__}")
    if ell < 1 or ell % 2:
        raise ValueError(f"ell must be a positive even integer, got {ell}")
    return int(ell)


def check_divisor(value, order: int, name: str) -> int:
    if not isinstance(value, numbers.Integral) or isinstance(value, bool):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if value <= 0 or order % value:
        raise FieldError(f"{name}={value} does not divide q - 1 = {order}")
    return int(value)


def check_field_array(X, q: int, *, n_features: int | None = None, name: str = "X") -> np.ndarray:
    """2-d integer array with entries in ``[0, q)`` and an optional column count."""
    X = check_array(X, dtype=np.int64, ensure_2d=True, input_name=name)
    if X.size and (X.min() < 0 or X.max() >= q):
        raise ValueError(f"{name} entries must be field elements in [0, {q})")
    if n_features is not None and X.shape[1] != n_features:
        raise ValueError(f"{name} has {X.shape[1]} columns, expected {n_features}")
    return X
