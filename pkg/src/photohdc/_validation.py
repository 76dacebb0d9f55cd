"""Input validation helpers shared by the estimator API."""

from __future__ import annotations

import numpy as np

from .errors import ParameterError


def check_feature_matrix(X, expected_features=None) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    if X.ndim == 1:
        X = X.reshape(1, -1)
    if X.ndim != 2 or X.shape[0] == 0 or X.shape[1] == 0:
        raise ParameterError(f"expected a non-empty 2-D feature matrix, got {X.shape}")
    if not np.all(np.isfinite(X)):
        raise ParameterError("features contain NaN or infinity")
    if expected_features is not None and X.shape[1] != expected_features:
        raise ParameterError(
            f"expected {expected_features} features, got {X.shape[1]}")
    return X


def check_labels(y, n_samples) -> np.ndarray:
    y = np.asarray(y)
    if y.shape != (n_samples,):
        raise ParameterError(f"expected {n_samples} labels, got shape {y.shape}")
    if y.dtype.kind == "f":
        if not np.all(y == np.round(y)):
            raise ParameterError("labels must be integers")
        y = y.astype(np.int64)
    return y.astype(np.int64)


def check_fitted(estimator, attribute):
    if getattr(estimator, attribute, None) is None:
        raise ParameterError(
            f"{type(estimator).__name__} is not fitted yet; call fit first")
