"""Scikit-learn style estimators wrapping the functional pipeline.

HdcClassifier / HdcEncoder compose with sklearn pipelines and model
selection; the graph scheme has no flat feature matrix and stays on the
functional API (hdc.encode_graph, hdc.train_single_pass).
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin

from ._validation import check_feature_matrix, check_fitted, check_labels
from .datasets import LabeledDataset
from .errors import ParameterError
from .hdc.model import DEFAULT_BITS, DEFAULT_DIM, DEFAULT_LEVELS, generate_model
from .hdc.training import encode_dataset, predict, train_single_pass


def _feature_range(X):
    return np.stack([X.min(axis=0), X.max(axis=0)], axis=1)


class HdcEncoder(BaseEstimator, TransformerMixin):
    """Encode feature vectors into integer hypervectors.

    fit() captures per-feature ranges and draws the encoding model;
    transform() maps (n, d) features to (n, dim) integer hypervectors.
    """

    def __init__(self, scheme="traditional", dim=DEFAULT_DIM, bits=DEFAULT_BITS,
                 levels=DEFAULT_LEVELS, seed=0):
        self.scheme = scheme
        self.dim = dim
        self.bits = bits
        self.levels = levels
        self.seed = seed

    def fit(self, X, y=None):
        X = check_feature_matrix(X)
        if str(self.scheme) == "graph":
            raise ParameterError("graph encoding takes GraphInstances; use the "
                                 "functional API instead of the estimator")
        self.model_ = generate_model(self.scheme, X.shape[1], self.dim,
                                     self.levels, self.seed,
                                     feature_range=_feature_range(X))
        return self

    def transform(self, X):
        check_fitted(self, "model_")
        X = check_feature_matrix(X, self.model_.num_features)
        dataset = LabeledDataset(X, np.zeros(X.shape[0], dtype=np.int64), 1)
        return encode_dataset(self.model_, dataset, self.bits)


class HdcClassifier(BaseEstimator, ClassifierMixin):
    """Single-pass hyperdimensional classifier.

    fit() bundles per-class encodings into quantized class hypervectors;
    predict() returns the cosine-nearest class.
    """

    def __init__(self, scheme="traditional", dim=DEFAULT_DIM, bits=DEFAULT_BITS,
                 levels=DEFAULT_LEVELS, seed=0):
        self.scheme = scheme
        self.dim = dim
        self.bits = bits
        self.levels = levels
        self.seed = seed

    def fit(self, X, y):
        X = check_feature_matrix(X)
        y = check_labels(y, X.shape[0])
        if str(self.scheme) == "graph":
            raise ParameterError("graph encoding takes GraphInstances; use the "
                                 "functional API instead of the estimator")
        self.classes_, y_idx = np.unique(y, return_inverse=True)
        dataset = LabeledDataset(X, y_idx, len(self.classes_))
        self.model_ = generate_model(self.scheme, X.shape[1], self.dim,
                                     self.levels, self.seed,
                                     feature_range=_feature_range(X))
        self.trained_ = train_single_pass(dataset, self.model_, self.bits)
        return self

    def predict(self, X):
        check_fitted(self, "trained_")
        X = check_feature_matrix(X, self.model_.num_features)
        dataset = LabeledDataset(X, np.zeros(X.shape[0], dtype=np.int64), 1)
        idx = predict(self.trained_, self.model_, dataset)
        return self.classes_[idx]

    def score(self, X, y):
        X = check_feature_matrix(X)
        y = check_labels(y, X.shape[0])
        return float(np.mean(self.predict(X) == y))
