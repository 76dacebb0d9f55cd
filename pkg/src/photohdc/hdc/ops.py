"""Bundling, quantization and similarity primitives."""

from __future__ import annotations

import numpy as np

from ..errors import ParameterError
from .encoding import round_half_away_from_zero


def bundle(hypervectors) -> np.ndarray:
    """Element-wise integer sum of a non-empty list of hypervectors."""
    if len(hypervectors) == 0:
        raise ParameterError("cannot bundle an empty list")
    stacked = np.asarray(hypervectors, dtype=np.int64)
    if stacked.ndim != 2:
        raise ParameterError("bundle expects same-length hypervectors")
    return np.sum(stacked, axis=0)


def normalize_quantize(hv, bits: int):
    """Scale a hypervector into the signed b-bit range.

    The divisor is s = max(1, ceil(max|hv_i| / (2^(b-1) - 1))) and elements
    are rounded half away from zero.

    Returns:
        (quantized hypervector, scale s)
    """
    if bits < 2:
        raise ParameterError(f"bit width must be >= 2, got {bits}")
    hv = np.asarray(hv, dtype=np.int64)
    limit = 2 ** (bits - 1) - 1
    peak = int(np.max(np.abs(hv))) if hv.size else 0
    scale = max(1, -(-peak // limit))
    if scale == 1:
        return hv.copy(), 1
    return round_half_away_from_zero(hv / scale), scale


def cosine_similarity(a, b) -> float:
    """Cosine of the angle between two vectors; 0.0 if either is all zero."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ParameterError(f"length mismatch: {a.shape} vs {b.shape}")
    na = np.linalg.norm(a)
    nb = np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        return 0.0
    return float(np.dot(a, b) / (na * nb))


def similarity_scores(chvs, query) -> np.ndarray:
    """Integer dot products between every class hypervector and a query."""
    chvs = np.asarray(chvs, dtype=np.int64)
    query = np.asarray(query, dtype=np.int64)
    return chvs @ query


def cosine_scores(chvs, query) -> np.ndarray:
    """Cosine similarity of the query against each class hypervector."""
    chvs = np.asarray(chvs, dtype=np.float64)
    query = np.asarray(query, dtype=np.float64)
    dots = chvs @ query
    norms = np.linalg.norm(chvs, axis=1) * np.linalg.norm(query)
    out = np.zeros(chvs.shape[0], dtype=np.float64)
    nonzero = norms > 0
    out[nonzero] = dots[nonzero] / norms[nonzero]
    return out


def classify(trained, query_hv) -> int:
    """Label of the most cosine-similar class hypervector.

    Ties break toward the lowest class index; a zero class hypervector
    scores 0 and so never wins spuriously.
    """
    if trained.num_classes < 1:
        raise ParameterError("trained model has no class hypervectors")
    scores = cosine_scores(trained.chvs, query_hv)
    return int(np.argmax(scores))
