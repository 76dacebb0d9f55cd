"""Encoding operations for the three schemes, in exact integer arithmetic."""

from __future__ import annotations

import numpy as np

from ..errors import ParameterError
from .model import EncodingModel, Scheme


def round_half_away_from_zero(values) -> np.ndarray:
    """Round to the nearest integer, halves away from zero."""
    v = np.asarray(values, dtype=np.float64)
    return (np.sign(v) * np.floor(np.abs(v) + 0.5)).astype(np.int64)


def quantize_features(x, bits: int, feature_range) -> np.ndarray:
    """Affine map of each feature onto the unsigned b-bit grid [0, 2^b - 1].

    Out-of-range values are clamped; a constant feature (min == max) maps
    to 0. The photodiode bias is a magnitude, so features are unsigned; the
    base hypervectors carry the signs.
    """
    x = np.asarray(x, dtype=np.float64)
    fr = np.asarray(feature_range, dtype=np.float64)
    lo, hi = fr[..., 0], fr[..., 1]
    span = hi - lo
    with np.errstate(invalid="ignore", divide="ignore"):
        unit = np.where(span > 0, (x - lo) / np.where(span > 0, span, 1.0), 0.0)
    unit = np.clip(unit, 0.0, 1.0)
    return round_half_away_from_zero(unit * (2 ** bits - 1))


def quantize_to_levels(x, feature_range, num_levels: int):
    """Map feature values to level indices in [0, m-1].

    Returns:
        (indices, clamped) where clamped counts features outside their range.
    """
    x = np.asarray(x, dtype=np.float64)
    fr = np.asarray(feature_range, dtype=np.float64)
    lo, hi = fr[..., 0], fr[..., 1]
    clamped = int(np.count_nonzero((x < lo) | (x > hi)))
    span = hi - lo
    with np.errstate(invalid="ignore", divide="ignore"):
        unit = np.where(span > 0, (x - lo) / np.where(span > 0, span, 1.0), 0.0)
    unit = np.clip(unit, 0.0, 1.0)
    idx = round_half_away_from_zero(unit * (num_levels - 1))
    return idx, clamped


def _check_features(model: EncodingModel, x, expected_scheme: Scheme):
    if model.scheme is not expected_scheme:
        raise ParameterError(
            f"model was generated for {model.scheme.value} encoding, "
            f"not {expected_scheme.value}")
    x = np.asarray(x)
    if x.ndim != 1 or x.shape[0] != model.num_features:
        raise ParameterError(
            f"expected a feature vector of length {model.num_features}, "
            f"got shape {x.shape}")
    return x


def encode_traditional(model: EncodingModel, x) -> np.ndarray:
    """Encode a pre-quantized integer feature vector as base^T x."""
    x = _check_features(model, x, Scheme.TRADITIONAL)
    return model.base.astype(np.int64).T @ x.astype(np.int64)


def encode_traditional_batch(model: EncodingModel, X) -> np.ndarray:
    X = np.asarray(X, dtype=np.int64)
    if X.ndim != 2 or X.shape[1] != model.num_features:
        raise ParameterError(
            f"expected (n, {model.num_features}) integer features, got {X.shape}")
    return X @ model.base.astype(np.int64)


def encode_record(model: EncodingModel, x) -> np.ndarray:
    """Encode a raw feature vector as sum_i L_{i,x} * b_i.

    Level selection quantizes each feature within its recorded range;
    out-of-range features are clamped.
    """
    x = _check_features(model, x, Scheme.RECORD)
    if model.feature_range is None:
        raise ParameterError("record encoding needs a feature_range on the model")
    idx, _ = quantize_to_levels(x, model.feature_range, model.num_levels)
    chosen = model.levels[idx].astype(np.int64)
    return np.sum(chosen * model.base.astype(np.int64), axis=0)


def encode_record_batch(model: EncodingModel, X):
    """Batch record encoding. Returns (encoded (n, D), clamped feature count)."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != model.num_features:
        raise ParameterError(
            f"expected (n, {model.num_features}) features, got {X.shape}")
    if model.feature_range is None:
        raise ParameterError("record encoding needs a feature_range on the model")
    idx, clamped = quantize_to_levels(X, model.feature_range, model.num_levels)
    out = np.empty((X.shape[0], model.dim), dtype=np.int64)
    for i in range(X.shape[0]):
        # bipolar product stays int8; only the feature sum needs width
        bound = model.levels[idx[i]] * model.base
        out[i] = bound.sum(axis=0, dtype=np.int64)
    return out, clamped


def memory_hypervectors(model: EncodingModel, graph) -> np.ndarray:
    """Per-vertex neighborhood sums m_i = sum of node hypervectors of neighbors.

    The result has one row per node-table slot; rows beyond the instance's
    vertex count are zero.
    """
    if graph.vertex_count > model.num_features:
        raise ParameterError(
            f"graph has {graph.vertex_count} vertices but the node table "
            f"holds only {model.num_features}")
    base = model.base.astype(np.int64)
    mem = np.zeros((model.num_features, model.dim), dtype=np.int64)
    for i, j in graph.edges:
        mem[i] += base[j]
        mem[j] += base[i]
    return mem


def halve_toward_zero(values) -> np.ndarray:
    v = np.asarray(values, dtype=np.int64)
    return np.sign(v) * (np.abs(v) // 2)


def encode_graph(model: EncodingModel, graph) -> np.ndarray:
    """Encode a graph as (1/2) sum_i b_i * m_i.

    The sum is exact integer arithmetic; the final halving rounds toward
    zero (the sum is always even, so the halving is in fact exact).
    """
    if model.scheme is not Scheme.GRAPH:
        raise ParameterError(
            f"model was generated for {model.scheme.value} encoding, not graph")
    mem = memory_hypervectors(model, graph)
    total = np.sum(model.base.astype(np.int64) * mem, axis=0)
    return halve_toward_zero(total)
