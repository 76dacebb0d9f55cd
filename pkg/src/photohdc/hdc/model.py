"""Randomized encoding state: base hypervectors and level tables.

All hypervectors are bipolar or integer numpy vectors of a fixed dimension D.
The encoding model is generated once from a seed and is immutable afterwards,
so it can be shared freely between threads and serialized for reproducibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..errors import ParameterError

DEFAULT_DIM = 4096
DEFAULT_LEVELS = 32
DEFAULT_BITS = 4


class Scheme(str, Enum):
    """The three supported encoding schemes."""

    TRADITIONAL = "traditional"
    RECORD = "record"
    GRAPH = "graph"

    @classmethod
    def coerce(cls, value) -> "Scheme":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ParameterError(f"unknown encoding scheme: {value!r}") from None


@dataclass(frozen=True)
class EncodingModel:
    """Frozen randomized encoding state.

    Attributes:
        scheme: encoding scheme this model was generated for.
        dim: hyperdimension D.
        num_features: d, the feature count (record/traditional) or the
            node-table size (graph).
        base: (d, D) int8 matrix of base/position/node hypervectors, ±1.
        levels: (m, D) int8 level-hypervector table, ±1. None for traditional.
        seed: the 64-bit seed the model was drawn from.
        feature_range: (d, 2) float array of per-feature (min, max) used for
            value quantization. None when not applicable (graph).
    """

    scheme: Scheme
    dim: int
    num_features: int
    base: np.ndarray
    levels: np.ndarray | None
    seed: int
    feature_range: np.ndarray | None

    def __post_init__(self):
        self.base.setflags(write=False)
        if self.levels is not None:
            self.levels.setflags(write=False)
        if self.feature_range is not None:
            self.feature_range.setflags(write=False)

    @property
    def num_levels(self) -> int:
        return 0 if self.levels is None else self.levels.shape[0]


def _random_bipolar(rng, shape):
    return (rng.integers(0, 2, size=shape, dtype=np.int8) * 2 - 1).astype(np.int8)


def _level_table(rng, m: int, dim: int) -> np.ndarray:
    """Interpolative bit-flipping level construction.

    The first level is a random bipolar vector; each subsequent level flips
    floor(D / (2*(m-1))) previously unflipped positions, so the first and last
    level differ in roughly D/2 positions and are near-orthogonal.
    """
    levels = np.empty((m, dim), dtype=np.int8)
    levels[0] = _random_bipolar(rng, dim)
    if m == 1:
        return levels
    per_step = dim // (2 * (m - 1))
    flip_order = rng.permutation(dim)
    pos = 0
    for j in range(1, m):
        levels[j] = levels[j - 1]
        chosen = flip_order[pos:pos + per_step]
        levels[j, chosen] = -levels[j, chosen]
        pos += per_step
    return levels


def _as_feature_range(feature_range, d):
    if feature_range is None:
        return None
    fr = np.asarray(feature_range, dtype=np.float64)
    if fr.shape == (2,):
        fr = np.tile(fr, (d, 1))
    if fr.shape != (d, 2):
        raise ParameterError(
            f"feature_range must have shape ({d}, 2), got {fr.shape}")
    if np.any(fr[:, 1] < fr[:, 0]):
        raise ParameterError("feature_range has max < min for some feature")
    return fr


def generate_model(scheme, d: int, dim: int = DEFAULT_DIM,
                   num_levels: int = DEFAULT_LEVELS, seed: int = 0,
                   feature_range=None) -> EncodingModel:
    """Draw a reproducible encoding model.

    Args:
        scheme: "traditional", "record" or "graph".
        d: feature count, or node-table size for graph encoding.
        dim: hyperdimension D.
        num_levels: level-table size m (ignored for traditional).
        seed: RNG seed; identical seeds give bit-identical models.
        feature_range: per-feature (min, max); required before encoding
            record-scheme inputs, optional here.

    Returns:
        An immutable EncodingModel.
    """
    scheme = Scheme.coerce(scheme)
    if d < 1 or dim < 1:
        raise ParameterError(f"dimensions must be positive, got d={d}, D={dim}")
    if scheme is not Scheme.TRADITIONAL and num_levels < 2:
        raise ParameterError(
            f"{scheme.value} encoding needs at least 2 levels, got {num_levels}")
    rng = np.random.default_rng(seed)
    base = _random_bipolar(rng, (d, dim))
    levels = None
    if scheme is not Scheme.TRADITIONAL:
        levels = _level_table(rng, num_levels, dim)
    return EncodingModel(
        scheme=scheme,
        dim=dim,
        num_features=d,
        base=base,
        levels=levels,
        seed=int(seed),
        feature_range=_as_feature_range(feature_range, d),
    )
