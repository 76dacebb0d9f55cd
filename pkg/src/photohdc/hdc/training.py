"""Single-pass training and inference pipelines."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError
from .encoding import (
    encode_graph,
    encode_record_batch,
    encode_traditional_batch,
    quantize_features,
)
from .model import DEFAULT_BITS, EncodingModel, Scheme
from .ops import cosine_scores, normalize_quantize


@dataclass(frozen=True)
class TrainedModel:
    """Class hypervectors produced by single-pass training.

    chvs is the (K, D) integer matrix of quantized class hypervectors,
    scales records the divisor normalize_quantize applied to each class.
    """

    chvs: np.ndarray
    bits: int
    scales: np.ndarray

    def __post_init__(self):
        self.chvs.setflags(write=False)
        self.scales.setflags(write=False)

    @property
    def num_classes(self) -> int:
        return self.chvs.shape[0]

    @property
    def dim(self) -> int:
        return self.chvs.shape[1]


def encode_dataset(model: EncodingModel, dataset,
                   bits: int = DEFAULT_BITS) -> np.ndarray:
    """Encode every sample of a dataset under the model's scheme.

    Traditional-scheme features are first quantized to unsigned b-bit
    operands; record features select level hypervectors; graph instances
    use precomputed memory hypervectors.
    """
    if model.scheme is Scheme.TRADITIONAL:
        if model.feature_range is None:
            raise ParameterError("model lacks the feature_range used for "
                                 "operand quantization")
        xq = quantize_features(dataset.X, bits, model.feature_range)
        return encode_traditional_batch(model, xq)
    if model.scheme is Scheme.RECORD:
        encoded, _ = encode_record_batch(model, dataset.X)
        return encoded
    return np.stack([encode_graph(model, g) for g in dataset.graphs])


def train_single_pass(dataset, model: EncodingModel,
                      bits: int = DEFAULT_BITS) -> TrainedModel:
    """Bundle the encodings of each class and quantize to b bits.

    Raises:
        ParameterError: if the dataset is empty or a class has no samples.
    """
    labels = np.asarray(dataset.labels, dtype=np.int64)
    num_classes = dataset.num_classes
    if labels.size == 0:
        raise ParameterError("dataset is empty")
    counts = np.bincount(labels, minlength=num_classes)
    for k in np.nonzero(counts == 0)[0]:
        raise ParameterError(f"class {int(k)} has no training samples")

    encoded = encode_dataset(model, dataset, bits)
    chvs = np.empty((num_classes, model.dim), dtype=np.int64)
    scales = np.empty(num_classes, dtype=np.int64)
    for k in range(num_classes):
        summed = np.sum(encoded[labels == k], axis=0)
        chvs[k], scales[k] = normalize_quantize(summed, bits)
    return TrainedModel(chvs=chvs, bits=bits, scales=scales)


def encode_queries(model: EncodingModel, dataset,
                   bits: int = DEFAULT_BITS) -> np.ndarray:
    """Encode queries and re-quantize them to b bits.

    Encoded queries are reloaded into the b-bit photodiode array before the
    similarity phase, so the same normalize_quantize step applies per query.
    """
    encoded = encode_dataset(model, dataset, bits)
    out = np.empty_like(encoded)
    for i in range(encoded.shape[0]):
        out[i], _ = normalize_quantize(encoded[i], bits)
    return out


def predict(trained: TrainedModel, model: EncodingModel, dataset) -> np.ndarray:
    """Classify every sample; ties break toward the lowest class index."""
    queries = encode_queries(model, dataset, trained.bits)
    labels = np.empty(queries.shape[0], dtype=np.int64)
    for i in range(queries.shape[0]):
        labels[i] = int(np.argmax(cosine_scores(trained.chvs, queries[i])))
    return labels


def accuracy(trained: TrainedModel, model: EncodingModel, dataset) -> float:
    predicted = predict(trained, model, dataset)
    return float(np.mean(predicted == np.asarray(dataset.labels)))
