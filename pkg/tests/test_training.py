import numpy as np
import pytest

from photohdc.datasets import LabeledDataset, synth_classification
from photohdc.errors import ParameterError
from photohdc.hdc import (
    accuracy,
    encode_dataset,
    generate_model,
    normalize_quantize,
    train_single_pass,
)


def _dataset(X, y, k):
    return LabeledDataset(np.asarray(X, dtype=float), np.asarray(y), k)


def test_one_sample_per_class():
    data = _dataset([[0.1, 0.9], [0.8, 0.2]], [0, 1], 2)
    m = generate_model("traditional", d=2, dim=32, seed=5,
                       feature_range=data.feature_range)
    trained = train_single_pass(data, m, 4)
    encoded = encode_dataset(m, data, 4)
    for k in range(2):
        expect, scale = normalize_quantize(encoded[k], 4)
        assert np.array_equal(trained.chvs[k], expect)
        assert trained.scales[k] == scale


def test_duplicate_samples_double():
    data = _dataset([[0.3, 0.7], [0.3, 0.7], [0.9, 0.1]], [0, 0, 1], 2)
    m = generate_model("traditional", d=2, dim=32, seed=6,
                       feature_range=data.feature_range)
    trained = train_single_pass(data, m, 8)
    encoded = encode_dataset(m, data, 8)
    expect, _ = normalize_quantize(2 * encoded[0], 8)
    assert np.array_equal(trained.chvs[0], expect)


def test_empty_class_names_class():
    data = _dataset([[0.1, 0.9]], [0], 3)
    m = generate_model("traditional", d=2, dim=16, seed=0,
                       feature_range=data.feature_range)
    with pytest.raises(ParameterError, match="class 1"):
        train_single_pass(data, m, 4)


@pytest.mark.parametrize("scheme", ["traditional", "record"])
def test_separable_clusters_train_accuracy(scheme):
    data = synth_classification(d=16, num_classes=3, n_per_class=30,
                                separation_sigma=6.0, seed=42)
    m = generate_model(scheme, d=16, dim=1024, num_levels=32, seed=42,
                       feature_range=data.feature_range)
    trained = train_single_pass(data, m, 4)
    assert accuracy(trained, m, data) >= 0.95


def test_chvs_fit_bit_range():
    data = synth_classification(d=8, num_classes=2, n_per_class=50,
                                separation_sigma=3.0, seed=1)
    m = generate_model("traditional", d=8, dim=128, seed=1,
                       feature_range=data.feature_range)
    trained = train_single_pass(data, m, 4)
    assert np.max(np.abs(trained.chvs)) <= 7
