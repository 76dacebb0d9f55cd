import numpy as np
import pytest

from photohdc.datasets import GraphInstance
from photohdc.errors import ParameterError
from photohdc.hdc import (
    encode_graph,
    encode_record,
    encode_traditional,
    generate_model,
    quantize_features,
    quantize_to_levels,
)

from oracles import encode_graph_oracle, encode_record_oracle, \
    encode_traditional_oracle


def test_traditional_zero_vector():
    m = generate_model("traditional", d=5, dim=16, seed=0)
    assert np.array_equal(encode_traditional(m, np.zeros(5, dtype=int)),
                          np.zeros(16, dtype=int))


def test_traditional_single_row_identity():
    m = generate_model("traditional", d=1, dim=16, seed=0)
    assert np.array_equal(encode_traditional(m, [1]), m.base[0])


def test_traditional_matches_scalar_oracle():
    m = generate_model("traditional", d=3, dim=4, seed=5)
    x = [2, -1, 3]
    assert encode_traditional(m, x).tolist() == \
        encode_traditional_oracle(m.base.tolist(), x)


def test_traditional_dimension_mismatch():
    m = generate_model("traditional", d=3, dim=4, seed=5)
    with pytest.raises(ParameterError):
        encode_traditional(m, [1, 2])


def test_traditional_linearity():
    m = generate_model("traditional", d=6, dim=32, seed=9)
    rng = np.random.default_rng(0)
    x = rng.integers(-5, 6, 6)
    y = rng.integers(-5, 6, 6)
    lhs = encode_traditional(m, 3 * x + 2 * y)
    rhs = 3 * encode_traditional(m, x) + 2 * encode_traditional(m, y)
    assert np.array_equal(lhs, rhs)


def test_record_single_feature():
    fr = [(0.0, 1.0)]
    m = generate_model("record", d=1, dim=16, num_levels=4, seed=3,
                       feature_range=fr)
    out = encode_record(m, [0.6])
    idx, _ = quantize_to_levels([0.6], m.feature_range, 4)
    expected = m.levels[idx[0]].astype(int) * m.base[0].astype(int)
    assert np.array_equal(out, expected)


def test_record_matches_scalar_oracle():
    rng = np.random.default_rng(17)
    fr = [(0.0, 1.0)] * 4
    m = generate_model("record", d=4, dim=8, num_levels=4, seed=2,
                       feature_range=fr)
    for _ in range(50):
        x = rng.random(4)
        got = encode_record(m, x)
        want = encode_record_oracle(m.base.tolist(), m.levels.tolist(), x, fr)
        assert got.tolist() == want


def test_record_out_of_range_clamps():
    fr = [(0.0, 1.0)] * 2
    m = generate_model("record", d=2, dim=8, num_levels=4, seed=2,
                       feature_range=fr)
    idx, clamped = quantize_to_levels([-5.0, 7.0], m.feature_range, 4)
    assert idx.tolist() == [0, 3]
    assert clamped == 2
    assert np.array_equal(encode_record(m, [-5.0, 7.0]),
                          encode_record(m, [0.0, 1.0]))


def test_graph_empty_edge_set():
    m = generate_model("graph", d=5, dim=16, seed=1)
    g = GraphInstance(5, (), 0)
    assert np.array_equal(encode_graph(m, g), np.zeros(16, dtype=int))


def test_graph_single_edge_symmetry():
    m = generate_model("graph", d=4, dim=16, seed=1)
    g = GraphInstance(4, ((0, 1),), 0)
    expected = m.base[0].astype(int) * m.base[1].astype(int)
    assert np.array_equal(encode_graph(m, g), expected)


def test_graph_matches_scalar_oracle(rng):
    m = generate_model("graph", d=6, dim=16, seed=4)
    pairs = [(i, j) for i in range(6) for j in range(i + 1, 6)]
    chosen = [pairs[i] for i in rng.choice(len(pairs), size=8, replace=False)]
    g = GraphInstance(6, tuple(chosen), 0)
    got = encode_graph(m, g)
    want = encode_graph_oracle(m.base.tolist(), 6, chosen, 16)
    assert got.tolist() == want


def test_graph_vertex_out_of_table():
    m = generate_model("graph", d=3, dim=8, seed=4)
    g = GraphInstance(5, ((0, 4),), 0)
    with pytest.raises(ParameterError):
        encode_graph(m, g)


def test_quantize_features_endpoints():
    fr = [(0.0, 1.0), (-2.0, 2.0)]
    assert quantize_features([0.0, -2.0], 4, fr).tolist() == [0, 0]
    assert quantize_features([1.0, 2.0], 4, fr).tolist() == [15, 15]


def test_quantize_features_half_rounds_away():
    assert quantize_features([0.5], 4, [(0.0, 1.0)]).tolist() == [8]


def test_quantize_features_constant_column():
    assert quantize_features([3.0, 3.0], 4, [(3.0, 3.0), (3.0, 3.0)]).tolist() \
        == [0, 0]


def test_quantize_features_clamps():
    assert quantize_features([9.0, -9.0], 4, [(0.0, 1.0), (0.0, 1.0)]).tolist() \
        == [15, 0]
