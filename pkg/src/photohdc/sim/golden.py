"""Tile-level golden simulator.

Replays the exact tile traversal order of the scheduled dataflows on real
data: MZM vector times photodiode tile products, per-row accumulation,
switch routing (bundle path in training, per-row path in inference) and
digital partial accumulation. Its integer outputs must equal the functional
pipeline bit for bit; its event counts re-derive the scheduler's counters.

Training groups are always formed per class (the analog bundling wire sums
all rows, so a group must be single-class), with the last group of a class
zero-padded.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

import numpy as np

from ..errors import ParameterError
from ..hdc.encoding import (
    halve_toward_zero,
    memory_hypervectors,
    quantize_features,
    quantize_to_levels,
)
from ..hdc.model import EncodingModel, Scheme
from ..hdc.ops import normalize_quantize
from ..hdc.training import TrainedModel
from .config import AcceleratorConfig
from .schedule import WORD_BITS

SWITCH_TRAIN = "TrainingBundle"
SWITCH_INFER = "InferenceRows"


@dataclass
class TileTraceEvent:
    """One cycle of one photonic unit."""

    cycle: int
    unit: int
    mzm: list
    pd_tile: list
    switch_path: str
    row_outputs: list | None = None
    bundled_output: int | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


def export_trace(events, fh):
    """Write trace events as newline-delimited JSON records."""
    for ev in events:
        fh.write(ev.to_json())
        fh.write("\n")


@dataclass
class GoldenStats:
    """Aggregate event counts over all units; wall_cycles is the busiest
    unit's timeline."""

    cycles: int = 0
    wall_cycles: int = 0
    tile_updates: int = 0
    mzm_modulations: int = 0
    adc_conversions: int = 0
    dac_conversions: int = 0
    sram_reads_bits: int = 0
    sram_writes_bits: int = 0
    adder_ops: int = 0


@dataclass
class GoldenRun:
    chvs: np.ndarray | None = None
    scales: np.ndarray | None = None
    scores: np.ndarray | None = None
    labels: np.ndarray | None = None
    stats: GoldenStats = field(default_factory=GoldenStats)
    trace: list | None = None


def golden_tile_run(model: EncodingModel, data, config: AcceleratorConfig,
                    mode: str, trained: TrainedModel = None,
                    record_trace: bool = False) -> GoldenRun:
    """Run the tile-level simulation on a small instance.

    Args:
        model: the encoding model (operand source).
        data: LabeledDataset or GraphDataset; for inference these are the
            queries and their labels are ignored.
        config: hardware point; groups go round-robin over the units.
        mode: "train" or "infer".
        trained: class hypervectors, required for inference.
        record_trace: capture per-cycle TileTraceEvents (small runs only).

    Returns:
        GoldenRun with chvs/scales (training) or integer similarity scores
        and predicted labels (inference), plus aggregate event counts.
    """
    if mode == "train":
        return _golden_train(model, data, config, record_trace)
    if mode == "infer":
        if trained is None:
            raise ParameterError("inference needs a trained model")
        return _golden_infer(model, data, config, trained, record_trace)
    raise ParameterError(f"unknown mode {mode!r}")


def _pd_planes(model: EncodingModel, data, bits):
    """Photodiode operand planes per sample.

    "static" planes hold one value per (sample, feature) reused across all
    hyperdimensions; "per_dim" planes are dense (n, d, D) operand cubes.
    """
    if model.scheme is Scheme.TRADITIONAL:
        if model.feature_range is None:
            raise ParameterError("model lacks a feature_range")
        return "static", quantize_features(data.X, bits, model.feature_range)
    if model.scheme is Scheme.RECORD:
        idx, _ = quantize_to_levels(np.asarray(data.X, dtype=np.float64),
                                    model.feature_range, model.num_levels)
        return "per_dim", model.levels[idx].astype(np.int64)
    cube = np.stack([memory_hypervectors(model, g) for g in data.graphs])
    return "per_dim", cube


def _pad_rows(plane, rows):
    n = plane.shape[0]
    if n == rows:
        return plane
    pad_shape = (rows - n,) + plane.shape[1:]
    return np.concatenate([plane, np.zeros(pad_shape, dtype=plane.dtype)])


def _pad_vec(vec, cols):
    out = [0] * cols
    for i, v in enumerate(vec):
        out[i] = int(v)
    return out


def _pad_tile(tile, rows, cols):
    out = [[0] * cols for _ in range(rows)]
    for r in range(tile.shape[0]):
        for c in range(tile.shape[1]):
            out[r][c] = int(tile[r, c])
    return out


class _UnitClocks:
    """Round-robin group assignment with per-unit cycle counters."""

    def __init__(self, units):
        self.cycles = [0] * units
        self._units = units
        self._next = 0

    def claim(self):
        unit = self._next
        self._next = (self._next + 1) % self._units
        return unit


def _golden_train(model, data, config, record_trace):
    rows, cols, bits = config.rows, config.cols, config.bits
    dim, d = model.dim, model.num_features
    base = model.base.astype(np.int64)
    labels = np.asarray(data.labels, dtype=np.int64)
    num_classes = data.num_classes

    kind, plane = _pd_planes(model, data, bits)
    stats = GoldenStats()
    clocks = _UnitClocks(config.units)
    trace = [] if record_trace else None
    static = kind == "static"

    raw_chvs = np.zeros((num_classes, dim), dtype=np.int64)
    tiles = [(c0, min(c0 + cols, d)) for c0 in range(0, d, cols)]

    for k in range(num_classes):
        members = np.nonzero(labels == k)[0]
        if members.size == 0:
            raise ParameterError(f"class {k} has no samples")
        for g0 in range(0, members.size, rows):
            group = _pad_rows(plane[members[g0:g0 + rows]], rows)
            unit = clocks.claim()
            for (c0, c1) in tiles:
                width = c1 - c0
                if static:
                    stats.tile_updates += 1
                    stats.dac_conversions += rows * cols
                    stats.sram_reads_bits += rows * width * bits
                    if trace is None:
                        raw_chvs[k] += (group[:, c0:c1] @ base[c0:c1]).sum(axis=0)
                else:
                    stats.tile_updates += dim
                    stats.dac_conversions += dim * rows * cols
                    stats.sram_reads_bits += dim * rows * width * bits
                    if trace is None:
                        raw_chvs[k] += np.einsum("rcd,cd->d",
                                                 group[:, c0:c1, :], base[c0:c1])
                stats.mzm_modulations += dim * cols
                stats.dac_conversions += dim * cols
                stats.adc_conversions += dim
                stats.adder_ops += dim
                stats.sram_reads_bits += dim * width * bits  # MZM operands
                if trace is None:
                    clocks.cycles[unit] += dim
                else:
                    for j in range(dim):
                        pd = group[:, c0:c1] if static else group[:, c0:c1, j]
                        mzm = base[c0:c1, j]
                        row_out = pd @ mzm
                        bundled = int(row_out.sum())
                        raw_chvs[k, j] += bundled
                        trace.append(TileTraceEvent(
                            cycle=clocks.cycles[unit],
                            unit=unit,
                            mzm=_pad_vec(mzm, cols),
                            pd_tile=_pad_tile(pd, rows, cols),
                            switch_path=SWITCH_TRAIN,
                            bundled_output=bundled,
                        ))
                        clocks.cycles[unit] += 1
            stats.sram_writes_bits += dim * WORD_BITS

    if model.scheme is Scheme.GRAPH:
        raw_chvs = halve_toward_zero(raw_chvs)

    chvs = np.empty_like(raw_chvs)
    scales = np.empty(num_classes, dtype=np.int64)
    for k in range(num_classes):
        chvs[k], scales[k] = normalize_quantize(raw_chvs[k], bits)

    stats.cycles = sum(clocks.cycles)
    stats.wall_cycles = max(clocks.cycles)
    return GoldenRun(chvs=chvs, scales=scales, stats=stats, trace=trace)


def _golden_infer(model, data, config, trained, record_trace):
    rows, cols, bits = config.rows, config.cols, config.bits
    dim, d = model.dim, model.num_features
    base = model.base.astype(np.int64)
    chvs = trained.chvs.astype(np.int64)
    num_classes = trained.num_classes

    kind, plane = _pd_planes(model, data, bits)
    static = kind == "static"
    n_queries = plane.shape[0]
    stats = GoldenStats()
    clocks = _UnitClocks(config.units)
    trace = [] if record_trace else None

    tiles = [(c0, min(c0 + cols, d)) for c0 in range(0, d, cols)]
    blocks = [(b0, min(b0 + cols, dim)) for b0 in range(0, dim, cols)]
    scores = np.zeros((n_queries, num_classes), dtype=np.int64)

    for q0 in range(0, n_queries, rows):
        batch = _pad_rows(plane[q0:q0 + rows], rows)
        unit = clocks.claim()

        # exact encoding of the whole batch, then the same per-query b-bit
        # re-quantization the functional pipeline applies before similarity
        if static:
            phi = batch @ base
        else:
            phi = np.einsum("rcd,cd->rd", batch, base)
        if model.scheme is Scheme.GRAPH:
            phi = halve_toward_zero(phi)
        phi_q = np.empty_like(phi)
        for r in range(rows):
            phi_q[r], _ = normalize_quantize(phi[r], bits)

        batch_scores = np.zeros((rows, num_classes), dtype=np.int64)
        for (b0, b1) in blocks:
            active_dims = b1 - b0
            # encoding sub-phase: each input tile stays `cols` cycles, even
            # when the final block holds fewer hyperdimensions
            for (c0, c1) in tiles:
                width = c1 - c0
                if static:
                    stats.tile_updates += 1
                    stats.dac_conversions += rows * cols
                    stats.sram_reads_bits += rows * width * bits
                else:
                    stats.tile_updates += active_dims
                    stats.dac_conversions += active_dims * rows * cols
                    stats.sram_reads_bits += active_dims * rows * width * bits
                stats.mzm_modulations += cols * cols
                stats.dac_conversions += cols * cols
                stats.adc_conversions += cols * rows
                stats.adder_ops += cols * rows
                stats.sram_reads_bits += active_dims * width * bits
                if trace is None:
                    clocks.cycles[unit] += cols
                else:
                    for step in range(cols):
                        j = b0 + step
                        if j < b1:
                            pd = batch[:, c0:c1] if static else batch[:, c0:c1, j]
                            mzm = base[c0:c1, j]
                            row_out = pd @ mzm
                        else:
                            pd = np.zeros((rows, width), dtype=np.int64)
                            mzm = np.zeros(width, dtype=np.int64)
                            row_out = np.zeros(rows, dtype=np.int64)
                        trace.append(TileTraceEvent(
                            cycle=clocks.cycles[unit],
                            unit=unit,
                            mzm=_pad_vec(mzm, cols),
                            pd_tile=_pad_tile(pd, rows, cols),
                            switch_path=SWITCH_INFER,
                            row_outputs=[int(v) for v in row_out],
                        ))
                        clocks.cycles[unit] += 1

            # similarity sub-phase: encoded tile reloads from the buffer
            # (buffer-local, no SRAM read for the operands)
            stats.tile_updates += 1
            stats.dac_conversions += rows * cols
            pd_block = phi_q[:, b0:b1]
            for k in range(num_classes):
                mzm = chvs[k, b0:b1]
                row_out = pd_block @ mzm
                batch_scores[:, k] += row_out
                stats.mzm_modulations += cols
                stats.dac_conversions += cols
                stats.adc_conversions += rows
                stats.adder_ops += rows
                stats.sram_reads_bits += active_dims * bits
                if trace is not None:
                    trace.append(TileTraceEvent(
                        cycle=clocks.cycles[unit],
                        unit=unit,
                        mzm=_pad_vec(mzm, cols),
                        pd_tile=_pad_tile(pd_block, rows, cols),
                        switch_path=SWITCH_INFER,
                        row_outputs=[int(v) for v in row_out],
                    ))
                clocks.cycles[unit] += 1
        stats.sram_writes_bits += rows * num_classes * WORD_BITS
        take = min(rows, n_queries - q0)
        scores[q0:q0 + take] = batch_scores[:take]

    chv_norms = np.linalg.norm(chvs.astype(np.float64), axis=1)
    labels = np.array([_argmax_cosine(scores[i], chv_norms)
                       for i in range(n_queries)], dtype=np.int64)

    stats.cycles = sum(clocks.cycles)
    stats.wall_cycles = max(clocks.cycles)
    return GoldenRun(scores=scores, labels=labels, stats=stats, trace=trace)


def _argmax_cosine(dots, chv_norms):
    cos = np.zeros(dots.shape[0])
    nonzero = chv_norms > 0
    cos[nonzero] = dots[nonzero] / chv_norms[nonzero]
    return int(np.argmax(cos))
