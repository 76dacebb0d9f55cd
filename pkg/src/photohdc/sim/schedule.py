"""Cycle-exact walks of the training and inference dataflows.

The scheduler turns a workload and a hardware point into cycle counts and
event counters without touching data. Counters are per-unit critical-path
values: total work is spread tile-granularly over the photonic units, the
reported counts are what the busiest unit sees, and system-wide power
accounting later multiplies event rates by the unit count.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParameterError
from ..hdc.model import Scheme
from .config import AcceleratorConfig, WorkloadSpec

WORD_BITS = 32


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def cycles_train_per_group(workload: WorkloadSpec,
                           config: AcceleratorConfig) -> int:
    """Cycles to encode and bundle one group of R samples.

    Traditional encoding keeps an input tile stationary for all D
    hyperdimensions, so a group costs ceil(d/C) * D cycles. Record and
    graph encoding reload both operand sets every cycle, which lets the
    per-dimension feature stream pack across tile boundaries; the cost is
    the amortized ceil(d * D / C).
    """
    d, dim, cols = workload.d, workload.dim, config.cols
    if workload.scheme is Scheme.TRADITIONAL:
        return _ceil_div(d, cols) * dim
    return _ceil_div(d * dim, cols)


def cycles_infer_per_batch(workload: WorkloadSpec,
                           config: AcceleratorConfig) -> int:
    """Cycles for one batch of R queries: encode then score K classes,
    one C-wide block of hyperdimensions at a time."""
    d, dim, cols = workload.d, workload.dim, config.cols
    k = workload.num_classes
    return _ceil_div(dim, cols) * (_ceil_div(d, cols) * cols + k)


@dataclass(frozen=True)
class ScheduleStats:
    """Event counters for one scheduled run (per-unit critical path)."""

    total_cycles: int
    tile_updates: int
    dac_conversions: int
    adc_conversions: int
    mzm_modulations: int
    sram_reads_bits: int
    sram_writes_bits: int
    adder_ops: int
    wall_latency_s: float
    # bit-weighted modulation count: bipolar operand streams cost one bit
    # per symbol, class-hypervector streams cost the full operand width
    mzm_mod_bits: int = 0
    groups: int = 0

    def __post_init__(self):
        for name in ("total_cycles", "tile_updates", "dac_conversions",
                     "adc_conversions", "mzm_modulations", "sram_reads_bits",
                     "sram_writes_bits", "adder_ops"):
            if getattr(self, name) < 0:
                raise ParameterError(f"{name} must be >= 0")


def _wall_latency(total_cycles, tile_updates, config, sharing):
    seconds = total_cycles / (config.f_ghz * 1e9)
    if sharing:
        seconds += tile_updates * config.t_dac_ns * 1e-9
    return seconds


def training_groups(workload: WorkloadSpec, rows: int,
                    grouping: str = "packed") -> int:
    """Number of R-sample bundling groups.

    "packed" counts ceil(n/R) groups over the whole training set, matching
    the analytical latency model; "per_class" rounds each class up
    separately (the last group of a class is zero-padded), which is what
    the hardware bundling path physically requires and what the golden
    simulator does.
    """
    if grouping == "packed":
        return _ceil_div(workload.n_train, rows)
    if grouping == "per_class":
        return sum(_ceil_div(c, rows) for c in workload.per_class_counts if c)
    raise ParameterError(f"unknown grouping policy {grouping!r}")


def schedule_training(workload: WorkloadSpec, config: AcceleratorConfig,
                      grouping: str = "packed") -> ScheduleStats:
    """Walk the training dataflow and count cycles and events.

    Groups are split tile-granularly across units, so the critical path is
    ceil(groups * cycles_per_group / units).
    """
    scheme = workload.scheme
    rows, cols, units = config.rows, config.cols, config.units
    bits = config.bits
    d, dim = workload.d, workload.dim
    sharing = config.sharing_for(scheme)

    cpg = cycles_train_per_group(workload, config)
    groups = training_groups(workload, rows, grouping)
    total_cycles = _ceil_div(groups * cpg, units)

    if scheme is Scheme.TRADITIONAL:
        tiles_per_group = _ceil_div(d, cols)
        tile_updates = _ceil_div(groups * tiles_per_group, units)
    else:
        # operands refresh every cycle
        tile_updates = total_cycles

    mzm_modulations = total_cycles * cols
    mzm_mod_bits = mzm_modulations  # bipolar base-hypervector stream
    adc_conversions = total_cycles  # one bundling ADC per unit
    dac_conversions = tile_updates * rows * cols + mzm_modulations
    adder_ops = total_cycles

    # SRAM traffic, counted at actual operand granularity (padding columns
    # of a partial tile are not read)
    if scheme is Scheme.TRADITIONAL:
        reads_per_group = d * dim * bits + rows * d * bits
    else:
        reads_per_group = d * dim * bits + rows * d * dim * bits
    writes_per_group = dim * WORD_BITS  # partial class-hypervector write-back
    sram_reads_bits = _ceil_div(groups * reads_per_group, units)
    sram_writes_bits = _ceil_div(groups * writes_per_group, units)

    wall = _wall_latency(total_cycles, tile_updates, config, sharing)
    return ScheduleStats(
        total_cycles=total_cycles,
        tile_updates=tile_updates,
        dac_conversions=dac_conversions,
        adc_conversions=adc_conversions,
        mzm_modulations=mzm_modulations,
        sram_reads_bits=sram_reads_bits,
        sram_writes_bits=sram_writes_bits,
        adder_ops=adder_ops,
        wall_latency_s=wall,
        mzm_mod_bits=mzm_mod_bits,
        groups=groups,
    )


def schedule_inference(workload: WorkloadSpec, config: AcceleratorConfig,
                       n_queries: int) -> ScheduleStats:
    """Walk the inference dataflow for n_queries queries."""
    if n_queries < 1:
        raise ParameterError("n_queries must be >= 1")
    scheme = workload.scheme
    rows, cols, units = config.rows, config.cols, config.units
    bits = config.bits
    d, dim, k = workload.d, workload.dim, workload.num_classes
    sharing = config.sharing_for(scheme)

    cpb = cycles_infer_per_batch(workload, config)
    batches = _ceil_div(n_queries, rows)
    total_cycles = _ceil_div(batches * cpb, units)

    blocks = _ceil_div(dim, cols)
    input_tiles = _ceil_div(d, cols)
    encode_cycles_per_batch = blocks * input_tiles * cols
    score_cycles_per_batch = blocks * k

    if scheme is Scheme.TRADITIONAL:
        # input tiles reload every block, plus one encoded-tile reload
        updates_per_batch = blocks * (input_tiles + 1)
    else:
        updates_per_batch = encode_cycles_per_batch + blocks
    tile_updates = _ceil_div(batches * updates_per_batch, units)

    mzm_modulations = total_cycles * cols
    mod_bits_per_batch = (encode_cycles_per_batch * cols * 1
                          + score_cycles_per_batch * cols * bits)
    mzm_mod_bits = _ceil_div(batches * mod_bits_per_batch, units)
    adc_conversions = total_cycles * rows  # one ADC per row every cycle
    dac_conversions = tile_updates * rows * cols + mzm_modulations
    adder_ops = total_cycles * rows

    if scheme is Scheme.TRADITIONAL:
        reads_per_batch = (d * dim * bits          # base hypervector stream
                           + blocks * rows * d * bits  # input tile reloads
                           + k * dim * bits)       # class hypervector stream
    else:
        reads_per_batch = (rows * d * dim * bits   # level/memory operands
                           + d * dim * bits
                           + k * dim * bits)
    writes_per_batch = rows * k * WORD_BITS        # final similarity scores
    sram_reads_bits = _ceil_div(batches * reads_per_batch, units)
    sram_writes_bits = _ceil_div(batches * writes_per_batch, units)

    wall = _wall_latency(total_cycles, tile_updates, config, sharing)
    return ScheduleStats(
        total_cycles=total_cycles,
        tile_updates=tile_updates,
        dac_conversions=dac_conversions,
        adc_conversions=adc_conversions,
        mzm_modulations=mzm_modulations,
        sram_reads_bits=sram_reads_bits,
        sram_writes_bits=sram_writes_bits,
        adder_ops=adder_ops,
        wall_latency_s=wall,
        mzm_mod_bits=mzm_mod_bits,
        groups=batches,
    )
