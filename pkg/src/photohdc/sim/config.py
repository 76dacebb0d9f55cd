"""Hardware configuration point and small derived quantities."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from ..errors import ParameterError
from ..hdc.model import DEFAULT_BITS, DEFAULT_DIM, Scheme


def derive_t_dac(pds_per_dac: int, dac_rate_gsps: float, f_ghz: float) -> int:
    """Tile-update delay in whole nanoseconds caused by DAC sharing.

    Zero when all shared conversions complete within one clock cycle
    (e.g. 2 PDs per 10 GS/s DAC under a 0.2 ns cycle), else the conversion
    burst rounded up to whole nanoseconds.
    """
    if dac_rate_gsps <= 0:
        raise ParameterError("DAC sampling rate must be positive")
    burst_ns = pds_per_dac / dac_rate_gsps
    if burst_ns <= 1.0 / f_ghz:
        return 0
    return math.ceil(burst_ns)


@dataclass(frozen=True)
class AcceleratorConfig:
    """One hardware design point.

    rows/cols give the photodiode array shape of each photonic unit, units
    the number of replicated units. pds_per_dac = 1 means a dedicated
    programming DAC per photodiode (no sharing). t_dac_ns is derived from
    the DAC sampling rate unless given explicitly.
    """

    rows: int
    cols: int
    units: int = 1
    f_ghz: float = 5.0
    bits: int = DEFAULT_BITS
    pds_per_dac: int = 1
    dac_rate_gsps: float = 10.0
    t_dac_ns: float | None = None

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1 or self.units < 1:
            raise ParameterError("rows, cols and units must all be >= 1")
        if self.f_ghz <= 0:
            raise ParameterError("clock frequency must be positive")
        if self.pds_per_dac < 1:
            raise ParameterError("pds_per_dac must be >= 1")
        if self.bits < 2:
            raise ParameterError("operand width must be >= 2 bits")
        if self.t_dac_ns is None:
            object.__setattr__(
                self, "t_dac_ns",
                float(derive_t_dac(self.pds_per_dac, self.dac_rate_gsps,
                                   self.f_ghz)))
        if self.t_dac_ns < 0:
            raise ParameterError("t_dac_ns must be >= 0")

    @property
    def sharing_enabled(self) -> bool:
        return self.pds_per_dac > 1

    def sharing_for(self, scheme) -> bool:
        """Record and graph encoding refresh tiles every cycle, so DAC
        sharing is forced off for them."""
        return self.sharing_enabled and Scheme.coerce(scheme) is Scheme.TRADITIONAL

    def with_sharing(self, pds_per_dac: int) -> "AcceleratorConfig":
        return replace(self, pds_per_dac=pds_per_dac, t_dac_ns=None)

    @property
    def cycle_ns(self) -> float:
        return 1.0 / self.f_ghz


def programming_dacs_per_unit(config: AcceleratorConfig) -> int:
    """Programming DACs needed for one unit's photodiode array."""
    return math.ceil(config.rows * config.cols / config.pds_per_dac)


def dac_count(config: AcceleratorConfig) -> int:
    """Total DACs: per unit, the shared programming DACs plus one per MZM."""
    return config.units * (programming_dacs_per_unit(config) + config.cols)


@dataclass(frozen=True)
class WireDelayResult:
    ok: bool
    delay_ns: float
    limit_ns: float

    def __bool__(self):
        return self.ok


def wire_delay_check(config: AcceleratorConfig, device) -> WireDelayResult:
    """Check that a row's accumulation wire settles within one cycle.

    The wire spans all C columns at the photodiode pitch.
    """
    length_cm = config.cols * device.pd_pitch_um * 1e-4
    delay_ns = length_cm / device.signal_velocity_cm_per_ns
    limit = config.cycle_ns
    return WireDelayResult(ok=delay_ns < limit, delay_ns=delay_ns, limit_ns=limit)


@dataclass(frozen=True)
class WorkloadSpec:
    """Shape of one training/inference workload.

    d is the feature count, or the average vertex count for graph encoding.
    """

    name: str
    d: int
    num_classes: int
    n_train: int
    scheme: Scheme
    dim: int = DEFAULT_DIM
    per_class_counts: tuple = None

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme.coerce(self.scheme))
        if min(self.d, self.num_classes, self.dim) < 1 or self.n_train < 1:
            raise ParameterError("workload dimensions must be positive")
        if self.per_class_counts is None:
            from ..datasets import uniform_class_counts
            counts = uniform_class_counts(self.n_train, self.num_classes)
            object.__setattr__(self, "per_class_counts", tuple(int(c) for c in counts))
        if sum(self.per_class_counts) != self.n_train:
            raise ParameterError("per-class counts must sum to n_train")

    @classmethod
    def from_descriptor(cls, desc, scheme=None, dim=DEFAULT_DIM) -> "WorkloadSpec":
        scheme = Scheme.coerce(scheme) if scheme is not None else desc.schemes[0]
        if scheme not in desc.schemes:
            raise ParameterError(
                f"{desc.name} is not evaluated with {scheme.value} encoding")
        return cls(name=desc.name, d=desc.d, num_classes=desc.num_classes,
                   n_train=desc.train_size, scheme=scheme, dim=dim)
