"""Area model: device counts times per-device areas."""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

from ..errors import ParameterError
from ..hdc.model import DEFAULT_LEVELS, Scheme
from ..sim.config import AcceleratorConfig, WorkloadSpec, dac_count
from .device import DeviceParams

# upper bound of the evaluated datasets' on-chip working set, used when no
# workload is given
NOMINAL_SRAM_KB = 1434.0


@dataclass(frozen=True)
class AreaBreakdown:
    dac_mm2: float
    adc_mm2: float
    mzm_mm2: float
    pd_mm2: float
    sram_mm2: float
    adder_mm2: float
    tia_mm2: float

    @property
    def total_mm2(self) -> float:
        return (self.dac_mm2 + self.adc_mm2 + self.mzm_mm2 + self.pd_mm2
                + self.sram_mm2 + self.adder_mm2 + self.tia_mm2)

    def as_dict(self) -> dict:
        out = {f.name: getattr(self, f.name) for f in fields(self)}
        out["total_mm2"] = self.total_mm2
        return out


def sram_kb_per_unit(workload: WorkloadSpec, config: AcceleratorConfig,
                     num_levels: int = DEFAULT_LEVELS) -> float:
    """On-chip working set of one unit in KB.

    Base hypervectors are bipolar (one bit per element); class hypervectors
    are stored at operand width; inputs are double-buffered.
    """
    d, dim, k = workload.d, workload.dim, workload.num_classes
    bits = d * dim                                  # base / node hypervectors
    if workload.scheme is not Scheme.TRADITIONAL:
        bits += num_levels * dim                    # level table
    bits += k * dim * config.bits                   # class hypervectors
    bits += 2 * config.rows * d * config.bits      # double-buffered inputs
    return bits / 8.0 / 1024.0


def total_area(config: AcceleratorConfig, device: DeviceParams, mode: str,
               workload: WorkloadSpec = None) -> AreaBreakdown:
    """Area breakdown over all units.

    Training uses one bundling ADC per unit, inference (and a combined
    design) one per row plus the bundling one. Adders come in rows of
    ceil(f) to match the photonic throughput. TIA area is folded into the
    ADC figure.
    """
    if mode not in ("train", "infer", "combined"):
        raise ParameterError(f"unknown mode {mode!r}")
    units, rows, cols = config.units, config.rows, config.cols
    areas = device.areas

    if mode == "train":
        adcs = units * 1
        adder_rows = units * 1
    else:
        adcs = units * (rows + 1)
        adder_rows = units * rows
    adders = adder_rows * math.ceil(config.f_ghz)

    if workload is not None:
        sram_kb = sram_kb_per_unit(workload, config)
    else:
        sram_kb = NOMINAL_SRAM_KB

    return AreaBreakdown(
        dac_mm2=dac_count(config) * areas.dac_mm2,
        adc_mm2=adcs * areas.adc_mm2,
        mzm_mm2=units * cols * areas.mzm_mm2,
        pd_mm2=units * rows * cols * areas.pd_mm2,
        sram_mm2=units * sram_kb * areas.sram_mm2_per_kb,
        adder_mm2=adders * areas.adder_mm2,
        tia_mm2=0.0,
    )
