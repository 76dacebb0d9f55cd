"""Power model: static laser and MZM tuning plus event-driven components."""

from __future__ import annotations

from dataclasses import dataclass, fields

from ..errors import ParameterError
from ..sim.config import AcceleratorConfig
from ..sim.schedule import WORD_BITS, ScheduleStats
from .device import DeviceParams, converter_energy, optical_path_loss_db, \
    required_pd_optical_power


@dataclass(frozen=True)
class PowerBreakdown:
    laser_w: float
    mzm_tuning_w: float
    mzm_modulation_w: float
    dac_w: float
    adc_w: float
    tia_w: float
    sram_w: float
    adder_w: float

    @property
    def total_w(self) -> float:
        return (self.laser_w + self.mzm_tuning_w + self.mzm_modulation_w
                + self.dac_w + self.adc_w + self.tia_w + self.sram_w
                + self.adder_w)

    def as_dict(self) -> dict:
        out = {f.name: getattr(self, f.name) for f in fields(self)}
        out["total_w"] = self.total_w
        return out


def laser_power(config: AcceleratorConfig, device: DeviceParams,
                include_distribution_losses: bool = True) -> float:
    """Electrical laser power for the whole accelerator in watts.

    Each column needs enough optical power for all R photodiodes after the
    losses along its path; wall-plug efficiency converts the optical budget
    to electrical draw. Columns are optically independent, so the total is
    linear in C and in the unit count.
    """
    per_pd = required_pd_optical_power(config.bits, device)
    loss_db = optical_path_loss_db(config.rows, device,
                                   include_distribution_losses)
    optical_per_column = per_pd * config.rows * 10.0 ** (loss_db / 10.0)
    electrical_per_column = optical_per_column / device.laser_wallplug_eff
    return electrical_per_column * config.cols * config.units


def total_power(stats: ScheduleStats, config: AcceleratorConfig,
                device: DeviceParams, mode: str) -> PowerBreakdown:
    """Convert schedule counters into a steady-state power breakdown.

    Laser and MZM tuning are always-on static draws; every other component
    is its event count times a per-event energy, divided by the wall
    latency. Schedule counters are per-unit critical-path values, so event
    rates are scaled by the unit count.
    """
    if mode not in ("train", "infer"):
        raise ParameterError(f"unknown mode {mode!r}")
    wall = stats.wall_latency_s
    units = config.units
    bits = config.bits

    def rate(events):
        if events == 0:
            return 0.0
        if wall <= 0:
            raise ParameterError("schedule has events but zero wall latency")
        return events * units / wall

    e_dac = converter_energy(device.dac_ref, bits)
    e_adc = converter_energy(device.adc_ref, bits)
    e_tia = device.tia_energy_fj_per_bit * 1e-15 * bits
    e_mod_bit = device.mzm_mod_energy_fj_per_bit * 1e-15
    e_sram = device.sram_energy_pj_per_32b_access * 1e-12
    e_add = device.adder_energy_pj_per_op * 1e-12

    sram_words = (stats.sram_reads_bits + stats.sram_writes_bits) / WORD_BITS

    return PowerBreakdown(
        laser_w=laser_power(config, device),
        mzm_tuning_w=device.mzm_tuning_mw * 1e-3 * config.cols * units,
        mzm_modulation_w=rate(stats.mzm_mod_bits) * e_mod_bit,
        dac_w=rate(stats.dac_conversions) * e_dac,
        adc_w=rate(stats.adc_conversions) * e_adc,
        tia_w=rate(stats.adc_conversions) * e_tia,
        sram_w=rate(sram_words) * e_sram,
        adder_w=rate(stats.adder_ops) * e_add,
    )
