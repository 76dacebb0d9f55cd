"""Composed latency / power / area / EDP / EDAP reports."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParameterError
from ..sim.config import AcceleratorConfig, WorkloadSpec
from ..sim.schedule import ScheduleStats, schedule_inference, schedule_training
from .area import AreaBreakdown, total_area
from .device import DeviceParams
from .power import PowerBreakdown, total_power

DEFAULT_QUERIES = 1_000_000


@dataclass(frozen=True)
class PpaReport:
    workload: str
    mode: str
    latency_s: float
    power: PowerBreakdown
    area: AreaBreakdown
    stats: ScheduleStats

    @property
    def total_power_w(self) -> float:
        return self.power.total_w

    @property
    def total_area_mm2(self) -> float:
        return self.area.total_mm2

    @property
    def energy_j(self) -> float:
        return self.power.total_w * self.latency_s

    @property
    def edp_js(self) -> float:
        return self.energy_j * self.latency_s

    @property
    def edap_js_mm2(self) -> float:
        return self.edp_js * self.area.total_mm2

    def as_dict(self) -> dict:
        return {
            "workload": self.workload,
            "mode": self.mode,
            "latency_s": self.latency_s,
            "power_w": self.power.as_dict(),
            "area_mm2": self.area.as_dict(),
            "energy_j": self.energy_j,
            "edp_js": self.edp_js,
            "edap_js_mm2": self.edap_js_mm2,
        }


def ppa_report(workload: WorkloadSpec, config: AcceleratorConfig,
               device: DeviceParams, mode: str,
               n_queries: int = None) -> PpaReport:
    """Schedule a run and convert it into a full PPA report.

    Args:
        mode: "train" or "infer"; inference defaults to one million queries.
    """
    if workload.n_train < 1:
        raise ParameterError("workload has no samples")
    if mode == "train":
        stats = schedule_training(workload, config)
    elif mode == "infer":
        stats = schedule_inference(workload, config,
                                   n_queries or DEFAULT_QUERIES)
    else:
        raise ParameterError(f"unknown mode {mode!r}")
    power = total_power(stats, config, device, mode)
    area = total_area(config, device, mode, workload)
    return PpaReport(workload=workload.name, mode=mode,
                     latency_s=stats.wall_latency_s, power=power, area=area,
                     stats=stats)
