"""Exhaustive design-space search under power and area budgets."""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from ..errors import ParameterError
from ..hdc.model import Scheme
from ..ppa.area import total_area
from ..ppa.device import DeviceParams
from ..ppa.power import total_power
from ..ppa.report import DEFAULT_QUERIES
from ..sim.config import AcceleratorConfig, wire_delay_check
from ..sim.schedule import schedule_inference, schedule_training

TIE_RELATIVE = 1e-9


class Objective(str, Enum):
    EDP = "edp"
    EDAP = "edap"


def default_grid():
    """Default search grid; sharing degrees follow the published analysis,
    which evaluates up to 8 PDs per DAC."""
    return dict(
        r_values=tuple(range(4, 129, 4)),
        c_values=tuple(range(4, 129, 4)),
        u_values=(1, 2, 4),
        f_values_ghz=(1.0, 2.0, 5.0),
        pds_per_dac_values=(1, 2, 4, 6, 8),
    )


@dataclass(frozen=True)
class SearchSpace:
    r_values: tuple
    c_values: tuple
    u_values: tuple
    f_values_ghz: tuple
    pds_per_dac_values: tuple
    scheme: Scheme
    mode: str
    bits: int = 4

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme.coerce(self.scheme))
        for name in ("r_values", "c_values", "u_values", "f_values_ghz",
                     "pds_per_dac_values"):
            values = tuple(sorted(set(getattr(self, name))))
            if not values or min(values) <= 0:
                raise ParameterError(f"{name} must be non-empty and positive")
            object.__setattr__(self, name, values)
        if self.mode not in ("train", "infer", "combined"):
            raise ParameterError(f"unknown mode {self.mode!r}")

    @classmethod
    def default(cls, scheme, mode) -> "SearchSpace":
        return cls(scheme=scheme, mode=mode, **default_grid())

    @property
    def size(self) -> int:
        return (len(self.r_values) * len(self.c_values) * len(self.u_values)
                * len(self.f_values_ghz) * len(self.pds_per_dac_values))

    def configs(self):
        for r, c, u, f, pds in itertools.product(
                self.r_values, self.c_values, self.u_values,
                self.f_values_ghz, self.pds_per_dac_values):
            yield AcceleratorConfig(rows=r, cols=c, units=u, f_ghz=f,
                                    bits=self.bits, pds_per_dac=pds)


@dataclass(frozen=True)
class Budgets:
    power_w: float
    area_mm2: float

    def __post_init__(self):
        if self.power_w <= 0 or self.area_mm2 <= 0:
            raise ParameterError("budgets must be positive")


@dataclass(frozen=True)
class WorkloadMetrics:
    workload: str
    latency_s: float
    power_w: float
    area_mm2: float
    edp_js: float
    edap_js_mm2: float


@dataclass(frozen=True)
class PointEval:
    config: AcceleratorConfig
    feasible: bool
    objective_value: float
    per_workload: tuple


@dataclass
class SearchResult:
    best_config: AcceleratorConfig | None
    objective: Objective
    objective_value: float | None
    per_workload: tuple
    feasible_count: int
    evaluated_count: int
    ties: list
    budgets: Budgets
    points: list = field(default_factory=list)

    @property
    def no_feasible_design(self) -> bool:
        return self.best_config is None


def _mode_metrics(config, workload, device, mode, n_queries):
    if mode == "train":
        stats = schedule_training(workload, config)
        power = total_power(stats, config, device, "train").total_w
        area = total_area(config, device, "train", workload).total_mm2
        lat = stats.wall_latency_s
        edp = power * lat * lat
        return lat, power, area, edp, edp * area
    if mode == "infer":
        stats = schedule_inference(workload, config, n_queries)
        power = total_power(stats, config, device, "infer").total_w
        area = total_area(config, device, "infer", workload).total_mm2
        lat = stats.wall_latency_s
        edp = power * lat * lat
        return lat, power, area, edp, edp * area
    # combined: resource needs are the max of the two modes, the objective
    # adds them
    lt, pt, at, et, _ = _mode_metrics(config, workload, device, "train", n_queries)
    li, pi, ai, ei, _ = _mode_metrics(config, workload, device, "infer", n_queries)
    power, area = max(pt, pi), max(at, ai)
    edp = et + ei
    return lt + li, power, area, edp, edp * area


def evaluate_point(config: AcceleratorConfig, workloads, budgets: Budgets,
                   device: DeviceParams, mode: str,
                   objective: Objective = Objective.EDAP,
                   n_queries: int = DEFAULT_QUERIES) -> PointEval:
    """Evaluate one design point against every workload.

    A point is infeasible when any workload exceeds the power or area cap
    or the row wire cannot settle within a cycle; infeasibility is a value,
    not an error. The objective is the arithmetic mean over workloads.
    """
    objective = Objective(objective)
    per_workload = []
    feasible = bool(wire_delay_check(config, device))
    for workload in workloads:
        lat, power, area, edp, edap = _mode_metrics(config, workload, device,
                                                    mode, n_queries)
        per_workload.append(WorkloadMetrics(workload.name, lat, power, area,
                                            edp, edap))
        if power > budgets.power_w or area > budgets.area_mm2:
            feasible = False
    values = [m.edp_js if objective is Objective.EDP else m.edap_js_mm2
              for m in per_workload]
    return PointEval(config=config, feasible=feasible,
                     objective_value=sum(values) / len(values),
                     per_workload=tuple(per_workload))


def _config_key(config: AcceleratorConfig):
    return (config.rows, config.cols, config.units, config.f_ghz,
            config.pds_per_dac)


def _tie_break_key(point: PointEval):
    mean_area = sum(m.area_mm2 for m in point.per_workload) / len(point.per_workload)
    mean_power = sum(m.power_w for m in point.per_workload) / len(point.per_workload)
    return (mean_area, mean_power, _config_key(point.config))


def search_threads() -> int:
    value = os.environ.get("PHOTOHDC_THREADS", "1")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def exhaustive_search(space: SearchSpace, workloads, budgets: Budgets,
                      device: DeviceParams,
                      objective: Objective = Objective.EDAP,
                      n_queries: int = DEFAULT_QUERIES,
                      collect_points: bool = False,
                      threads: int = None,
                      _cache: dict = None) -> SearchResult:
    """Evaluate every grid point and return the deterministic winner.

    Ties within 1e-9 relative of the best objective break toward smaller
    area, then smaller power, then the lexicographically smallest config.
    The grid may be partitioned over threads; the reduction is an
    associative min over fully ordered keys, so the result is independent
    of the partitioning.
    """
    objective = Objective(objective)
    workloads = tuple(workloads)
    if threads is None:
        threads = search_threads()

    def evaluate(config):
        if _cache is not None:
            key = (_config_key(config), space.mode)
            hit = _cache.get(key)
            if hit is None:
                hit = evaluate_point(config, workloads, _UNBOUNDED, device,
                                     space.mode, objective, n_queries)
                _cache[key] = hit
            # re-apply the budget caps the cache was computed without
            feasible = bool(wire_delay_check(config, device)) and all(
                m.power_w <= budgets.power_w and m.area_mm2 <= budgets.area_mm2
                for m in hit.per_workload)
            return PointEval(config=config, feasible=feasible,
                             objective_value=hit.objective_value,
                             per_workload=hit.per_workload)
        return evaluate_point(config, workloads, budgets, device, space.mode,
                              objective, n_queries)

    configs = list(space.configs())
    if threads > 1:
        chunk = max(1, math.ceil(len(configs) / (threads * 8)))
        chunks = [configs[i:i + chunk] for i in range(0, len(configs), chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = pool.map(lambda cs: [evaluate(c) for c in cs], chunks)
            evaluations = [p for batch in results for p in batch]
    else:
        evaluations = [evaluate(c) for c in configs]

    best = None
    ties = []
    feasible_count = 0
    points = []
    for point in evaluations:
        if collect_points and point.feasible:
            points.append(point)
        if not point.feasible:
            continue
        feasible_count += 1
        if best is None or point.objective_value < best.objective_value * (1 - TIE_RELATIVE):
            best = point
            ties = [point]
        elif point.objective_value <= best.objective_value * (1 + TIE_RELATIVE):
            ties.append(point)
            if _tie_break_key(point) < _tie_break_key(best):
                best = point

    if best is None:
        return SearchResult(best_config=None, objective=objective,
                            objective_value=None, per_workload=(),
                            feasible_count=0, evaluated_count=len(configs),
                            ties=[], budgets=budgets, points=points)
    return SearchResult(best_config=best.config, objective=objective,
                        objective_value=best.objective_value,
                        per_workload=best.per_workload,
                        feasible_count=feasible_count,
                        evaluated_count=len(configs),
                        ties=[p.config for p in ties],
                        budgets=budgets, points=points)


_UNBOUNDED = Budgets(power_w=float("inf"), area_mm2=float("inf"))


@dataclass(frozen=True)
class SweepPoint:
    budget: float
    objective_value: float | None
    normalized: float | None
    best_config: AcceleratorConfig | None


def budget_sweep(space: SearchSpace, workloads, device: DeviceParams,
                 axis: str, values, fixed_other_budget: float,
                 objective: Objective = Objective.EDP,
                 n_queries: int = DEFAULT_QUERIES):
    """One exhaustive search per budget value along one axis.

    Point evaluations are budget-independent, so they are computed once and
    shared across the per-budget searches. The curve is normalized to its
    largest feasible objective.
    """
    if axis not in ("power", "area"):
        raise ParameterError(f"axis must be 'power' or 'area', got {axis!r}")
    values = list(values)
    if values != sorted(values):
        raise ParameterError("budget values must be sorted ascending")
    cache = {}
    results = []
    for value in values:
        if axis == "power":
            budgets = Budgets(power_w=value, area_mm2=fixed_other_budget)
        else:
            budgets = Budgets(power_w=fixed_other_budget, area_mm2=value)
        results.append(exhaustive_search(space, workloads, budgets, device,
                                         objective, n_queries, _cache=cache))
    finite = [r.objective_value for r in results if r.objective_value is not None]
    peak = max(finite) if finite else None
    curve = []
    for value, result in zip(values, results):
        norm = (None if result.objective_value is None or not peak
                else result.objective_value / peak)
        curve.append(SweepPoint(budget=value,
                                objective_value=result.objective_value,
                                normalized=norm,
                                best_config=result.best_config))
    return curve
