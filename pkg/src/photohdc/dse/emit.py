"""CSV and markdown emitters for search results and reports."""

from __future__ import annotations

import csv

from ..ppa.report import PpaReport
from .search import SearchResult

CONFIG_FIELDS = ("rows", "cols", "units", "f_ghz", "pds_per_dac", "t_dac_ns")
METRIC_FIELDS = ("latency_s", "power_w", "area_mm2", "edp_js", "edap_js_mm2")


def _config_cells(config):
    return [getattr(config, f) for f in CONFIG_FIELDS]


def search_result_to_csv(result: SearchResult, fh):
    """All feasible points, one row each, per-workload metrics side by side."""
    writer = csv.writer(fh)
    workload_names = [m.workload for m in result.per_workload] or sorted(
        {m.workload for p in result.points for m in p.per_workload})
    header = list(CONFIG_FIELDS)
    for name in workload_names:
        header += [f"{name}_{metric}" for metric in METRIC_FIELDS]
    header.append("objective")
    writer.writerow(header)
    for point in result.points:
        row = _config_cells(point.config)
        for m in point.per_workload:
            row += [m.latency_s, m.power_w, m.area_mm2, m.edp_js, m.edap_js_mm2]
        row.append(point.objective_value)
        writer.writerow(row)


def sweep_to_csv(curve, axis: str, fh):
    writer = csv.writer(fh)
    writer.writerow([f"{axis}_budget", "best_objective", "normalized"]
                    + list(CONFIG_FIELDS))
    for pt in curve:
        cfg = _config_cells(pt.best_config) if pt.best_config else [""] * len(CONFIG_FIELDS)
        writer.writerow([pt.budget, pt.objective_value, pt.normalized] + cfg)


def config_label(config) -> str:
    label = (f"{config.rows}x{config.cols}, {config.units} units, "
             f"{config.f_ghz:g} GHz")
    if config.pds_per_dac > 1:
        label += f", {config.t_dac_ns:g} ns"
    return label


def report_markdown_row(report: PpaReport, scheme, config) -> str:
    """One row in the published-table layout."""
    return (f"| {str(scheme).capitalize()} | {report.workload} "
            f"| {config_label(config)} | {report.latency_s * 1e3:.4g} "
            f"| {report.total_power_w:.3g} |")


MARKDOWN_HEADER = ("| Enc. type | Dataset | Params | Latency (ms) | Power (W) |\n"
                   "|---|---|---|---|---|")


def search_markdown_table(result: SearchResult, scheme) -> str:
    lines = [MARKDOWN_HEADER]
    if result.no_feasible_design:
        lines.append("| " + str(scheme) + " | (all) | no feasible design | - | - |")
        return "\n".join(lines)
    for m in result.per_workload:
        lines.append(f"| {str(scheme).capitalize()} | {m.workload} "
                     f"| {config_label(result.best_config)} "
                     f"| {m.latency_s * 1e3:.4g} | {m.power_w:.3g} |")
    return "\n".join(lines)
