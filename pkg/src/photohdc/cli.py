"""Batch command-line surface.

Subcommands: train, ppa, dse, sweep, validate. Every command writes a
manifest.json next to its outputs; exit status is 0 on success, 1 on an
internal failure, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import hdc
from .datasets import (
    GraphDataset,
    builtin,
    builtin_specs,
    load_csv,
    load_edge_list,
    synth_classification,
    synth_graphs,
    train_test_split,
)
from .dse import (
    Budgets,
    Objective,
    SearchSpace,
    budget_sweep,
    default_grid,
    exhaustive_search,
    report_markdown_row,
    search_markdown_table,
    search_result_to_csv,
    sweep_to_csv,
)
from .errors import DataFormatError, ParameterError
from .manifest import build_manifest, write_manifest
from .ppa import (
    default_device_params,
    load_device_params,
    ppa_report,
)
from .ppa.calibrate import calibrate_device
from .reference import reference_config
from .sim.config import AcceleratorConfig, WorkloadSpec, wire_delay_check

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _parse_values(text, cast=int):
    """Parse "1,2,4" or "4:128:4" (inclusive range) into a tuple."""
    if ":" in text:
        parts = [cast(v) for v in text.split(":")]
        if len(parts) != 3:
            raise UsageError(f"range syntax is start:stop:step, got {text!r}")
        start, stop, step = parts
        out = []
        v = start
        while v <= stop:
            out.append(v)
            v += step
        return tuple(out)
    return tuple(cast(v) for v in text.split(","))


def _parse_synth(text):
    params = {}
    for item in text.split(","):
        if not item:
            continue
        key, _, value = item.partition("=")
        params[key.strip()] = float(value)
    return params


def _load_training_data(args):
    """Resolve --dataset into (LabeledDataset|GraphDataset, kind)."""
    src = args.dataset
    if src.startswith("synth:"):
        p = _parse_synth(src[len("synth:"):])
        data = synth_classification(d=int(p.get("d", 16)),
                                    num_classes=int(p.get("k", 3)),
                                    n_per_class=int(p.get("n", 30)),
                                    separation_sigma=p.get("sep", 6.0),
                                    seed=args.seed)
        return data, "tabular"
    if src.startswith("synthgraph:"):
        p = _parse_synth(src[len("synthgraph:"):])
        data = synth_graphs(num_graphs=int(p.get("n", 40)),
                            avg_vertices=int(p.get("v", 12)),
                            num_classes=int(p.get("k", 2)),
                            edge_probability=p.get("p", 0.15),
                            seed=args.seed)
        return data, "graph"
    path = Path(src)
    if not path.exists():
        raise UsageError(f"dataset file not found: {path}")
    if path.suffix in (".edges", ".edgelist", ".graph"):
        graphs = load_edge_list(path)
        num_classes = max(g.label for g in graphs) + 1
        return GraphDataset(tuple(graphs), num_classes), "graph"
    return load_csv(path, has_header=args.csv_header), "tabular"


def _split_graphs(data: GraphDataset, seed, test_fraction=0.3):
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(data.graphs))
    n_test = int(round(len(order) * test_fraction))
    test = [data.graphs[i] for i in order[:n_test]]
    train = [data.graphs[i] for i in order[n_test:]]
    return (GraphDataset(tuple(train), data.num_classes),
            GraphDataset(tuple(test), data.num_classes))


def cmd_train(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    data, kind = _load_training_data(args)

    if kind == "graph":
        if args.scheme != "graph":
            raise UsageError("graph datasets need --scheme graph")
        train, test = _split_graphs(data, args.seed)
        if test.graphs and set(g.label for g in train.graphs) != set(
                g.label for g in data.graphs):
            train, test = data, GraphDataset((), data.num_classes)
        model = hdc.generate_model("graph", data.max_vertices, args.dim,
                                   args.levels, args.seed)
    else:
        if args.scheme == "graph":
            raise UsageError("--scheme graph needs a graph dataset")
        train, test = train_test_split(data, seed=args.seed)
        model = hdc.generate_model(args.scheme, train.num_features, args.dim,
                                   args.levels, args.seed,
                                   feature_range=train.feature_range)

    trained = hdc.train_single_pass(train, model, args.bits)
    metrics = {
        "train_accuracy": hdc.accuracy(trained, model, train),
        "train_size": int(len(train.labels)),
        "test_size": int(len(test.labels)) if hasattr(test, "labels") else 0,
        "scheme": args.scheme,
        "bits": args.bits,
        "dim": args.dim,
    }
    if metrics["test_size"]:
        metrics["accuracy"] = hdc.accuracy(trained, model, test)

    model_doc = {
        "scheme": args.scheme,
        "dim": args.dim,
        "bits": args.bits,
        "seed": args.seed,
        "levels": args.levels,
        "scales": [int(s) for s in trained.scales],
        "chvs": [[int(v) for v in row] for row in trained.chvs],
    }
    (out_dir / "model.json").write_text(
        json.dumps(model_doc, sort_keys=True, separators=(",", ":")) + "\n")
    (out_dir / "metrics.json").write_text(
        json.dumps(metrics, indent=2, sort_keys=True) + "\n")
    write_manifest(build_manifest("train", vars(args), args.device_params,
                                  args.seed), out_dir)
    print(f"trained {args.scheme} model: "
          + ", ".join(f"{k}={v}" for k, v in sorted(metrics.items())))
    return EXIT_OK


def _device(args):
    if args.device_params:
        path = Path(args.device_params)
        if not path.exists():
            raise UsageError(f"device parameters file not found: {path}")
        device = load_device_params(path)
    else:
        device = default_device_params()
    if args.calibrate:
        device, _ = calibrate_device(device)
    return device


def _config_from_args(args) -> AcceleratorConfig:
    if args.units < 1:
        raise UsageError("--units must be >= 1")
    return AcceleratorConfig(rows=args.rows, cols=args.cols, units=args.units,
                             f_ghz=args.freq_ghz, bits=args.bits,
                             pds_per_dac=args.pds_per_dac)


def _workloads_from_names(names, scheme, dim):
    out = []
    for name in names:
        try:
            desc = builtin(name)
        except KeyError as exc:
            raise UsageError(str(exc)) from None
        out.append(WorkloadSpec.from_descriptor(desc, scheme, dim))
    return out


def cmd_ppa(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    device = _device(args)
    config = _config_from_args(args)
    (workload,) = _workloads_from_names([args.dataset], args.scheme, args.dim)
    mode = "train" if args.mode == "train" else "infer"
    report = ppa_report(workload, config, device, mode, args.queries)

    doc = report.as_dict()
    wire = wire_delay_check(config, device)
    if not wire.ok:
        doc["warnings"] = [
            f"row wire delay {wire.delay_ns:.3f} ns exceeds the "
            f"{wire.limit_ns:.3f} ns cycle"]
    (out_dir / "report.json").write_text(
        json.dumps(doc, indent=2, sort_keys=True) + "\n")
    row = report_markdown_row(report, args.scheme, config)
    (out_dir / "report.md").write_text(row + "\n")
    write_manifest(build_manifest("ppa", vars(args), args.device_params,
                                  args.seed), out_dir)
    print(row)
    return EXIT_OK


def _space_from_args(args) -> SearchSpace:
    grid = default_grid()
    if args.r_values:
        grid["r_values"] = _parse_values(args.r_values)
    if args.c_values:
        grid["c_values"] = _parse_values(args.c_values)
    if args.u_values:
        grid["u_values"] = _parse_values(args.u_values)
    if args.f_values:
        grid["f_values_ghz"] = _parse_values(args.f_values, float)
    if args.pds_values:
        grid["pds_per_dac_values"] = _parse_values(args.pds_values)
    mode = "train" if args.mode == "train" else "infer"
    return SearchSpace(scheme=args.scheme, mode=mode, bits=args.bits, **grid)


def cmd_dse(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    device = _device(args)
    names = args.datasets.split(",")
    space = _space_from_args(args)
    workloads = _workloads_from_names(names, args.scheme, args.dim)
    budgets = Budgets(power_w=args.power_budget_w, area_mm2=args.area_budget_mm2)
    result = exhaustive_search(space, workloads, budgets, device,
                               Objective(args.objective),
                               n_queries=args.queries, collect_points=True)

    with open(out_dir / "search.csv", "w", newline="") as fh:
        search_result_to_csv(result, fh)
    summary = {
        "no_feasible_design": result.no_feasible_design,
        "feasible_count": result.feasible_count,
        "evaluated_count": result.evaluated_count,
        "objective": result.objective.value,
    }
    if not result.no_feasible_design:
        c = result.best_config
        summary["best_config"] = {
            "rows": c.rows, "cols": c.cols, "units": c.units,
            "f_ghz": c.f_ghz, "pds_per_dac": c.pds_per_dac,
            "t_dac_ns": c.t_dac_ns,
        }
        summary["objective_value"] = result.objective_value
    (out_dir / "winner.json").write_text(
        json.dumps(summary, indent=2, sort_keys=True) + "\n")
    (out_dir / "table.md").write_text(
        search_markdown_table(result, args.scheme) + "\n")
    write_manifest(build_manifest("dse", vars(args), args.device_params,
                                  args.seed), out_dir)
    if result.no_feasible_design:
        print("no feasible design")
    else:
        print(f"winner: {summary['best_config']} "
              f"{result.objective.value}={result.objective_value:.3e} "
              f"({result.feasible_count}/{result.evaluated_count} feasible)")
    return EXIT_OK


def cmd_sweep(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    device = _device(args)
    names = args.datasets.split(",")
    space = _space_from_args(args)
    workloads = _workloads_from_names(names, args.scheme, args.dim)
    values = sorted(_parse_values(args.values, float))
    fixed = args.area_budget_mm2 if args.axis == "power" else args.power_budget_w
    curve = budget_sweep(space, workloads, device, args.axis, values, fixed,
                         Objective(args.objective), n_queries=args.queries)
    with open(out_dir / "sweep.csv", "w", newline="") as fh:
        sweep_to_csv(curve, args.axis, fh)
    write_manifest(build_manifest("sweep", vars(args), args.device_params,
                                  args.seed), out_dir)
    for pt in curve:
        norm = "-" if pt.normalized is None else f"{pt.normalized:.4f}"
        print(f"{args.axis} budget {pt.budget:g}: normalized best {norm}")
    return EXIT_OK


def _validate_checks(device):
    """Yield (name, ok, detail) for the self-validation suite."""
    from .datasets import synth_classification
    from .sim.config import derive_t_dac
    from .sim.golden import golden_tile_run
    from .sim.schedule import cycles_train_per_group

    iso = WorkloadSpec.from_descriptor(builtin("ISOLET"), "traditional")
    cfg = reference_config("traditional", "train")
    got = cycles_train_per_group(iso, cfg)
    yield ("train cycle formula", got == 9 * 4096, f"got {got}")

    shared = AcceleratorConfig(rows=128, cols=128, units=1, f_ghz=5.0,
                               pds_per_dac=6)
    from .sim.config import programming_dacs_per_unit
    yield ("DAC sharing count", programming_dacs_per_unit(shared) == 2731,
           f"got {programming_dacs_per_unit(shared)}")
    cases = [(6, 1), (2, 0), (16, 2)]
    ok = all(derive_t_dac(p, 10.0, 5.0) == t for p, t in cases)
    yield ("tile-update delay", ok, str([(p, derive_t_dac(p, 10.0, 5.0))
                                         for p, _ in cases]))

    specs = {s.name: (s.d, s.num_classes, s.train_size) for s in builtin_specs()}
    expected = {"ISOLET": (617, 26, 6238), "UCIHAR": (561, 12, 6231),
                "FACE": (608, 2, 522441), "PAMAP": (75, 5, 611142),
                "PECAN": (312, 3, 22290), "DD": (285, 2, 1178),
                "ENZYMES": (33, 6, 600), "PROTEINS": (40, 2, 1113)}
    yield ("workload registry", specs == expected, str(specs))

    for scheme in ("traditional", "record", "graph"):
        if scheme == "graph":
            data = synth_graphs(12, 6, 2, edge_probability=0.4, seed=7)
            model = hdc.generate_model("graph", data.max_vertices, 32, 4, 7)
        else:
            data = synth_classification(10, 2, 8, 3.0, seed=7)
            model = hdc.generate_model(scheme, 10, 32, 4, 7,
                                       feature_range=data.feature_range)
        trained = hdc.train_single_pass(data, model, 4)
        cfg_small = AcceleratorConfig(rows=4, cols=4, units=1, f_ghz=5.0)
        run = golden_tile_run(model, data, cfg_small, "train")
        ok = np.array_equal(run.chvs, trained.chvs)
        yield (f"golden equivalence ({scheme})", ok, "CHV mismatch")

    report = ppa_report(iso, cfg, device, "train")
    ok = (abs(report.edp_js - report.energy_j * report.latency_s) <= 1e-12 *
          abs(report.edp_js))
    yield ("report identities", ok, f"edp={report.edp_js}")


def cmd_validate(args) -> int:
    try:
        device = _device(args)
    except ParameterError as exc:
        print(f"FAIL device parameters: {exc}")
        return EXIT_INTERNAL
    failures = 0
    for name, ok, detail in _validate_checks(device):
        if ok:
            print(f"PASS {name}")
        else:
            failures += 1
            print(f"FAIL {name}: {detail}")
    if failures:
        print(f"{failures} check(s) failed")
        return EXIT_INTERNAL
    print("all checks passed")
    return EXIT_OK


def _add_common(parser):
    parser.add_argument("--device-params", default=None,
                        help="JSON device-parameters file (default: built-in)")
    parser.add_argument("--calibrate", action="store_true",
                        help="calibrate free energy constants before modeling")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default="out", help="output directory")
    parser.add_argument("--bits", type=int, default=4)
    parser.add_argument("--dim", type=int, default=4096)


def _add_config_flags(parser):
    parser.add_argument("--rows", type=int, default=128)
    parser.add_argument("--cols", type=int, default=76)
    parser.add_argument("--units", type=int, default=4)
    parser.add_argument("--freq-ghz", type=float, default=5.0)
    parser.add_argument("--pds-per-dac", type=int, default=1)


def _add_grid_flags(parser):
    parser.add_argument("--r-values", default=None)
    parser.add_argument("--c-values", default=None)
    parser.add_argument("--u-values", default=None)
    parser.add_argument("--f-values", default=None)
    parser.add_argument("--pds-values", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="photohdc",
        description="HDC accelerator functional simulation and PPA exploration")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="single-pass training on a dataset")
    p.add_argument("--dataset", required=True,
                   help="CSV/edge-list path, or synth:d=16,k=3,n=30,sep=6")
    p.add_argument("--scheme", default="traditional",
                   choices=["traditional", "record", "graph"])
    p.add_argument("--levels", type=int, default=32)
    p.add_argument("--csv-header", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("ppa", help="latency/power/area report for one point")
    p.add_argument("--dataset", required=True, help="built-in workload name")
    p.add_argument("--scheme", default="traditional",
                   choices=["traditional", "record", "graph"])
    p.add_argument("--mode", default="train", choices=["train", "infer"])
    p.add_argument("--queries", type=int, default=1_000_000)
    _add_config_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_ppa)

    p = sub.add_parser("dse", help="exhaustive search under budgets")
    p.add_argument("--datasets", required=True, help="comma-separated names")
    p.add_argument("--scheme", default="traditional",
                   choices=["traditional", "record", "graph"])
    p.add_argument("--mode", default="train", choices=["train", "infer"])
    p.add_argument("--objective", default="edap", choices=["edp", "edap"])
    p.add_argument("--power-budget-w", type=float, default=20.0)
    p.add_argument("--area-budget-mm2", type=float, default=500.0)
    p.add_argument("--queries", type=int, default=1_000_000)
    _add_grid_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_dse)

    p = sub.add_parser("sweep", help="budget sweep of the best objective")
    p.add_argument("--datasets", required=True)
    p.add_argument("--scheme", default="traditional",
                   choices=["traditional", "record", "graph"])
    p.add_argument("--mode", default="train", choices=["train", "infer"])
    p.add_argument("--axis", required=True, choices=["power", "area"])
    p.add_argument("--values", required=True, help="budget values, ascending")
    p.add_argument("--objective", default="edp", choices=["edp", "edap"])
    p.add_argument("--power-budget-w", type=float, default=20.0)
    p.add_argument("--area-budget-mm2", type=float, default=500.0)
    p.add_argument("--queries", type=int, default=1_000_000)
    _add_grid_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("validate", help="run the self-validation suite")
    _add_common(p)
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DataFormatError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # internal failure contract
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
