"""Workload registry, file loaders and synthetic generators.

The built-in descriptors mirror the eight evaluation datasets; real files are
user-supplied (licensing), the package ships only descriptors and loaders.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

from .errors import DataFormatError, ParameterError
from .hdc.model import Scheme


@dataclass(frozen=True)
class LabeledDataset:
    """Feature/label pairs with a fixed class count."""

    X: np.ndarray
    labels: np.ndarray
    num_classes: int

    def __post_init__(self):
        X = np.asarray(self.X, dtype=np.float64)
        y = np.asarray(self.labels, dtype=np.int64)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "labels", y)
        if X.ndim != 2:
            raise ParameterError("features must form a 2-D matrix")
        if y.shape != (X.shape[0],):
            raise ParameterError("one label per sample required")
        if y.size and (y.min() < 0 or y.max() >= self.num_classes):
            raise ParameterError("labels must lie in [0, num_classes)")
        X.setflags(write=False)
        y.setflags(write=False)

    @property
    def num_features(self) -> int:
        return self.X.shape[1]

    @property
    def per_class_counts(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.num_classes)

    @property
    def feature_range(self) -> np.ndarray:
        lo = self.X.min(axis=0)
        hi = self.X.max(axis=0)
        return np.stack([lo, hi], axis=1)


@dataclass(frozen=True)
class GraphInstance:
    """Undirected graph with a class label; no self-loops, no duplicates."""

    vertex_count: int
    edges: tuple
    label: int

    def __post_init__(self):
        seen = set()
        canon = []
        for (i, j) in self.edges:
            if i == j:
                raise ParameterError(f"self-loop on vertex {i}")
            if not (0 <= i < self.vertex_count and 0 <= j < self.vertex_count):
                raise ParameterError(
                    f"edge ({i}, {j}) outside vertex range [0, {self.vertex_count})")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ParameterError(f"duplicate edge ({i}, {j})")
            seen.add(key)
            canon.append(key)
        object.__setattr__(self, "edges", tuple(canon))


@dataclass(frozen=True)
class GraphDataset:
    """A list of graph instances sharing one label space."""

    graphs: tuple
    num_classes: int

    def __post_init__(self):
        object.__setattr__(self, "graphs", tuple(self.graphs))
        for g in self.graphs:
            if not (0 <= g.label < self.num_classes):
                raise ParameterError(f"graph label {g.label} out of range")

    @property
    def labels(self) -> np.ndarray:
        return np.array([g.label for g in self.graphs], dtype=np.int64)

    @property
    def max_vertices(self) -> int:
        return max((g.vertex_count for g in self.graphs), default=0)

    @property
    def avg_vertices(self) -> float:
        if not self.graphs:
            return 0.0
        return float(np.mean([g.vertex_count for g in self.graphs]))


@dataclass(frozen=True)
class DatasetDescriptor:
    """Published shape of one evaluation dataset."""

    name: str
    d: int
    num_classes: int
    train_size: int
    schemes: tuple = field(default=(Scheme.TRADITIONAL, Scheme.RECORD))
    description: str = ""


_BUILTINS = (
    DatasetDescriptor("ISOLET", 617, 26, 6238,
                      description="Alphabet recognition from voice"),
    DatasetDescriptor("UCIHAR", 561, 12, 6231,
                      description="Human activity recognition"),
    DatasetDescriptor("FACE", 608, 2, 522441,
                      description="Gender detection from images"),
    DatasetDescriptor("PAMAP", 75, 5, 611142,
                      description="Activity recognition (IMU)"),
    DatasetDescriptor("PECAN", 312, 3, 22290,
                      description="Urban electricity prediction"),
    DatasetDescriptor("DD", 285, 2, 1178, schemes=(Scheme.GRAPH,),
                      description="Classify proteins"),
    DatasetDescriptor("ENZYMES", 33, 6, 600, schemes=(Scheme.GRAPH,),
                      description="Classify enzymes"),
    DatasetDescriptor("PROTEINS", 40, 2, 1113, schemes=(Scheme.GRAPH,),
                      description="Classify proteins"),
)


def builtin_specs():
    """Descriptors for the eight built-in evaluation datasets."""
    return list(_BUILTINS)


def builtin(name: str) -> DatasetDescriptor:
    for descriptor in _BUILTINS:
        if descriptor.name.lower() == name.lower():
            return descriptor
    known = ", ".join(s.name for s in _BUILTINS)
    raise KeyError(f"unknown dataset {name!r}; built-ins are: {known}")


def uniform_class_counts(n_train: int, num_classes: int) -> np.ndarray:
    """Uniform split with the remainder going to the lowest class indices."""
    base, extra = divmod(n_train, num_classes)
    counts = np.full(num_classes, base, dtype=np.int64)
    counts[:extra] += 1
    return counts


def load_csv(path, has_header: bool = False, label_column: int = -1) -> LabeledDataset:
    """Parse a numeric CSV with one integer label column.

    Raises:
        DataFormatError: ragged rows or non-numeric content, with the
            offending line number.
    """
    rows = []
    labels = []
    width = None
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        for lineno, row in enumerate(reader, start=1):
            if not row:
                continue
            if has_header and lineno == 1:
                width = len(row)
                continue
            if width is None:
                width = len(row)
            if len(row) != width:
                raise DataFormatError(
                    f"{path}: line {lineno}: expected {width} columns, got {len(row)}")
            col = label_column if label_column >= 0 else len(row) + label_column
            try:
                label = row[col]
                label_val = int(label)
            except (ValueError, IndexError):
                raise DataFormatError(
                    f"{path}: line {lineno}: label column {label_column} is not "
                    f"an integer") from None
            try:
                feats = [float(v) for c, v in enumerate(row) if c != col]
            except ValueError:
                raise DataFormatError(
                    f"{path}: line {lineno}: non-numeric feature value") from None
            rows.append(feats)
            labels.append(label_val)
    if not rows:
        raise DataFormatError(f"{path}: no data rows")
    y = np.asarray(labels, dtype=np.int64)
    if y.min() < 0:
        raise DataFormatError(f"{path}: negative class label {y.min()}")
    return LabeledDataset(np.asarray(rows), y, int(y.max()) + 1)


def save_csv(dataset: LabeledDataset, path):
    """Write a dataset in the format load_csv reads (label last)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        for x, label in zip(dataset.X, dataset.labels):
            writer.writerow([repr(float(v)) for v in x] + [int(label)])


def load_edge_list(path):
    """Parse graph blocks: a "graph <V> <label>" header then "u v" lines."""
    graphs = []
    vertex_count = None
    label = None
    edges = []

    def flush():
        if vertex_count is not None:
            graphs.append(GraphInstance(vertex_count, tuple(edges), label))

    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "graph":
                flush()
                if len(parts) != 3:
                    raise DataFormatError(
                        f"{path}: line {lineno}: expected 'graph <V> <label>'")
                try:
                    vertex_count, label = int(parts[1]), int(parts[2])
                except ValueError:
                    raise DataFormatError(
                        f"{path}: line {lineno}: non-integer graph header") from None
                edges = []
                continue
            if vertex_count is None:
                raise DataFormatError(
                    f"{path}: line {lineno}: edge before any graph header")
            if len(parts) != 2:
                raise DataFormatError(
                    f"{path}: line {lineno}: expected 'u v'")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise DataFormatError(
                    f"{path}: line {lineno}: non-integer vertex index") from None
            try:
                GraphInstance(vertex_count, ((u, v),), label)
            except ParameterError as exc:
                raise DataFormatError(f"{path}: line {lineno}: {exc}") from None
            if (min(u, v), max(u, v)) in {(min(a, b), max(a, b)) for a, b in edges}:
                raise DataFormatError(
                    f"{path}: line {lineno}: duplicate edge ({u}, {v})")
            edges.append((u, v))
    flush()
    if not graphs:
        raise DataFormatError(f"{path}: no graphs found")
    return graphs


def save_edge_list(graphs, path):
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(f"graph {g.vertex_count} {g.label}\n")
            for (u, v) in g.edges:
                fh.write(f"{u} {v}\n")


def synth_classification(d: int, num_classes: int, n_per_class: int,
                         separation_sigma: float, seed: int = 0) -> LabeledDataset:
    """Gaussian clusters with unit within-class sigma.

    Cluster centers are random directions rescaled so the minimum pairwise
    center distance equals separation_sigma; separation 0 collapses all
    classes onto one distribution.
    """
    if separation_sigma < 0:
        raise ParameterError("separation must be non-negative")
    rng = np.random.default_rng(seed)
    centers = rng.normal(size=(num_classes, d))
    if num_classes > 1 and separation_sigma > 0:
        dists = [np.linalg.norm(centers[i] - centers[j])
                 for i in range(num_classes) for j in range(i + 1, num_classes)]
        centers *= separation_sigma / min(dists)
    else:
        centers[:] = 0.0
    X = np.empty((num_classes * n_per_class, d))
    y = np.empty(num_classes * n_per_class, dtype=np.int64)
    for k in range(num_classes):
        sl = slice(k * n_per_class, (k + 1) * n_per_class)
        X[sl] = centers[k] + rng.normal(size=(n_per_class, d))
        y[sl] = k
    order = rng.permutation(X.shape[0])
    return LabeledDataset(X[order], y[order], num_classes)


def synth_graphs(num_graphs: int, avg_vertices: int, num_classes: int,
                 edge_probability: float = 0.1, seed: int = 0) -> GraphDataset:
    """Random graphs whose class biases the edge density."""
    rng = np.random.default_rng(seed)
    graphs = []
    for _ in range(num_graphs):
        label = int(rng.integers(num_classes))
        v = max(2, int(rng.normal(avg_vertices, max(1.0, avg_vertices * 0.1))))
        p = edge_probability * (1.0 + 0.5 * label / max(1, num_classes - 1))
        edges = []
        for i in range(v):
            for j in range(i + 1, v):
                if rng.random() < p:
                    edges.append((i, j))
        graphs.append(GraphInstance(v, tuple(edges), label))
    return GraphDataset(tuple(graphs), num_classes)


def train_test_split(dataset: LabeledDataset, test_fraction: float = 0.3,
                     seed: int = 0):
    """Seeded shuffle split; the default holds out 30 percent."""
    n = dataset.X.shape[0]
    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    n_test = int(round(n * test_fraction))
    test_idx, train_idx = order[:n_test], order[n_test:]
    train = LabeledDataset(dataset.X[train_idx], dataset.labels[train_idx],
                           dataset.num_classes)
    test = LabeledDataset(dataset.X[test_idx], dataset.labels[test_idx],
                          dataset.num_classes)
    return train, test
