"""Independent scalar-loop transcriptions used as test oracles.

These deliberately avoid numpy vector paths and the package's own helpers
so they stay independent of the implementations they check.
"""

import math


def encode_traditional_oracle(base, x):
    """phi_j = sum_i base[i][j] * x[i], plain Python integers."""
    d = len(x)
    dim = len(base[0])
    out = []
    for j in range(dim):
        acc = 0
        for i in range(d):
            acc += int(base[i][j]) * int(x[i])
        out.append(acc)
    return out


def level_index_oracle(value, lo, hi, m):
    if hi <= lo:
        return 0
    unit = (value - lo) / (hi - lo)
    unit = min(1.0, max(0.0, unit))
    scaled = unit * (m - 1)
    frac = scaled - math.floor(scaled)
    if frac > 0.5 or (frac == 0.5):
        return min(m - 1, math.floor(scaled) + 1)
    return math.floor(scaled)


def encode_record_oracle(base, levels, x, feature_range):
    """H_j = sum_i levels[level(x_i)][j] * base[i][j]."""
    d = len(x)
    dim = len(base[0])
    m = len(levels)
    out = []
    idx = [level_index_oracle(float(x[i]), float(feature_range[i][0]),
                              float(feature_range[i][1]), m)
           for i in range(d)]
    for j in range(dim):
        acc = 0
        for i in range(d):
            acc += int(levels[idx[i]][j]) * int(base[i][j])
        out.append(acc)
    return out


def encode_graph_oracle(base, vertex_count, edges, dim):
    """H_j = (1/2) sum_i base[i][j] * m_i[j], m_i the neighbor sums."""
    mem = [[0] * dim for _ in range(vertex_count)]
    for (u, v) in edges:
        for j in range(dim):
            mem[u][j] += int(base[v][j])
            mem[v][j] += int(base[u][j])
    out = []
    for j in range(dim):
        acc = 0
        for i in range(vertex_count):
            acc += int(base[i][j]) * mem[i][j]
        # round toward zero
        out.append(acc // 2 if acc >= 0 else -((-acc) // 2))
    return out


def bundle_oracle(hvs):
    dim = len(hvs[0])
    out = [0] * dim
    for hv in hvs:
        for j in range(dim):
            out[j] += int(hv[j])
    return out


def cosine_oracle(a, b):
    dot = 0.0
    na = 0.0
    nb = 0.0
    for x, y in zip(a, b):
        dot += float(x) * float(y)
        na += float(x) * float(x)
        nb += float(y) * float(y)
    if na == 0.0 or nb == 0.0:
        return 0.0
    return dot / math.sqrt(na) / math.sqrt(nb)


def classify_oracle(chvs, query):
    best_k, best_s = 0, None
    for k, chv in enumerate(chvs):
        s = cosine_oracle(chv, query)
        if best_s is None or s > best_s:
            best_k, best_s = k, s
    return best_k
