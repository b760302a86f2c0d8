"""Batch kernels for antichain reduction, pairwise expansion, and membership.

Three strategies, picked per call:

* dense: mark candidates in a bounding box over the divisor lattice, then
  count dominated-or-equal points per cell with one cumulative sum per axis;
  a candidate is minimal iff its count is 1.  Used when the box fits in
  memory; this is what makes generator-set intersections cheap.
* bucketed: sort unique candidates by total degree and test each block
  against the accepted antichain with broadcast comparisons.
* pure: plain-Python fallback, exact for arbitrarily large integers.

All strategies return identical results; entries stay exact Python ints at
the boundary.  The int64 paths are gated so no sum can wrap.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

Vector = tuple[int, ...]

# int64 eligibility: entries below this keep every sum we form (pairwise
# products, per-row degrees, box indices) well inside 2^63.
_SAFE_ENTRY = 1 << 48
# dense strategy cap: bounding-box cell count (bool + int32 arrays,
# so peak memory is 5 bytes per cell).
_MAX_BOX = 1 << 25
# broadcast chunk budget, in scalar cells.
_CHUNK_CELLS = 1 << 22


def _max_entry(vectors: Iterable[Sequence[int]]) -> int:
    best = 0
    for v in vectors:
        for e in v:
            if e > best:
                best = e
    return best


def _int64_safe(max_entry: int, n: int) -> bool:
    if max_entry >= _SAFE_ENTRY:
        return False
    # degree sums stay below 2^62
    return max_entry <= (1 << 62) // max(n, 1)


def _box_volume(dims: Sequence[int]) -> int:
    vol = 1
    for d in dims:
        vol *= d
        if vol > _MAX_BOX:
            return vol
    return vol


def _dense_extract_minimal(present: np.ndarray, dims: tuple[int, ...]) -> list[Vector]:
    """present: flat bool array over the box; returns lex-sorted minimal cells."""
    counts = present.astype(np.int32).reshape(dims)
    for axis in range(len(dims)):
        np.cumsum(counts, axis=axis, out=counts)
    minimal = present.reshape(dims) & (counts == 1)
    return [tuple(row) for row in np.argwhere(minimal).tolist()]


def _bucketed_minimal(arr: np.ndarray) -> list[Vector]:
    """arr: unique int64 rows; antichain via degree-ascending broadcast filter."""
    n = arr.shape[1]
    deg = arr.sum(axis=1)
    order = np.argsort(deg, kind="stable")
    arr = arr[order]
    deg = deg[order]
    accepted: list[np.ndarray] = []
    boundaries = np.flatnonzero(np.diff(deg)) + 1
    blocks = np.split(arr, boundaries)
    for block in blocks:
        if accepted:
            acc = accepted[0] if len(accepted) == 1 else np.vstack(accepted)
            accepted = [acc]
            keep = np.ones(len(block), dtype=bool)
            step = max(1, _CHUNK_CELLS // max(1, len(acc) * n))
            for lo in range(0, len(block), step):
                sub = block[lo:lo + step]
                dominated = (sub[:, None, :] >= acc[None, :, :]).all(axis=2).any(axis=1)
                keep[lo:lo + len(sub)] = ~dominated
            block = block[keep]
        if len(block):
            accepted.append(block)
    if not accepted:
        return []
    result = np.vstack(accepted)
    return sorted(tuple(row) for row in result.tolist())


def _pure_minimal(vectors: Iterable[Vector]) -> list[Vector]:
    unique = sorted(set(vectors), key=lambda v: (sum(v), v))
    accepted: list[Vector] = []
    accepted_degs: list[int] = []
    cutoff = 0  # accepted entries with degree < current candidate degree
    for vec in unique:
        d = sum(vec)
        while cutoff < len(accepted_degs) and accepted_degs[cutoff] < d:
            cutoff += 1
        if any(all(x <= y for x, y in zip(accepted[i], vec)) for i in range(cutoff)):
            continue
        accepted.append(vec)
        accepted_degs.append(d)
    return sorted(accepted)


def minimal_vectors(vectors: Iterable[Sequence[int]], n: int) -> list[Vector]:
    """Deduplicated divisibility-minimal elements, in ascending lex order."""
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return []
    if len(vecs) == 1:
        return vecs
    top = _max_entry(vecs)
    if not _int64_safe(top, n):
        return _pure_minimal(vecs)
    dims = tuple(max(v[i] for v in vecs) + 1 for i in range(n))
    if _box_volume(dims) <= _MAX_BOX:
        present = np.zeros(_box_volume(dims), dtype=bool)
        arr = np.asarray(vecs, dtype=np.int64)
        present[np.ravel_multi_index(arr.T, dims)] = True
        return _dense_extract_minimal(present, dims)
    arr = np.unique(np.asarray(vecs, dtype=np.int64), axis=0)
    return _bucketed_minimal(arr)


def _pure_expand_minimal(a: list[Vector], b: list[Vector], product: bool) -> list[Vector]:
    if product:
        cand = {tuple(x + y for x, y in zip(g, h)) for g in a for h in b}
    else:
        cand = {tuple(max(x, y) for x, y in zip(g, h)) for g in a for h in b}
    return _pure_minimal(cand)


def expand_minimal(a: Sequence[Vector], b: Sequence[Vector], n: int, *, product: bool) -> list[Vector]:
    """Minimal elements of {a_i * b_j} (product=True) or {lcm(a_i, b_j)}.

    Realizes ideal product and ideal intersection on generator sets.
    """
    if not a or not b:
        return []
    top_a = _max_entry(a)
    top_b = _max_entry(b)
    top = top_a + top_b if product else max(top_a, top_b)
    if not _int64_safe(top, n):
        return _pure_expand_minimal(list(a), list(b), product)

    arr_a = np.asarray(a, dtype=np.int64)
    arr_b = np.asarray(b, dtype=np.int64)
    op = np.add if product else np.maximum
    if product:
        dims = tuple(int(arr_a[:, i].max() + arr_b[:, i].max()) + 1 for i in range(n))
    else:
        dims = tuple(int(max(arr_a[:, i].max(), arr_b[:, i].max())) + 1 for i in range(n))
    step = max(1, _CHUNK_CELLS // max(1, len(arr_b) * n))

    if _box_volume(dims) <= _MAX_BOX:
        present = np.zeros(_box_volume(dims), dtype=bool)
        for lo in range(0, len(arr_a), step):
            block = op(arr_a[lo:lo + step, None, :], arr_b[None, :, :]).reshape(-1, n)
            present[np.ravel_multi_index(block.T, dims)] = True
        return _dense_extract_minimal(present, dims)

    pieces = []
    for lo in range(0, len(arr_a), step):
        block = op(arr_a[lo:lo + step, None, :], arr_b[None, :, :]).reshape(-1, n)
        pieces.append(np.unique(block, axis=0))
    merged = np.unique(np.vstack(pieces), axis=0)
    return _bucketed_minimal(merged)


def any_divides_batch(gens: Sequence[Vector], queries: Sequence[Vector], n: int) -> list[bool]:
    """For each query vector, whether some generator divides it."""
    if not queries:
        return []
    if not gens:
        return [False] * len(queries)
    top = max(_max_entry(gens), _max_entry(queries))
    if not _int64_safe(top, n):
        return [any(all(x <= y for x, y in zip(g, q)) for g in gens) for q in queries]
    arr_g = np.asarray(gens, dtype=np.int64)
    arr_q = np.asarray(queries, dtype=np.int64)
    out = np.zeros(len(queries), dtype=bool)
    step = max(1, _CHUNK_CELLS // max(1, len(arr_g) * n))
    for lo in range(0, len(arr_q), step):
        sub = arr_q[lo:lo + step]
        out[lo:lo + len(sub)] = (sub[:, None, :] >= arr_g[None, :, :]).all(axis=2).any(axis=1)
    return out.tolist()
