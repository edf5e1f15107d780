"""Brute-force counts of equilateral triangles in {0..n}^3.

Nothing here touches the classification pipeline. ``brute_force_et`` walks
point triples through per-point distance buckets. ``vector_pair_et`` counts
by edge vectors and reaches much larger n, which makes it a second,
independent check on the pipeline and on published tables.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .errors import OracleLimitError

DEFAULT_ORACLE_LIMIT = 12


class PointIndex:
    """The (n+1)^3 lattice points in lexicographic order plus their distance matrix."""

    def __init__(self, n: int):
        r = np.arange(n + 1)
        self.points = np.stack(np.meshgrid(r, r, r, indexing="ij"), -1).reshape(-1, 3)
        diff = self.points[:, None, :] - self.points[None, :, :]
        self.dist2 = np.einsum("ijk,ijk->ij", diff, diff).astype(np.int32)

    def __len__(self):
        return len(self.points)


def _check_limit(n: int, limit: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > limit:
        raise OracleLimitError(f"n = {n} exceeds the oracle limit {limit}")


def _triples(index: PointIndex) -> Iterator[tuple[int, int, np.ndarray, np.ndarray]]:
    """Yield (i, dist, js, ks): every equilateral i < j < k grouped by i and side."""
    D = index.dist2
    N = len(index)
    for i in range(N - 2):
        row = D[i, i + 1:]
        order = np.argsort(row, kind="stable")
        dists = row[order]
        cuts = np.flatnonzero(np.diff(dists)) + 1
        for group, start in zip(np.split(order + i + 1, cuts), np.concatenate(([0], cuts))):
            if len(group) < 2:
                continue
            dist = dists[start]
            sub = np.triu(D[np.ix_(group, group)] == dist, 1)
            if sub.any():
                a, b = np.nonzero(sub)
                yield i, int(dist), group[a], group[b]


def brute_force_et(n: int, limit: int = DEFAULT_ORACLE_LIMIT) -> int:
    """Number of unordered equilateral point triples in {0..n}^3."""
    _check_limit(n, limit)
    return sum(len(js) for _, _, js, _ in _triples(PointIndex(n)))


def brute_force_triangles(n: int, limit: int = DEFAULT_ORACLE_LIMIT) -> set[tuple[tuple[int, ...], ...]]:
    """All equilateral triangles in {0..n}^3 as sorted vertex triples."""
    _check_limit(n, limit)
    index = PointIndex(n)
    pts = [tuple(int(x) for x in p) for p in index.points]
    out = set()
    for i, _, js, ks in _triples(index):
        for j, k in zip(js.tolist(), ks.tolist()):
            out.add((pts[i], pts[j], pts[k]))
    return out


def vector_pair_et(n: int) -> int:
    """ET(n) from edge vectors.

    Every triangle placed with one vertex at the origin is a pair (u, v) of
    lattice vectors with |u|^2 = |v|^2 = 2 u.v. A translation class with
    per-axis extents e fits in {0..n}^3 in prod(n + 1 - e_i) ways, and each
    class appears six times as an ordered pair (3 base vertices, 2 orders).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    r = np.arange(-n, n + 1)
    V = np.stack(np.meshgrid(r, r, r, indexing="ij"), -1).reshape(-1, 3).astype(np.int64)
    norms = (V * V).sum(1)
    keep = (norms > 0) & (norms % 2 == 0)
    V, norms = V[keep], norms[keep]
    order = np.argsort(norms, kind="stable")
    V, norms = V[order], norms[order]
    total = 0
    for G in np.split(V, np.flatnonzero(np.diff(norms)) + 1):
        half = int((G[0] * G[0]).sum()) // 2
        i, j = np.nonzero(G @ G.T == half)
        U, W = G[i], G[j]
        zero = np.zeros_like(U)
        ext = np.maximum(np.maximum(U, W), zero) - np.minimum(np.minimum(U, W), zero)
        total += int(np.clip(n + 1 - ext, 0, None).prod(1).sum())
    if total % 6:
        raise ArithmeticError(f"ordered pair count {total} is not divisible by 6")
    return total // 6
