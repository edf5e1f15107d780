"""Canonical triangles and their orbits under cube symmetries and translations.

A triangle is stored with sorted vertices, so two triangles are equal exactly
when they are the same point set. The orbit O(T) of a canonical triangle T
with bounding size t is every image of T under the 48 symmetries of the cube
{0..t}^3, translated in every way that keeps it inside that cube.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterable, NamedTuple, Sequence

from .errors import DegenerateTriangleError, NonEquilateralError, InvariantError

Point = tuple[int, int, int]


class LatticeTriangle(NamedTuple):
    """Three lattice points with sorted vertices."""

    p: Point
    q: Point
    r: Point

    @property
    def side2(self) -> int:
        return _dist2(self.p, self.q)

    @property
    def extents(self) -> tuple[int, int, int]:
        return tuple(max(v[i] for v in self) - min(v[i] for v in self) for i in range(3))

    @property
    def size(self) -> int:
        """Largest coordinate; the bounding size t once anchored."""
        return max(max(v) for v in self)

    def shifted(self, v: Sequence[int]) -> "LatticeTriangle":
        return LatticeTriangle(*sorted(_add(p, v) for p in self))


class OrbitStats(NamedTuple):
    """Inputs to the per-class count: bounding size and orbit overlaps."""

    t: int
    alpha: int
    beta: int
    gamma: int


# (axis permutation, reflected axes) for every element of the 48-element group.
SIGNED_PERMUTATIONS: tuple[tuple[tuple[int, int, int], tuple[bool, bool, bool]], ...] = tuple(
    (perm, flips) for perm in permutations(range(3)) for flips in product((False, True), repeat=3)
)


def _dist2(p: Point, q: Point) -> int:
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2 + (p[2] - q[2]) ** 2


def _add(p: Sequence[int], v: Sequence[int]) -> Point:
    return (p[0] + v[0], p[1] + v[1], p[2] + v[2])


def _anchor(points: Iterable[Point]) -> LatticeTriangle:
    pts = list(points)
    lo = [min(p[i] for p in pts) for i in range(3)]
    return LatticeTriangle(*sorted((p[0] - lo[0], p[1] - lo[1], p[2] - lo[2]) for p in pts))


def canonicalize(vertices: Iterable[Sequence[int]]) -> LatticeTriangle:
    """Translate an equilateral triangle so each axis minimum is 0, and sort it."""
    pts = [tuple(int(x) for x in v) for v in vertices]
    if len(pts) != 3 or any(len(p) != 3 for p in pts):
        raise ValueError("expected three points in three dimensions")
    p, q, r = pts
    d_pq, d_qr, d_rp = _dist2(p, q), _dist2(q, r), _dist2(r, p)
    if 0 in (d_pq, d_qr, d_rp):
        raise DegenerateTriangleError(f"coincident vertices in {pts}")
    if not d_pq == d_qr == d_rp:
        raise NonEquilateralError(f"squared sides {d_pq}, {d_qr}, {d_rp} differ")
    return _anchor(pts)


def _apply(T: LatticeTriangle, perm, flips, t: int) -> list[Point]:
    out = []
    for v in T:
        w = [v[perm[0]], v[perm[1]], v[perm[2]]]
        for i in range(3):
            if flips[i]:
                w[i] = t - w[i]
        out.append((w[0], w[1], w[2]))
    return out


def symmetry_images(T: LatticeTriangle) -> set[LatticeTriangle]:
    """Anchored images of T under the 48 symmetries of its bounding cube."""
    t = T.size
    return {_anchor(_apply(T, perm, flips, t)) for perm, flips in SIGNED_PERMUTATIONS}


def shape_key(T: LatticeTriangle) -> LatticeTriangle:
    """Smallest anchored symmetry image; equal keys mean equal orbits."""
    return min(symmetry_images(T))


def _translations(S: LatticeTriangle, t: int):
    e = S.extents
    return product(range(t - e[0] + 1), range(t - e[1] + 1), range(t - e[2] + 1))


def full_orbit(T: LatticeTriangle) -> set[LatticeTriangle]:
    """O(T): every symmetry image of T at every translation inside {0..t}^3."""
    t = T.size
    orbit = set()
    for S in symmetry_images(T):
        for v in _translations(S, t):
            orbit.add(S.shifted(v))
    return orbit


def shift_set(triangles: Iterable[LatticeTriangle], v: Sequence[int]) -> set[LatticeTriangle]:
    return {T.shifted(v) for T in triangles}


def _clamped(x: int) -> int:
    return x if x > 0 else 0


def orbit_stats(T: LatticeTriangle, *, beta_axis: int = 2, gamma_axes: tuple[int, int] = (2, 1),
                check: bool = False) -> OrbitStats:
    """(t, alpha, beta, gamma) for a canonical triangle.

    Counted per distinct anchored image S instead of building O(T). A copy
    S + v lies in O(T) iff 0 <= v_i <= t - ext_i(S), and S + v - e_k lies in
    O(T) iff 1 <= v_k <= t + 1 - ext_k(S) on axis k. Every overlap is then a
    product of per-axis interval lengths. ``orbit_stats_from_sets`` is the
    materialized route. With ``check=True`` the statistics are recomputed
    for every axis choice and must agree.
    """
    t = T.size
    images = symmetry_images(T)
    alpha = beta = gamma = 0
    for S in images:
        room = [t + 1 - e for e in S.extents]
        alpha += room[0] * room[1] * room[2]
        b = list(room)
        b[beta_axis] = _clamped(b[beta_axis] - 1)
        beta += b[0] * b[1] * b[2]
        g = list(room)
        for k in gamma_axes:
            g[k] = _clamped(g[k] - 1)
        gamma += g[0] * g[1] * g[2]
    stats = OrbitStats(t, alpha, beta, gamma)
    if check:
        for axis in range(3):
            for pair in ((0, 1), (0, 2), (1, 2)):
                other = orbit_stats(T, beta_axis=axis, gamma_axes=pair)
                if other != stats:
                    raise InvariantError(f"axis dependence in orbit stats of {T}: {stats} vs {other}")
    return stats


def orbit_stats_from_sets(T: LatticeTriangle, *, beta_shift: Point = (0, 0, 1),
                          gamma_shifts: tuple[Point, Point] = ((0, 0, 1), (0, 1, 0))) -> OrbitStats:
    """Orbit statistics by explicit set intersections of shifted orbits."""
    orbit = full_orbit(T)
    beta = len(orbit & shift_set(orbit, beta_shift))
    gamma = len(shift_set(orbit, gamma_shifts[0]) & shift_set(orbit, gamma_shifts[1]))
    return OrbitStats(T.size, len(orbit), beta, gamma)
