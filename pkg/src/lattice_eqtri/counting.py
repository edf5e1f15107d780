"""ET(n): the number of equilateral triangles with vertices in {0..n}^3.

Every triangle belongs to exactly one class: a side class t (squared side
2t), a primitive plane normal (a, b, c) with parameter d, and an orbit of a
minimal triangle under cube symmetries and translations. Each class
contributes a cubic polynomial in n determined by its orbit statistics.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .diophantine import PlaneSolution, admissible_side_classes, odd_square_divisors, solve_plane_equation
from .errors import InvariantError
from .parametrization import find_basis, minimal_triangles
from .symmetry import LatticeTriangle, OrbitStats, orbit_stats

log = logging.getLogger(__name__)

U64_MAX = 2**64 - 1
THREADS_ENV = "LATTICE_EQTRI_THREADS"


class ClassContribution(NamedTuple):
    t_side: int
    plane: PlaneSolution
    representative: LatticeTriangle
    stats: OrbitStats
    count: int

    def sort_key(self):
        p = self.plane
        return (self.t_side, p.d, p.a, p.b, p.c, self.representative)

    def at(self, n: int) -> "ClassContribution":
        """The same class counted in {0..n}^3."""
        return self._replace(count=count_for_class(self.stats, n))


@dataclass
class CountReport:
    n: int
    total: int
    contributions: list[ClassContribution] = field(default_factory=list)


def count_for_class(stats: OrbitStats, n: int) -> int:
    """Triangles in {0..n}^3 generated by one orbit with the given statistics.

    Inclusion-exclusion over the translates of O(T) by the points of
    {0..n-t}^3: adjacent translates overlap in beta triangles per grid
    edge and gamma per grid face.
    """
    t, alpha, beta, gamma = stats
    if n < t:
        raise ValueError(f"n = {n} is smaller than the bounding size t = {t}")
    k = n - t
    value = (k + 1) ** 3 * alpha - 3 * (k + 1) ** 2 * k * beta + 3 * (k + 1) * k * k * gamma
    if value < 0:
        raise InvariantError(f"negative class count {value} for {stats} at n = {n}")
    return value


def resolve_workers(workers: int | None) -> int:
    """Worker count from the argument, else the environment; 0 means all CPUs."""
    if workers is None:
        workers = int(os.environ.get(THREADS_ENV, "1") or 1)
    if workers < 0:
        raise ValueError(f"worker count must be nonnegative, got {workers}")
    return workers or os.cpu_count() or 1


def work_items(n: int) -> list[tuple[int, PlaneSolution]]:
    """All (t, plane) pairs that can host a triangle inside {0..n}^3."""
    items = []
    planes: dict[int, list[PlaneSolution]] = {}
    for t in admissible_side_classes(n):
        # A plane with parameter d carries sides of at least d*sqrt(2).
        for d in odd_square_divisors(t, loeschian_quotient=True):
            if d > n:
                continue
            if d not in planes:
                planes[d] = solve_plane_equation(d)
            items.extend((t, plane) for plane in planes[d])
    return items


def _classes_for_plane(plane: PlaneSolution, ts: list[int], n: int) -> list[ClassContribution]:
    basis = find_basis(plane)
    out = []
    for t in ts:
        for rep in minimal_triangles(t, plane, n, basis):
            stats = orbit_stats(rep)
            out.append(ClassContribution(t, plane, rep, stats, count_for_class(stats, n)))
    return out


def _run_chunk(args) -> list[ClassContribution]:
    plane, ts, n = args
    return _classes_for_plane(plane, ts, n)


def enumerate_classes(n: int, workers: int | None = 1) -> list[ClassContribution]:
    """Every class with a representative inside {0..n}^3, with its count at n.

    Work is grouped by plane so each basis is solved once. Output is sorted
    by (t, d, a, b, c, representative) regardless of scheduling.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    by_plane: dict[PlaneSolution, list[int]] = {}
    for t, plane in work_items(n):
        by_plane.setdefault(plane, []).append(t)
    chunks = [(plane, ts, n) for plane, ts in sorted(by_plane.items())]
    workers = resolve_workers(workers)
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_chunk, chunks, chunksize=max(1, len(chunks) // (4 * workers))))
    else:
        results = [_run_chunk(c) for c in chunks]
    out = [c for chunk in results for c in chunk]
    out.sort(key=ClassContribution.sort_key)
    return out


def _checked_total(counts: Iterable[int]) -> int:
    total = sum(counts)
    if total > U64_MAX:
        raise OverflowError(f"total {total} exceeds the unsigned 64-bit range")
    return total


def et(n: int, workers: int | None = 1) -> CountReport:
    contributions = enumerate_classes(n, workers)
    return CountReport(n, _checked_total(c.count for c in contributions), contributions)


def reports_from_catalog(catalog: list[ClassContribution], n: int) -> CountReport:
    """Restrict a class catalog built for some N >= n to {0..n}^3.

    A class lies inside {0..n}^3 iff its bounding size is at most n, and the
    representatives chosen for it do not depend on the bound, so this equals
    ``et(n)``.
    """
    contributions = [c.at(n) for c in catalog if c.stats.t <= n]
    return CountReport(n, _checked_total(c.count for c in contributions), contributions)


def et_table(lo: int, hi: int, workers: int | None = 1, progress: bool = False) -> list[tuple[int, int]]:
    """[(n, ET(n)) for lo <= n <= hi] from a single class enumeration at hi."""
    if not 1 <= lo <= hi:
        raise ValueError(f"need 1 <= from <= to, got {lo}..{hi}")
    catalog = enumerate_classes(hi, workers)
    if progress:
        log.info("enumerated %d classes up to n = %d", len(catalog), hi)
    return [(n, reports_from_catalog(catalog, n).total) for n in range(lo, hi + 1)]
