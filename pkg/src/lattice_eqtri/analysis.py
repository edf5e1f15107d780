"""Growth diagnostics for ET(n).

ET(n) is a sum of cubic polynomials, one per class, each switched on at the
class's bounding size t. Grouping the classes by t gives a row of four
integers per size (the "increment" added at that size). The ratio
ln ET(n) / ln(n + 1) tracks the apparent growth exponent.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

from .counting import ClassContribution, enumerate_classes


class IncrementRow(NamedTuple):
    """Polynomial added at size n: u k^3 + v k^2 + w k + s, with k = n' - n."""

    n: int
    u: int
    v: int
    w: int
    s: int

    def value_at(self, n_prime: int) -> int:
        k = n_prime - self.n
        return self.u * k**3 + self.v * k**2 + self.w * k + self.s


class RatioRow(NamedTuple):
    n: int
    a_n: float


class NonnegativityReport(NamedTuple):
    rows: list[IncrementRow]
    violations: list[IncrementRow]

    @property
    def ok(self) -> bool:
        return not self.violations


def increments(n_max: int, catalog: Sequence[ClassContribution] | None = None) -> list[IncrementRow]:
    """One row per size 1..n_max, summed over classes with bounding size exactly n.

    Expanding the class count in k = n' - t, the coefficient of k^3 is
    alpha - 3 beta + 3 gamma, of k^2 is 3 alpha - 6 beta + 3 gamma, of k is
    3 alpha - 3 beta, and the constant is alpha.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    if catalog is None:
        catalog = enumerate_classes(n_max)
    sums = {n: [0, 0, 0, 0] for n in range(1, n_max + 1)}
    for c in catalog:
        t, alpha, beta, gamma = c.stats
        if t > n_max:
            continue
        row = sums[t]
        row[0] += alpha - 3 * beta + 3 * gamma
        row[1] += 3 * alpha - 6 * beta + 3 * gamma
        row[2] += 3 * alpha - 3 * beta
        row[3] += alpha
    return [IncrementRow(n, *sums[n]) for n in range(1, n_max + 1)]


def reconstruct(rows: Sequence[IncrementRow], n: int) -> int:
    """ET(n) rebuilt from the increment rows of sizes up to n."""
    return sum(row.value_at(n) for row in rows if row.n <= n)


def ratios(values: Sequence[tuple[int, int]]) -> list[RatioRow]:
    """(n, ln ET(n) / ln(n + 1)) for each (n, ET(n)) pair."""
    return [RatioRow(n, math.log(total) / math.log(n + 1)) for n, total in values]


def check_conjecture_nonnegativity(n_max: int, catalog: Sequence[ClassContribution] | None = None
                                   ) -> NonnegativityReport:
    """Increment rows up to n_max and those with any negative entry."""
    rows = increments(n_max, catalog)
    return NonnegativityReport(rows, [r for r in rows if min(r.u, r.v, r.w, r.s) < 0])
