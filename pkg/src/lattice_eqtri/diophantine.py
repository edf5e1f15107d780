"""Exact integer solvers for the representation problems behind the count.

Everything here works on plain Python ints, so intermediate products never
overflow. Scans are bounded by ``math.isqrt`` and solve the remaining
variable directly, which keeps every solver at O(sqrt N) per call.
"""

from __future__ import annotations

from math import gcd, isqrt
from typing import NamedTuple


class PlaneSolution(NamedTuple):
    """Primitive sorted solution of a^2 + b^2 + c^2 = 3 d^2."""

    a: int
    b: int
    c: int
    d: int

    @property
    def normal(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


class RsPair(NamedTuple):
    """Solution of s^2 + 3 r^2 = 2 q."""

    r: int
    s: int


def isqrt_exact(n: int) -> int | None:
    """The integer square root of n if n is a perfect square, else None."""
    if n < 0:
        return None
    root = isqrt(n)
    return root if root * root == n else None


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division, as ``{prime: exponent}``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    p = 5
    step = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_loeschian(t: int) -> bool:
    """True iff ``t = m^2 - mn + n^2`` for some integers m, n.

    Decided from the factorization: 2 and every prime congruent to 5 mod 6
    must occur to an even power.
    """
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    for p, e in factorize(t).items():
        if e % 2 and (p == 2 or p % 6 == 5):
            return False
    return True


def admissible_side_classes(n: int) -> list[int]:
    """All Loeschian t in [1, n^2], ascending.

    A triangle with vertices in {0..n}^3 has squared side 2t, and its side
    is at most n*sqrt(2), so t <= n^2.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return [t for t in range(1, n * n + 1) if is_loeschian(t)]


def odd_square_divisors(t: int, *, loeschian_quotient: bool = False) -> list[int]:
    """Odd d with d^2 dividing t, ascending.

    With ``loeschian_quotient=True`` only those d whose cofactor t/d^2 is
    Loeschian are kept. The filter only prunes divisors that can never
    produce a triangle, so counts do not depend on it.
    """
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    out = []
    for d in range(1, isqrt(t) + 1, 2):
        if t % (d * d) == 0:
            if loeschian_quotient and not is_loeschian(t // (d * d)):
                continue
            out.append(d)
    return out


def two_square_reps(N: int) -> list[tuple[int, int]]:
    """All (x, y) with 0 <= x <= y and x^2 + y^2 = N, sorted by x."""
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    out = []
    x = 0
    while 2 * x * x <= N:
        rest = N - x * x
        y = isqrt(rest)
        if y * y == rest:
            out.append((x, y))
        x += 1
    return out


def solve_plane_equation(d: int) -> list[PlaneSolution]:
    """Primitive solutions 0 < a <= b <= c of a^2 + b^2 + c^2 = 3 d^2.

    Sorted lexicographically by (a, b, c).
    """
    if d < 1 or d % 2 == 0:
        raise ValueError(f"d must be a positive odd integer, got {d}")
    target = 3 * d * d
    found = set()
    # The smallest of three squares summing to 3d^2 is at most d^2.
    for a in range(1, d + 1):
        for x, y in two_square_reps(target - a * a):
            if x >= a and gcd(gcd(a, x), y) == 1:
                found.add(PlaneSolution(a, x, y, d))
    return sorted(found)


def solve_rs(q: int) -> list[RsPair]:
    """All integer (r, s), both signs, with s^2 + 3 r^2 = 2q, sorted by (r, s)."""
    if q < 1:
        raise ValueError(f"q must be positive, got {q}")
    target = 2 * q
    R = isqrt(target // 3)
    out = []
    for r in range(-R, R + 1):
        rest = target - 3 * r * r
        s = isqrt(rest)
        if s * s == rest:
            if s:
                out.append(RsPair(r, -s))
            out.append(RsPair(r, s))
    return out


def loeschian_reps(z: int) -> list[tuple[int, int]]:
    """All integer (m, n) with m^2 - mn + n^2 = z, sorted.

    Since 4z = (2n - m)^2 + 3m^2, |m| is at most sqrt(4z/3) and n follows
    from a square root.
    """
    if z < 1:
        raise ValueError(f"z must be positive, got {z}")
    M = isqrt(4 * z // 3)
    out = []
    for m in range(-M, M + 1):
        disc = 4 * z - 3 * m * m
        root = isqrt(disc)
        if root * root != disc:
            continue
        for k in {root, -root}:
            if (m + k) % 2 == 0:
                out.append((m, (m + k) // 2))
    return sorted(out)


def is_sum_of_three_squares(N: int) -> bool:
    """True iff N is not of the form 4^k (8l + 7)."""
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    if N == 0:
        return True
    while N % 4 == 0:
        N //= 4
    return N % 8 != 7


def plane_solution_from_params(x1: int, x2: int, x3: int) -> tuple[int, int, int, int]:
    """Three-parameter family of (not necessarily primitive) plane solutions.

    Returns (a, b, c, d) with a^2 + b^2 + c^2 = 3 d^2 for any nonzero input.
    """
    if x1 == x2 == x3 == 0:
        raise ValueError("parameters must not all be zero")
    a = -x1 * x1 + x2 * x2 + x3 * x3 - 2 * x1 * x2 - 2 * x1 * x3
    b = x1 * x1 - x2 * x2 + x3 * x3 - 2 * x2 * x1 - 2 * x2 * x3
    c = x1 * x1 + x2 * x2 - x3 * x3 - 2 * x3 * x1 - 2 * x3 * x2
    d = x1 * x1 + x2 * x2 + x3 * x3
    return a, b, c, d


def primitive_plane(a: int, b: int, c: int, d: int) -> PlaneSolution:
    """Normalize any solution to its primitive sorted positive form."""
    g = gcd(gcd(a, b), gcd(c, d))
    a, b, c = sorted((abs(a) // g, abs(b) // g, abs(c) // g))
    return PlaneSolution(a, b, c, abs(d) // g)
