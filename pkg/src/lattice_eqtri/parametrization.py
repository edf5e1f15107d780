"""Integer bases for the equilateral triangles lying in one plane class.

For a plane solution (a, b, c, d) and a pair (r, s) with s^2 + 3r^2 = 2q,
q = a^2 + b^2, twelve rational coefficients map (m, n) to the two
non-origin vertices P, Q of an equilateral triangle in the plane
a x + b y + c z = 0 with squared side 2 d^2 (m^2 - mn + n^2). A basis is
usable only when all twelve coefficients are integers.
"""

from __future__ import annotations

from itertools import permutations
from typing import NamedTuple

from .diophantine import PlaneSolution, RsPair, loeschian_reps, solve_rs
from .errors import NoValidBasisError
from .symmetry import LatticeTriangle, Point, canonicalize, shape_key

IDENTITY_AXES = (0, 1, 2)


class TriangleBasis(NamedTuple):
    """Coefficients generating P = (u, v, w) and Q = (x, y, z) from (m, n).

    ``axes`` records which permutation of the plane normal the coefficients
    were solved for; generated points are permuted back so they always lie
    in the plane of ``plane``.
    """

    plane: PlaneSolution
    rs: RsPair
    q: int
    m_u: int
    n_u: int
    m_v: int
    n_v: int
    m_w: int
    n_w: int
    m_x: int
    n_x: int
    m_y: int
    n_y: int
    m_z: int
    n_z: int
    axes: tuple[int, int, int] = IDENTITY_AXES


def _exact(num: int, den: int) -> int | None:
    quo, rem = divmod(num, den)
    return None if rem else quo


def basis_coefficients(a: int, b: int, c: int, d: int, r: int, s: int) -> tuple[int, ...] | None:
    """The twelve coefficients (m_u, n_u, ..., m_z, n_z), or None if any is fractional."""
    q = a * a + b * b
    raw = (
        (-(r * a * c + d * b * s), q),                              # m_u
        (-(d * b * (s - 3 * r) + a * c * (r + s)), 2 * q),          # n_u
        (d * a * s - r * b * c, q),                                 # m_v
        (d * a * (s - 3 * r) - b * c * (r + s), 2 * q),             # n_v
        (r, 1),                                                     # m_w
        (r + s, 2),                                                 # n_w
        (-(d * b * (3 * r + s) + a * c * (r - s)), 2 * q),          # m_x
        (-(r * a * c + d * b * s), q),                              # n_x
        (d * a * (3 * r + s) - b * c * (r - s), 2 * q),             # m_y
        (d * a * s - b * c * r, q),                                 # n_y
        (r - s, 2),                                                 # m_z
        (r, 1),                                                     # n_z
    )
    out = []
    for num, den in raw:
        value = _exact(num, den)
        if value is None:
            return None
        out.append(value)
    return tuple(out)


def find_basis(plane: PlaneSolution) -> TriangleBasis:
    """First (r, s) in sorted order giving an integral basis.

    If the sorted normal admits none, each reordering of (a, b, c) is tried
    and the generated coordinates are permuted back.
    """
    for axes in permutations(range(3)):
        normal = tuple(plane.normal[i] for i in axes)
        a, b, c = normal
        q = a * a + b * b
        for rs in solve_rs(q):
            coeffs = basis_coefficients(a, b, c, plane.d, rs.r, rs.s)
            if coeffs is not None:
                return TriangleBasis(plane, rs, q, *coeffs, axes=axes)
    raise NoValidBasisError(plane)


def triangle_from_basis(basis: TriangleBasis, m: int, n: int) -> tuple[Point, Point, Point]:
    """The raw triangle (origin, P, Q) for parameters (m, n) != (0, 0)."""
    if m == 0 and n == 0:
        raise ValueError("(m, n) must not be (0, 0)")
    B = basis
    P = (B.m_u * m - B.n_u * n, B.m_v * m - B.n_v * n, B.m_w * m - B.n_w * n)
    Q = (B.m_x * m - B.n_x * n, B.m_y * m - B.n_y * n, B.m_z * m - B.n_z * n)
    if B.axes != IDENTITY_AXES:
        P, Q = _unpermute(P, B.axes), _unpermute(Q, B.axes)
    return (0, 0, 0), P, Q


def _unpermute(p: Point, axes: tuple[int, int, int]) -> Point:
    out = [0, 0, 0]
    for k, i in enumerate(axes):
        out[i] = p[k]
    return (out[0], out[1], out[2])


def candidate_triangles(t: int, plane: PlaneSolution, bound: int,
                        basis: TriangleBasis | None = None) -> list[LatticeTriangle]:
    """Canonical triangles of squared side 2t in the plane class that fit in {0..bound}^3.

    Sorted and deduplicated.
    """
    d2 = plane.d * plane.d
    if t % d2:
        raise ValueError(f"d^2 = {d2} does not divide t = {t}")
    if basis is None:
        basis = find_basis(plane)
    found = set()
    for m, n in loeschian_reps(t // d2):
        T = canonicalize(triangle_from_basis(basis, m, n))
        if T.size <= bound:
            found.add(T)
    return sorted(found)


def minimal_triangles(t: int, plane: PlaneSolution, bound: int,
                      basis: TriangleBasis | None = None) -> list[LatticeTriangle]:
    """One representative per orbit among the in-bound candidates, sorted.

    Orbit membership is tested by ``shape_key``. An anchored triangle lies in
    O(T) exactly when it is a symmetry image of T, because every member of
    O(T) has the same bounding size.
    """
    seen = set()
    reps = []
    for T in candidate_triangles(t, plane, bound, basis):
        key = shape_key(T)
        if key not in seen:
            seen.add(key)
            reps.append(T)
    return reps
