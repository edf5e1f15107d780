"""Exception types shared across the package."""


class LatticeError(Exception):
    """Base class for errors raised by lattice_eqtri."""


class DegenerateTriangleError(LatticeError, ValueError):
    """Two or more vertices coincide."""


class NonEquilateralError(LatticeError, ValueError):
    """The three squared side lengths are not all equal."""


class NoValidBasisError(LatticeError):
    """No (r, s) pair gives an integral triangle basis for a plane, under any axis order."""

    def __init__(self, plane):
        self.plane = plane
        super().__init__(f"no integral triangle basis for plane {tuple(plane)}")


class InvariantError(LatticeError, AssertionError):
    """An internal consistency check failed."""


class OracleLimitError(LatticeError, ValueError):
    """Brute-force enumeration requested above the configured limit."""
