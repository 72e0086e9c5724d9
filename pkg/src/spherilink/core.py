"""Foundational types: sector angles, fold angles, and projective fold tangents.

Fold angles live in R/2pi with -pi identified with pi; their half-angle
tangents live on the one-point compactification R u {inf}.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import OutOfRange, QuadrilateralInequality

ANGLE_TOL = 1e-12  # absolute tolerance for sector-angle validation

PI = math.pi


def wrap_angle(rho: float) -> float:
    """Reduce an angle to the canonical representative in (-pi, pi]."""
    r = math.remainder(rho, 2.0 * PI)
    if r <= -PI:  # remainder may return exactly -pi; identify with +pi
        r = PI
    return r


def signed_sqrt(a: float) -> complex:
    """Square root that is nonnegative real for a >= 0 and i*sqrt(-a) for a < 0."""
    if a >= 0.0:
        return complex(math.sqrt(a), 0.0)
    return complex(0.0, math.sqrt(-a))


@dataclass(frozen=True, slots=True)
class ProjectiveReal:
    """Element of R u {inf}: a finite real or the single point at infinity."""

    value: float
    infinite: bool = False

    @staticmethod
    def finite(v: float) -> "ProjectiveReal":
        return ProjectiveReal(float(v), False)

    @staticmethod
    def infinity() -> "ProjectiveReal":
        return ProjectiveReal(0.0, True)

    @staticmethod
    def from_float(v: float) -> "ProjectiveReal":
        """Map an IEEE float to a projective real (+-inf both map to infinity)."""
        if math.isinf(v):
            return ProjectiveReal.infinity()
        return ProjectiveReal.finite(v)

    def __neg__(self) -> "ProjectiveReal":
        if self.infinite:
            return self  # one-point compactification: -inf is inf
        return ProjectiveReal.finite(-self.value)

    def reciprocal(self) -> "ProjectiveReal":
        if self.infinite:
            return ProjectiveReal.finite(0.0)
        if self.value == 0.0:
            return ProjectiveReal.infinity()
        return ProjectiveReal.finite(1.0 / self.value)

    def pair(self) -> tuple[float, float]:
        """Unit-norm homogeneous pair (c1, c2) with c = c1/c2; infinity is (1, 0)."""
        if self.infinite:
            return (1.0, 0.0)
        h = math.hypot(self.value, 1.0)
        return (self.value / h, 1.0 / h)

    def rho(self) -> float:
        """Fold angle in (-pi, pi] whose half-angle tangent is this value."""
        if self.infinite:
            return PI
        return 2.0 * math.atan(self.value)

    def as_float(self) -> float:
        """IEEE view: infinity maps to +inf."""
        return math.inf if self.infinite else self.value

    def is_zero(self) -> bool:
        return (not self.infinite) and self.value == 0.0

    def approx_eq(self, other: "ProjectiveReal", tol: float = 1e-9) -> bool:
        """Tolerance comparison in fold-angle space (uniform on the circle)."""
        d = wrap_angle(self.rho() - other.rho())
        return abs(d) <= tol

    def __str__(self) -> str:
        return "inf" if self.infinite else repr(self.value)


INF = ProjectiveReal.infinity()


def tan_half(rho: float) -> ProjectiveReal:
    """Half-angle tangent of a fold angle in (-pi, pi]; rho = pi maps to infinity."""
    if rho == PI:
        return INF
    return ProjectiveReal.finite(math.tan(0.5 * rho))


@dataclass(frozen=True, slots=True)
class FoldAngles:
    """The four fold angles, canonical representatives in (-pi, pi]."""

    rho_x: float
    rho_y: float
    rho_z: float
    rho_w: float

    @staticmethod
    def wrap(rho_x: float, rho_y: float, rho_z: float, rho_w: float) -> "FoldAngles":
        return FoldAngles(wrap_angle(rho_x), wrap_angle(rho_y), wrap_angle(rho_z), wrap_angle(rho_w))

    def tangents(self) -> "FoldTangents":
        return FoldTangents(tan_half(self.rho_x), tan_half(self.rho_y), tan_half(self.rho_z), tan_half(self.rho_w))

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.rho_x, self.rho_y, self.rho_z, self.rho_w)


@dataclass(frozen=True, slots=True)
class FoldTangents:
    """A configuration in half-angle tangent coordinates (x, y, z, w)."""

    x: ProjectiveReal
    y: ProjectiveReal
    z: ProjectiveReal
    w: ProjectiveReal

    @staticmethod
    def from_floats(x: float, y: float, z: float, w: float) -> "FoldTangents":
        return FoldTangents(
            ProjectiveReal.from_float(x),
            ProjectiveReal.from_float(y),
            ProjectiveReal.from_float(z),
            ProjectiveReal.from_float(w),
        )

    def angles(self) -> FoldAngles:
        return FoldAngles(self.x.rho(), self.y.rho(), self.z.rho(), self.w.rho())

    def as_tuple(self) -> tuple[ProjectiveReal, ProjectiveReal, ProjectiveReal, ProjectiveReal]:
        return (self.x, self.y, self.z, self.w)

    def negate(self) -> "FoldTangents":
        return FoldTangents(-self.x, -self.y, -self.z, -self.w)

    def approx_eq(self, other: "FoldTangents", tol: float = 1e-9) -> bool:
        return all(a.approx_eq(b, tol) for a, b in zip(self.as_tuple(), other.as_tuple()))

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z}, {self.w})"


@dataclass(frozen=True, slots=True)
class SectorAngles:
    """Four sector angles of a spherical 4-bar linkage, each in (0, pi).

    Construct through ``validate_sector_angles`` so the quadrilateral
    inequalities are guaranteed to hold.
    """

    alpha: float
    beta: float
    gamma: float
    delta: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    @property
    def sigma(self) -> float:
        return 0.5 * (self.alpha + self.beta + self.gamma + self.delta)

    def permuted(self, order: tuple[int, int, int, int]) -> "SectorAngles":
        t = self.as_tuple()
        return SectorAngles(t[order[0]], t[order[1]], t[order[2]], t[order[3]])


_NAMES = ("alpha", "beta", "gamma", "delta")


def validate_sector_angles(alpha: float, beta: float, gamma: float, delta: float) -> SectorAngles:
    """Check the sector-angle existence conditions and build SectorAngles.

    Raises OutOfRange when an angle leaves (0, pi) and QuadrilateralInequality
    (naming the failing line) when one of the four cyclic inequalities
    a_i < sum(others) < a_i + 2*pi fails.  Boundary cases within ANGLE_TOL are
    rejected: the conditions are strict.
    """
    vals = (float(alpha), float(beta), float(gamma), float(delta))
    for name, v in zip(_NAMES, vals):
        if not math.isfinite(v):
            raise OutOfRange(f"{name} = {v!r} is not finite")
        if v <= ANGLE_TOL or v >= PI - ANGLE_TOL:
            raise OutOfRange(f"{name} = {v!r} is not strictly inside (0, pi)")
    total = sum(vals)
    for i, name in enumerate(_NAMES):
        others = total - vals[i]
        rest = "+".join(n for j, n in enumerate(_NAMES) if j != i)
        if others - vals[i] <= ANGLE_TOL:
            raise QuadrilateralInequality(f"{name} < {rest}")
        if vals[i] + 2.0 * PI - others <= ANGLE_TOL:
            raise QuadrilateralInequality(f"{rest} < {name} + 2*pi")
    return SectorAngles(*vals)


def semi_perimeter(angles: SectorAngles) -> float:
    """Half the sum of the four sector angles; lies in (0, 2*pi)."""
    return angles.sigma


def real_part(v: complex, tol: float = 1e-10) -> float:
    """Extract the real part of a nominally real complex value.

    Raises ComplexResidue when the imaginary part is not negligible relative
    to the real part; a large residue indicates a wrong parametrization line,
    not numerical noise.
    """
    from .errors import ComplexResidue

    if abs(v.imag) > tol * (1.0 + abs(v.real)):
        raise ComplexResidue(f"imaginary residue {v.imag!r} on nominally real value {v!r}")
    return v.real


def complex_cos(t: complex) -> complex:
    return cmath.cos(t)
