"""Polynomial coefficients of the three fold relations and the 16-type vertex atlas.

The adjacent relation couples x and y, the opposite relation couples x and z,
and the diagonal relation couples the two spherical diagonals u, v.  The type
of a vertex is decided by which of four signed angle sums vanish; coefficient
zero-patterns follow from that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .core import PI, SectorAngles, signed_sqrt
from .errors import NearDegenerate, NotElliptic

CLASSIFY_TOL = 1e-10  # radians, on the defining angle relations
ORTHO_TOL = 1e-10  # on cos(alpha)cos(gamma) - cos(beta)cos(delta)


@dataclass(frozen=True, slots=True)
class FCoeffs:
    """Coefficients of f = f22 x^2 y^2 + f20 x^2 + 2 f11 x y + f02 y^2 + f00."""

    f22: float
    f20: float
    f11: float
    f02: float
    f00: float


@dataclass(frozen=True, slots=True)
class GCoeffs:
    """Coefficients of g = g22 x^2 z^2 + g20 x^2 + g02 z^2 + g00 (g20 > 0 > g02)."""

    g22: float
    g20: float
    g02: float
    g00: float


@dataclass(frozen=True, slots=True)
class HCoeffs:
    """Coefficients of the cubic diagonal relation in (1 - cos u), (1 - cos v)."""

    h11: float
    h10: float
    h01: float
    h00: float


class VertexKind(Enum):
    SQUARE = "Square"
    RHOMBUS = "Rhombus"
    CROSS = "Cross"
    MIURA_I = "MiuraI"
    MIURA_II = "MiuraII"
    ISOGRAM = "Isogram"
    ANTI_ISOGRAM = "AntiIsogram"
    DELTOID_I = "DeltoidI"
    ANTI_DELTOID_I = "AntiDeltoidI"
    DELTOID_II = "DeltoidII"
    ANTI_DELTOID_II = "AntiDeltoidII"
    CONIC_I = "ConicI"
    CONIC_II = "ConicII"
    CONIC_III = "ConicIII"
    CONIC_IV = "ConicIV"
    ELLIPTIC = "Elliptic"


@dataclass(frozen=True, slots=True)
class VertexType:
    kind: VertexKind
    orthodiagonal: bool = False

    @property
    def name(self) -> str:
        return self.kind.value


@dataclass(frozen=True, slots=True)
class Amplitudes:
    """Branch amplitudes; each is positive real or positive imaginary."""

    p_x: complex
    p_y: complex
    p_z: complex
    p_w: complex

    def as_tuple(self) -> tuple[complex, complex, complex, complex]:
        return (self.p_x, self.p_y, self.p_z, self.p_w)


def angle_sums(angles: SectorAngles) -> tuple[float, float, float, float]:
    """The four signed sums whose zeros classify the vertex.

    e1 = a-b+c-d, e2 = a-b-c+d, e3 = a+b-c-d, e4 = a+b+c+d - 2*pi; their
    vanishing is equivalent to f22 = 0, f20 = 0, f02 = 0, f00 = 0 in turn.
    """
    a, b, c, d = angles.as_tuple()
    return (a - b + c - d, a - b - c + d, a + b - c - d, a + b + c + d - 2.0 * PI)


def adjacent_coeffs(angles: SectorAngles) -> FCoeffs:
    """Coefficients of the adjacent-fold relation between x and y."""
    a, b, c, d = angles.as_tuple()
    s = angles.sigma
    return FCoeffs(
        f22=math.sin(s - b) * math.sin(s - b - d),
        f20=math.sin(s - a) * math.sin(s - a - d),
        f11=-math.sin(a) * math.sin(c),
        f02=math.sin(s - c) * math.sin(s - c - d),
        f00=math.sin(s) * math.sin(s - d),
    )


def opposite_coeffs(angles: SectorAngles) -> GCoeffs:
    """Coefficients of the opposite-fold relation between x and z."""
    a, b, c, d = angles.as_tuple()
    s = angles.sigma
    return GCoeffs(
        g22=math.sin(s - a - d) * math.sin(s - b - d),
        g20=math.sin(s - a) * math.sin(s - b),
        g02=-math.sin(s - c) * math.sin(s - d),
        g00=math.sin(s) * math.sin(s - a - b),
    )


def diagonal_coeffs(angles: SectorAngles) -> HCoeffs:
    """Coefficients of the diagonal relation (spherical Cayley-Menger condition)."""
    ca, cb, cc, cd = (math.cos(v) for v in angles.as_tuple())
    return HCoeffs(
        h11=2.0 * (2.0 - ca * cc - cb * cd),
        h10=2.0 * (cb - cc) * (cd - ca),
        h01=2.0 * (ca - cb) * (cc - cd),
        h00=(ca * cc - cb * cd) ** 2 - (ca - cb + cc - cd) ** 2,
    )


def is_orthodiagonal(angles: SectorAngles, tol: float = ORTHO_TOL) -> bool:
    a, b, c, d = angles.as_tuple()
    return abs(math.cos(a) * math.cos(c) - math.cos(b) * math.cos(d)) < tol


# Zero-pattern of (e1, e2, e3, e4) -> vertex kind.  The patterns are mutually
# exclusive; listed from most to least degenerate.
_PATTERNS: dict[frozenset[int], VertexKind] = {
    frozenset({1, 2, 3, 4}): VertexKind.SQUARE,
    frozenset({1, 2, 3}): VertexKind.RHOMBUS,
    frozenset({2, 3, 4}): VertexKind.CROSS,
    frozenset({1, 3, 4}): VertexKind.MIURA_I,
    frozenset({1, 2, 4}): VertexKind.MIURA_II,
    frozenset({2, 3}): VertexKind.ISOGRAM,
    frozenset({1, 4}): VertexKind.ANTI_ISOGRAM,
    frozenset({1, 3}): VertexKind.DELTOID_I,
    frozenset({2, 4}): VertexKind.ANTI_DELTOID_I,
    frozenset({1, 2}): VertexKind.DELTOID_II,
    frozenset({3, 4}): VertexKind.ANTI_DELTOID_II,
    frozenset({1}): VertexKind.CONIC_I,
    frozenset({2}): VertexKind.CONIC_II,
    frozenset({3}): VertexKind.CONIC_III,
    frozenset({4}): VertexKind.CONIC_IV,
    frozenset(): VertexKind.ELLIPTIC,
}


def classify(angles: SectorAngles, tol: float = CLASSIFY_TOL) -> VertexType:
    """Assign the vertex type from the zero-pattern of the four angle sums.

    Classification is total: every valid SectorAngles gets exactly one type.
    Predicates are evaluated on angle relations, not coefficient magnitudes.
    """
    sums = angle_sums(angles)
    zeros = frozenset(i + 1 for i, e in enumerate(sums) if abs(e) < tol)
    kind = _PATTERNS[zeros]
    ortho = kind is VertexKind.ELLIPTIC and is_orthodiagonal(angles)
    return VertexType(kind, ortho)


def modulus_M(angles: SectorAngles) -> float:
    """Parameter M = prod sin(a_i) / prod sin(sigma - a_i), defined off M = 1.

    Computed in log space to stay stable for near-degenerate angles.  Raises
    NotElliptic for degenerate types (there M = 1 exactly).
    """
    vt = classify(angles)
    if vt.kind is not VertexKind.ELLIPTIC:
        raise NotElliptic(f"M is defined only for the elliptic type, got {vt.name}")
    s = angles.sigma
    log_num = sum(math.log(math.sin(v)) for v in angles.as_tuple())
    log_den = sum(math.log(math.sin(s - v)) for v in angles.as_tuple())
    return math.exp(log_num - log_den)


def modulus_k(angles: SectorAngles) -> float:
    """Elliptic modulus: sqrt(1 - 1/M) for M > 1, sqrt(1 - M) for M < 1."""
    m = modulus_M(angles)
    if m > 1.0:
        return math.sqrt(1.0 - 1.0 / m)
    return math.sqrt(1.0 - m)


def require_tractable_elliptic(angles: SectorAngles, tol: float = 1e-10) -> float:
    """Return M, refusing elliptic inputs too close to a degenerate type.

    The branch formulas are ill-conditioned when M ~ 1 or an amplitude ~ 0;
    callers should perturb the angles or accept the degenerate classification.
    """
    m = modulus_M(angles)
    if abs(m - 1.0) < tol:
        raise NearDegenerate(f"M = {m!r} is within {tol} of 1")
    for name, p in zip("xyzw", amplitudes(angles).as_tuple()):
        if abs(p) < tol:
            raise NearDegenerate(f"amplitude p_{name} = {p!r} is below {tol}")
    return m


def amplitudes(angles: SectorAngles) -> Amplitudes:
    """The four amplitudes p = sqrt(sin a_i sin a_j / (sin(s-a_i) sin(s-a_j)) - 1).

    Pairs run cyclically (alpha,beta), (beta,gamma), (gamma,delta), (delta,alpha);
    the square-root convention makes each value positive real or positive
    imaginary, never general complex.
    """
    a, b, c, d = angles.as_tuple()
    s = angles.sigma

    def amp(u: float, v: float) -> complex:
        return signed_sqrt(math.sin(u) * math.sin(v) / (math.sin(s - u) * math.sin(s - v)) - 1.0)

    return Amplitudes(amp(a, b), amp(b, c), amp(c, d), amp(d, a))
