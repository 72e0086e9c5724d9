"""Evaluate and solve the three fold relations, including roots at infinity.

Solving is done on the bihomogenized forms so degenerate leading coefficients
turn into legitimate roots at the point at infinity instead of overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .classify import FCoeffs, GCoeffs, HCoeffs, adjacent_coeffs, diagonal_coeffs, opposite_coeffs
from .core import INF, FoldTangents, ProjectiveReal, SectorAngles
from .errors import DomainError

# Leading coefficients below this fraction of the coefficient scale are
# treated as exactly degenerate (they produce the roots at infinity).
DEGENERATE_REL = 1e-13
# Discriminants in [-DISC_CLAMP, 0) are clamped to a tangency (double root).
DISC_CLAMP = 1e-12
ACOS_GUARD = 1e-9

_W_PERMUTATION = (1, 0, 3, 2)  # (beta, alpha, delta, gamma)


@dataclass(frozen=True, slots=True)
class RootPair:
    """Real roots of one relation at a fixed driving value.

    ``indeterminate`` marks the relation degenerating to 0 = 0 (the whole
    circle of values is admissible; ``roots`` is then empty).  ``tangent``
    marks a clamped double root; ``complex_omitted`` marks a conjugate pair
    that was dropped.
    """

    roots: tuple[ProjectiveReal, ...]
    indeterminate: bool = False
    tangent: bool = False
    complex_omitted: bool = False


@dataclass(frozen=True, slots=True)
class Diagonals:
    """Spherical diagonal lengths, each in (0, pi)."""

    u: float
    v: float


@dataclass(frozen=True, slots=True)
class CandidateSet:
    """Cartesian product of the per-coordinate root sets at one driving value."""

    tuples: tuple[FoldTangents, ...]
    indeterminate_axes: frozenset[str] = field(default_factory=frozenset)

    def __iter__(self):
        return iter(self.tuples)

    def __len__(self) -> int:
        return len(self.tuples)


def eval_adjacent(coeffs: FCoeffs, x: ProjectiveReal, y: ProjectiveReal) -> float:
    """Bihomogenized adjacent relation at unit-norm projective pairs.

    Zero (to tolerance) iff (x, y) satisfies the relation, including points
    at infinity.
    """
    x1, x2 = x.pair()
    y1, y2 = y.pair()
    return (
        coeffs.f22 * x1 * x1 * y1 * y1
        + coeffs.f20 * x1 * x1 * y2 * y2
        + 2.0 * coeffs.f11 * x1 * y1 * x2 * y2
        + coeffs.f02 * x2 * x2 * y1 * y1
        + coeffs.f00 * x2 * x2 * y2 * y2
    )


def eval_opposite(coeffs: GCoeffs, x: ProjectiveReal, z: ProjectiveReal) -> float:
    """Bihomogenized opposite relation at unit-norm projective pairs."""
    x1, x2 = x.pair()
    z1, z2 = z.pair()
    return (
        coeffs.g22 * x1 * x1 * z1 * z1
        + coeffs.g20 * x1 * x1 * z2 * z2
        + coeffs.g02 * z1 * z1 * x2 * x2
        + coeffs.g00 * x2 * x2 * z2 * z2
    )


def adjacent_residual(angles: SectorAngles, x: ProjectiveReal, y: ProjectiveReal) -> float:
    """Normalized residual of the x-y relation (scale-free)."""
    c = adjacent_coeffs(angles)
    scale = max(abs(c.f22), abs(c.f20), abs(c.f11), abs(c.f02), abs(c.f00), 1e-30)
    return abs(eval_adjacent(c, x, y)) / scale


def w_residual(angles: SectorAngles, x: ProjectiveReal, w: ProjectiveReal) -> float:
    """Normalized residual of the x-w relation (adjacent relation, permuted angles)."""
    return adjacent_residual(angles.permuted(_W_PERMUTATION), x, w)


def opposite_residual(angles: SectorAngles, x: ProjectiveReal, z: ProjectiveReal) -> float:
    """Normalized residual of the x-z relation (scale-free)."""
    c = opposite_coeffs(angles)
    scale = max(abs(c.g22), abs(c.g20), abs(c.g02), abs(c.g00), 1e-30)
    return abs(eval_opposite(c, x, z)) / scale


def _solve_projective_quadratic(a: float, b2: float, c: float, floor: float = 0.0) -> RootPair:
    """Real projective roots of a t^2 + b2 t + c = 0 (b2 is the full linear term).

    ``floor`` is the caller's coefficient noise scale: coefficients below
    DEGENERATE_REL times it are treated as exactly zero, so relations that
    degenerate to 0 = 0 are detected despite floating-point residue.
    """
    scale = max(abs(a), abs(b2), abs(c), DEGENERATE_REL * floor)
    if scale == 0.0:
        return RootPair((), indeterminate=True)
    a, b2, c = a / scale, b2 / scale, c / scale
    eps = DEGENERATE_REL * max(1.0, floor / scale)
    if abs(a) < eps:
        if abs(b2) < eps:
            # both leading terms gone: either no solution or identically zero
            if abs(c) < eps:
                return RootPair((), indeterminate=True)
            return RootPair(())
        return RootPair((ProjectiveReal.finite(-c / b2), INF))
    b = 0.5 * b2
    disc = b * b - a * c
    if disc < -DISC_CLAMP:
        return RootPair((), complex_omitted=True)
    if disc < 0.0:
        disc = 0.0
    if disc == 0.0:
        return RootPair((ProjectiveReal.finite(-b / a),) * 2, tangent=True)
    sd = math.sqrt(disc)
    q = -(b + sd) if b >= 0.0 else -(b - sd)
    r1 = q / a
    r2 = c / q
    return RootPair((ProjectiveReal.finite(r1), ProjectiveReal.finite(r2)))


def solve_y(angles: SectorAngles, x: ProjectiveReal) -> RootPair:
    """All y satisfying the adjacent relation at the given x."""
    f = adjacent_coeffs(angles)
    fscale = max(abs(f.f22), abs(f.f20), abs(f.f11), abs(f.f02), abs(f.f00))
    if x.infinite:
        return _solve_projective_quadratic(f.f22, 0.0, f.f20, floor=fscale)
    v = x.value
    return _solve_projective_quadratic(
        f.f22 * v * v + f.f02,
        2.0 * f.f11 * v,
        f.f20 * v * v + f.f00,
        floor=fscale * max(1.0, v * v),
    )


def solve_w(angles: SectorAngles, x: ProjectiveReal) -> RootPair:
    """All w satisfying the x-w relation (adjacent relation, permuted angles)."""
    return solve_y(angles.permuted(_W_PERMUTATION), x)


def solve_z(angles: SectorAngles, x: ProjectiveReal) -> RootPair:
    """All z satisfying the opposite relation at the given x.

    The relation separates as z^2 = -(g20 x^2 + g00)/(g22 x^2 + g02); a
    vanishing denominator with nonvanishing numerator is the double root at
    infinity.
    """
    g = opposite_coeffs(angles)
    gscale = max(abs(g.g22), abs(g.g20), abs(g.g02), abs(g.g00))
    if x.infinite:
        num, den = g.g20, g.g22
        floor = gscale
    else:
        v = x.value
        num = g.g20 * v * v + g.g00
        den = g.g22 * v * v + g.g02
        floor = gscale * max(1.0, v * v)
    scale = max(abs(num), abs(den), DEGENERATE_REL * floor)
    if scale == 0.0:
        return RootPair((), indeterminate=True)
    eps = DEGENERATE_REL * max(scale, floor)
    if abs(den) < eps:
        if abs(num) < eps:
            return RootPair((), indeterminate=True)
        return RootPair((INF, INF), tangent=True)
    z2 = -num / den
    if z2 < -DISC_CLAMP:
        return RootPair((), complex_omitted=True)
    if z2 <= 0.0:
        return RootPair((ProjectiveReal.finite(0.0),) * 2, tangent=True)
    r = math.sqrt(z2)
    return RootPair((ProjectiveReal.finite(r), ProjectiveReal.finite(-r)))


def candidate_tuples(angles: SectorAngles, x: ProjectiveReal) -> CandidateSet:
    """Cartesian product of solve_y x solve_z x solve_w at the given x (<= 8 tuples).

    Axes whose relation is indeterminate at this x contribute no factor and
    are reported in ``indeterminate_axes``; the caller decides how to sweep
    them.
    """
    ys = solve_y(angles, x)
    zs = solve_z(angles, x)
    ws = solve_w(angles, x)
    indeterminate = frozenset(
        name for name, rp in (("y", ys), ("z", zs), ("w", ws)) if rp.indeterminate
    )

    def axis(rp: RootPair) -> tuple[ProjectiveReal, ...]:
        if rp.indeterminate:
            return (ProjectiveReal.finite(0.0),)  # placeholder; axis is free
        uniq: list[ProjectiveReal] = []
        for r in rp.roots:
            if not any(r.approx_eq(u, 1e-14) for u in uniq):
                uniq.append(r)
        return tuple(uniq)

    tuples = tuple(
        FoldTangents(x, y, z, w)
        for y in axis(ys)
        for z in axis(zs)
        for w in axis(ws)
    )
    if any(not axis(rp) for rp in (ys, zs, ws)):
        tuples = ()
    return CandidateSet(tuples, indeterminate)


def _cos_fold(c: ProjectiveReal) -> float:
    """cos(rho) for a fold tangent: (1 - c^2)/(1 + c^2), -1 at infinity."""
    if c.infinite:
        return -1.0
    v = c.value
    if abs(v) > 1e150:
        return -1.0
    return (1.0 - v * v) / (1.0 + v * v)


def _acos_guarded(t: float) -> float:
    if t > 1.0 + ACOS_GUARD or t < -1.0 - ACOS_GUARD:
        raise DomainError(f"arccos argument {t!r} out of range beyond guard")
    return math.acos(max(-1.0, min(1.0, t)))


def diagonal_u(angles: SectorAngles, x: ProjectiveReal) -> float:
    """Spherical diagonal u from the fold at the crease between alpha and beta."""
    a, b = angles.alpha, angles.beta
    return _acos_guarded(math.cos(a) * math.cos(b) - math.sin(a) * math.sin(b) * _cos_fold(x))


def diagonal_u_opposite(angles: SectorAngles, z: ProjectiveReal) -> float:
    """The same diagonal u computed from the (gamma, delta, z) side."""
    c, d = angles.gamma, angles.delta
    return _acos_guarded(math.cos(d) * math.cos(c) - math.sin(d) * math.sin(c) * _cos_fold(z))


def diagonal_v(angles: SectorAngles, y: ProjectiveReal) -> float:
    """Spherical diagonal v from the fold at the crease between beta and gamma."""
    b, c = angles.beta, angles.gamma
    return _acos_guarded(math.cos(b) * math.cos(c) - math.sin(b) * math.sin(c) * _cos_fold(y))


def diagonal_v_opposite(angles: SectorAngles, w: ProjectiveReal) -> float:
    """The same diagonal v computed from the (delta, alpha, w) side."""
    d, a = angles.delta, angles.alpha
    return _acos_guarded(math.cos(d) * math.cos(a) - math.sin(d) * math.sin(a) * _cos_fold(w))


def diagonals_of_state(angles: SectorAngles, fold: FoldTangents) -> Diagonals:
    return Diagonals(diagonal_u(angles, fold.x), diagonal_v(angles, fold.y))


def cayley_menger_residual(angles: SectorAngles, d: Diagonals) -> float:
    """Value of the diagonal relation; ~0 iff (u, v) close up on a sphere."""
    h = diagonal_coeffs(angles)
    p = 1.0 - math.cos(d.u)
    q = 1.0 - math.cos(d.v)
    return (
        p * p * q * q
        - 2.0 * p * p * q
        - 2.0 * p * q * q
        + h.h11 * p * q
        + h.h10 * p
        + h.h01 * q
        + h.h00
    )
