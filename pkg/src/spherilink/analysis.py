"""Derived predicates and transforms: Grashof mobility, self-intersection,
conjugate linkage, and the four strip-switch correspondences."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .classify import VertexKind, classify, modulus_M
from .core import PI, FoldTangents, ProjectiveReal, SectorAngles, validate_sector_angles
from .errors import DegenerateState

# Coordinates adjacent to each panel (the panel's two bounding creases).
PANEL_CREASES = {"alpha": ("x", "w"), "beta": ("x", "y"), "gamma": ("y", "z"), "delta": ("z", "w")}


@dataclass(frozen=True, slots=True)
class GrashofReport:
    grashof: bool
    sigma: float
    max_plus_min: float
    reachable_infinities: frozenset[str]


def _sign(x: float) -> float:
    return math.copysign(1.0, x)


def reachable_infinities(angles: SectorAngles) -> frozenset[str]:
    """Coordinates whose crease can fold flat (tangent reaches infinity).

    For the elliptic type these follow the four sign criteria
    (M-1) sign(pi-sigma) sign(sigma - pair sum) < 0; for degenerate types the
    sets are read off the per-type solutions at infinity.
    """
    vt = classify(angles)
    a, b, c, d = angles.as_tuple()
    s = angles.sigma
    if vt.kind is VertexKind.ELLIPTIC:
        m1 = modulus_M(angles) - 1.0
        pair = {"x": a + b, "y": b + c, "z": c + d, "w": d + a}
        return frozenset(
            name for name, ps in pair.items() if m1 * _sign(PI - s) * _sign(s - ps) < 0.0
        )
    if vt.kind in (
        VertexKind.SQUARE,
        VertexKind.RHOMBUS,
        VertexKind.CROSS,
        VertexKind.ISOGRAM,
        VertexKind.ANTI_ISOGRAM,
        VertexKind.CONIC_I,
    ):
        return frozenset("xyzw")
    if vt.kind in (VertexKind.MIURA_I, VertexKind.MIURA_II, VertexKind.DELTOID_I, VertexKind.DELTOID_II):
        return frozenset("xyzw")
    if vt.kind is VertexKind.ANTI_DELTOID_I:
        # one of the y/w creases folds flat, at x^2 = sin(a+b)/sin(a-b) resp. its inverse
        extra = "y" if math.sin(a + b) / math.sin(a - b) > 0.0 else "w"
        return frozenset({"x", "z", extra})
    if vt.kind is VertexKind.ANTI_DELTOID_II:
        extra = "z" if math.sin(b + c) / math.sin(b - c) > 0.0 else "x"
        return frozenset({"y", "w", extra})
    if vt.kind is VertexKind.CONIC_II:
        extra = "y" if math.sin(d) * math.sin(a) > math.sin(b) * math.sin(c) else "w"
        return frozenset({"x", "z", extra})
    if vt.kind is VertexKind.CONIC_III:
        extra = "x" if math.sin(c) * math.sin(d) > math.sin(a) * math.sin(b) else "z"
        return frozenset({"y", "w", extra})
    # Conic IV: one of x/z and one of y/w
    xz = "x" if math.sin(c) * math.sin(d) > math.sin(a) * math.sin(b) else "z"
    yw = "y" if math.sin(d) * math.sin(a) > math.sin(b) * math.sin(c) else "w"
    return frozenset({xz, yw})


def grashof(angles: SectorAngles) -> GrashofReport:
    """Spherical Grashof verdict: the shortest panel's creases can fold flat
    exactly when max + min < sigma (elliptic case); degenerate types are read
    off their infinity inventories."""
    vals = angles.as_tuple()
    s = angles.sigma
    mpm = max(vals) + min(vals)
    reach = reachable_infinities(angles)
    vt = classify(angles)
    if vt.kind is VertexKind.ELLIPTIC:
        verdict = mpm < s
    else:
        verdict = bool(reach)
    return GrashofReport(grashof=verdict, sigma=s, max_plus_min=mpm, reachable_infinities=reach)


def shortest_adjacent(angles: SectorAngles) -> tuple[str, str]:
    """The two fold coordinates at the creases bounding the shortest panel."""
    names = ("alpha", "beta", "gamma", "delta")
    vals = angles.as_tuple()
    shortest = names[vals.index(min(vals))]
    return PANEL_CREASES[shortest]


_SELF_INTERSECTING = {(1, 1, -1, -1), (-1, 1, 1, -1), (-1, -1, 1, 1), (1, -1, -1, 1)}


def self_intersects(fold: FoldTangents) -> bool:
    """True iff the quadrilateral self-intersects (two adjacent +, two adjacent -).

    The oriented-area test reduces to the sign pattern of the fold tangents;
    it is undefined when a coordinate is 0 or infinity.
    """
    signs = []
    for name, c in zip("xyzw", fold.as_tuple()):
        if c.infinite or c.value == 0.0:
            raise DegenerateState(f"coordinate {name} is 0 or infinity; sign pattern undefined")
        signs.append(1 if c.value > 0.0 else -1)
    return tuple(signs) in _SELF_INTERSECTING


def conjugate(angles: SectorAngles) -> SectorAngles:
    """The conjugate linkage (sigma - a_i): same diagonal-relation coefficients."""
    s = angles.sigma
    a, b, c, d = angles.as_tuple()
    return validate_sector_angles(s - a, s - b, s - c, s - d)


# (supplement flags per sector) and per-coordinate (negate, invert) ops
_STRIP_SWITCHES = {
    1: ((False, False, True, True), ((False, False), (True, True), (True, False), (True, True))),
    2: ((True, False, False, True), ((True, True), (False, False), (True, True), (True, False))),
    3: ((True, True, False, False), ((True, False), (True, True), (False, False), (True, True))),
    4: ((False, True, True, False), ((True, True), (True, False), (True, True), (False, False))),
}


def _apply_coord(c: ProjectiveReal, negate: bool, invert: bool) -> ProjectiveReal:
    if invert:
        c = c.reciprocal()
    if negate:
        c = -c
    return c


def strip_switch(variant: int, angles: SectorAngles, fold: FoldTangents) -> tuple[SectorAngles, FoldTangents]:
    """One of the four involutions replacing two adjacent sectors by supplements.

    Solutions map to solutions of the transformed linkage; applying the same
    variant twice restores the input.
    """
    if variant not in _STRIP_SWITCHES:
        raise ValueError(f"strip switch variant must be 1..4, got {variant!r}")
    supplement, ops = _STRIP_SWITCHES[variant]
    vals = angles.as_tuple()
    new_angles = validate_sector_angles(*(PI - v if flip else v for v, flip in zip(vals, supplement)))
    new_fold = FoldTangents(
        *(_apply_coord(c, neg, inv) for c, (neg, inv) in zip(fold.as_tuple(), ops))
    )
    return new_angles, new_fold
