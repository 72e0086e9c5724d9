"""Independent 3D closure oracle for candidate fold states.

Two charts are implemented.  The primary one composes crease-to-crease
transfer rotations (fold rotation about the current crease, then sector
rotation to the next crease) and measures how far the loop product lands
from the identity; it is singularity-free.  The secondary one places the
linkage in explicit Euclidean coordinates with the triangle spanned by the
first and last creases in the xy-plane, and is kept as an independent
cross-check where it is defined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import FoldTangents, SectorAngles, wrap_angle

# Fig-coordinate chart requires finite tan(alpha), tan(gamma).
_CHART_COS_MIN = 1e-9


def _rot_x(t: float) -> np.ndarray:
    c, s = math.cos(t), math.sin(t)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def _rot_z(t: float) -> np.ndarray:
    c, s = math.cos(t), math.sin(t)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def loop_transfer(angles: SectorAngles, fold: FoldTangents) -> np.ndarray:
    """Product of the eight transfer rotations around the vertex.

    Creases carry folds (x, w, z, y) in traversal order, separated by sectors
    (alpha, delta, gamma, beta); the product is the identity exactly when the
    configuration closes.
    """
    rho = fold.angles()
    a, b, c, d = angles.as_tuple()
    t = _rot_x(rho.rho_x) @ _rot_z(a)
    t = t @ _rot_x(rho.rho_w) @ _rot_z(d)
    t = t @ _rot_x(rho.rho_z) @ _rot_z(c)
    t = t @ _rot_x(rho.rho_y) @ _rot_z(b)
    return t


def closure_residual(angles: SectorAngles, fold: FoldTangents) -> float:
    """Frobenius distance of the loop transfer from the identity (scale-free)."""
    t = loop_transfer(angles, fold)
    t[0, 0] -= 1.0
    t[1, 1] -= 1.0
    t[2, 2] -= 1.0
    return float(np.sqrt(np.sum(t * t)))


def post_examine(
    angles: SectorAngles, tuples: list[FoldTangents] | tuple[FoldTangents, ...], tol: float = 1e-8
) -> list[FoldTangents]:
    """Keep only candidate tuples whose 3D embedding closes (order preserved)."""
    if tol <= 0.0:
        raise ValueError("post-examination tolerance must be positive")
    return [t for t in tuples if closure_residual(angles, t) < tol]


def crease_frames(angles: SectorAngles, fold: FoldTangents) -> list[np.ndarray]:
    """Orientation frames at the four creases (crease direction = frame @ x-hat)."""
    rho = fold.angles()
    a, b, c, d = angles.as_tuple()
    frames = [np.eye(3)]
    m = _rot_x(rho.rho_x) @ _rot_z(a)
    frames.append(m)
    m = m @ _rot_x(rho.rho_w) @ _rot_z(d)
    frames.append(m)
    m = m @ _rot_x(rho.rho_z) @ _rot_z(c)
    frames.append(m)
    return frames


def crease_directions(angles: SectorAngles, fold: FoldTangents) -> np.ndarray:
    """Unit vectors of the four creases, rows in traversal order (x, w, z, y)."""
    x_hat = np.array([1.0, 0.0, 0.0])
    return np.array([f @ x_hat for f in crease_frames(angles, fold)])


def panel_arcs(angles: SectorAngles, fold: FoldTangents, points_per_arc: int = 24) -> list[np.ndarray]:
    """Great-circle tessellation of the four panels on the unit sphere.

    Arc i joins crease i to crease i+1 and subtends the sector between them;
    every returned point has unit norm.
    """
    frames = crease_frames(angles, fold)
    sectors = (angles.alpha, angles.delta, angles.gamma, angles.beta)
    rho = fold.angles().as_tuple()
    fold_order = (rho[0], rho[3], rho[2], rho[1])  # x, w, z, y
    arcs = []
    for frame, sector, f in zip(frames, sectors, fold_order):
        base = frame @ _rot_x(f)
        ts = np.linspace(0.0, sector, points_per_arc)
        pts = np.stack([base @ np.array([math.cos(t), math.sin(t), 0.0]) for t in ts])
        arcs.append(pts)
    return arcs


@dataclass(frozen=True)
class Configuration3D:
    """Euclidean placement of the linkage (O at the sphere center).

    In the coordinate chart, |OA| = |OD| = 1, the OAD triangle lies in the
    xy-plane, and the panel corners B, C sit at right angles over A and D.
    """

    O: np.ndarray
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray
    crease_dirs: np.ndarray  # rows: OA, OB, OC, OD directions
    panel_normals: np.ndarray  # rows: planes OAB, OBC, OCD, ODA
    chart: str  # "coordinate" or "rotation"


def _unit(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v)


def build_embedding(angles: SectorAngles, fold: FoldTangents) -> Configuration3D:
    """Place the linkage in 3D from the fold state.

    Uses the right-angle coordinate chart when tan(alpha), tan(gamma) are
    finite; otherwise falls back to points on the unit sphere from the
    rotation chart.  B and C are determined by (x, y) alone; agreement of the
    remaining folds with (z, w) is what closure checks verify.
    """
    a, b, c, _ = angles.as_tuple()
    rho = fold.angles()
    if abs(math.cos(a)) > _CHART_COS_MIN and abs(math.cos(c)) > _CHART_COS_MIN:
        sb, cb = math.sin(0.5 * b), math.cos(0.5 * b)
        pt_a = np.array([-sb, -cb, 0.0])
        pt_d = np.array([sb, -cb, 0.0])
        ta, tc = math.tan(a), math.tan(c)
        pt_b = pt_a + ta * (
            math.cos(rho.rho_x) * np.array([-cb, sb, 0.0]) + math.sin(rho.rho_x) * np.array([0.0, 0.0, -1.0])
        )
        pt_c = pt_d + tc * (
            math.cos(rho.rho_y) * np.array([cb, sb, 0.0]) + math.sin(rho.rho_y) * np.array([0.0, 0.0, -1.0])
        )
        chart = "coordinate"
    else:
        dirs = crease_directions(angles, fold)
        pt_a, pt_b, pt_c, pt_d = dirs[0], dirs[1], dirs[2], dirs[3]
        chart = "rotation"
    # for obtuse alpha/gamma the right-angle construction places the corner on
    # the far secant; the true crease ray is then the antipode
    sign_b = math.copysign(1.0, math.cos(a)) if chart == "coordinate" else 1.0
    sign_c = math.copysign(1.0, math.cos(c)) if chart == "coordinate" else 1.0
    dirs = np.stack([_unit(pt_a), sign_b * _unit(pt_b), sign_c * _unit(pt_c), _unit(pt_d)])
    normals = []
    for i in range(4):
        n = np.cross(dirs[i], dirs[(i + 1) % 4])
        nn = np.linalg.norm(n)
        normals.append(n / nn if nn > 1e-14 else np.zeros(3))
    return Configuration3D(
        O=np.zeros(3),
        A=pt_a,
        B=pt_b,
        C=pt_c,
        D=pt_d,
        crease_dirs=dirs,
        panel_normals=np.stack(normals),
        chart=chart,
    )


def _fold_at_crease(crease: np.ndarray, back: np.ndarray, front: np.ndarray) -> float:
    """Signed fold angle at a crease from neighbouring crease directions.

    ``back`` and ``front`` are the crease directions preceding and following
    the crease; the fold is pi minus the signed dihedral between the two
    panel half-planes.
    """
    u = back - np.dot(back, crease) * crease
    v = front - np.dot(front, crease) * crease
    u = _unit(u)
    v = _unit(v)
    dihedral = math.atan2(float(np.dot(np.cross(u, v), crease)), float(np.dot(u, v)))
    # the coordinate chart is the mirror image of the transfer-loop convention
    return wrap_angle(dihedral - math.pi)


def coordinate_chart_residual(angles: SectorAngles, fold: FoldTangents) -> float:
    """Closure residual in the coordinate chart (independent of loop_transfer).

    Checks the corner-distance condition |BC|^2 = sec^2(alpha) + sec^2(gamma)
    - 2 sec(alpha) sec(gamma) cos(delta) and that the folds extracted at the
    B and C creases reproduce z and w.  Only defined away from
    tan(alpha/gamma) singularities; raises there.
    """
    from .errors import ChartSingular

    a, _, c, d = angles.as_tuple()
    if abs(math.cos(a)) <= _CHART_COS_MIN or abs(math.cos(c)) <= _CHART_COS_MIN:
        raise ChartSingular("coordinate chart undefined: alpha or gamma too close to pi/2")
    emb = build_embedding(angles, fold)
    bc2 = float(np.sum((emb.B - emb.C) ** 2))
    sa, sc = 1.0 / math.cos(a), 1.0 / math.cos(c)
    target = sa * sa + sc * sc - 2.0 * sa * sc * math.cos(d)
    gap = abs(bc2 - target) / (1.0 + abs(target))

    rho = fold.angles()
    # crease order around the vertex: A(x) -> B(w) -> C(z) -> D(y)
    rho_w = _fold_at_crease(emb.crease_dirs[1], emb.crease_dirs[0], emb.crease_dirs[2])
    rho_z = _fold_at_crease(emb.crease_dirs[2], emb.crease_dirs[1], emb.crease_dirs[3])
    dw = abs(wrap_angle(rho_w - rho.rho_w))
    dz = abs(wrap_angle(rho_z - rho.rho_z))
    return max(gap, dw, dz)
