"""Enumerate and sample every branch of the real configuration space.

Each vertex type gets its closed-form branch list: rational branches driven
directly by one fold angle, trig/exponential branches for the conic and
two-equal-pair types, and Jacobi-elliptic branches for the generic type.
Branch 1 carries the sign(x*z) > 0 convention; branch 2 is the complementary
sheet.  Solutions at infinity are enumerated separately per type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .classify import (
    Amplitudes,
    VertexKind,
    VertexType,
    amplitudes,
    classify,
    modulus_M,
    require_tractable_elliptic,
)
from .core import INF, FoldTangents, PI, ProjectiveReal, SectorAngles, real_part, signed_sqrt, tan_half
from .elliptic import EllipticContext, ShiftedArgument, jacobi_shifted
from .errors import OutOfDomain, PoleProximity, TypeMismatch

COORD_CAP = 1e6  # truncate unbounded parameter domains where a coordinate passes this
_IS_REAL_TOL = 1e-14


class BranchKind:
    RATIONAL = "RationalClosedForm"
    TRIG_EXPONENTIAL = "TrigExponential"
    ELLIPTIC_CN = "EllipticCN"
    ELLIPTIC_SN = "EllipticSN"


@dataclass(frozen=True, slots=True)
class PhaseShift:
    """Offset relating y (or w) to x along a branch: quarter periods + imaginary part."""

    quarter_multiple: int
    imag_part: float


@dataclass(frozen=True, slots=True)
class CoordRule:
    """How one coordinate is produced from the branch parameter."""

    mode: str  # "drive" | "const" | "ratq" | "fn" | "exp"
    sign: float = 1.0
    amp: complex = complex(1.0)
    quarter_add: int = 0
    theta: float = 0.0  # signed imaginary phase offset subtracted from s
    invert: bool = False
    const: ProjectiveReal | None = None
    num: tuple[float, float, float] | None = None
    den: tuple[float, float, float] | None = None


@dataclass(frozen=True, slots=True)
class Branch:
    vertex_type: VertexType
    kind: str
    branch_id: int
    label: str
    rules: tuple[CoordRule, CoordRule, CoordRule, CoordRule]
    s_domain: tuple[float, float]
    sign_sigma: int = 1
    amplitudes: Amplitudes | None = None
    phase1: PhaseShift | None = None
    phase2: PhaseShift | None = None
    offset: int = 0  # quarter multiple j of the tabled chart
    s_chart_sign: int = 1  # tabled chart carries s of this sign
    modulus: float = 0.0  # elliptic modulus k (0 in the trigonometric limit)
    fn_name: str = ""  # "cn" or "sn" for quadratic kinds
    drive: str = "x"  # driving coordinate for rational kinds
    at_infinity: bool = False  # branch lies at infinity (some coordinate identically inf)
    closure_at_infinity: bool = False  # finite branch passes through / reaches infinity


@dataclass(frozen=True, slots=True)
class InfinitySolution:
    state: FoldTangents
    isolated: bool


def _proj_ratq(num: tuple[float, ...], den: tuple[float, ...], c: ProjectiveReal) -> ProjectiveReal:
    """Evaluate a homogeneous rational map at a projective point.

    Linear pairs (p, q)/(r, t) are Moebius maps with no base points; quadratic
    pairs (a, b, c)/(d, e, f) are used only where numerator and denominator
    share no root, so 0/0 cannot occur.
    """
    c1, c2 = c.pair()
    if len(num) == 2:
        n = num[0] * c1 + num[1] * c2
        d = den[0] * c1 + den[1] * c2
    else:
        n = num[0] * c1 * c1 + num[1] * c1 * c2 + num[2] * c2 * c2
        d = den[0] * c1 * c1 + den[1] * c1 * c2 + den[2] * c2 * c2
    if d == 0.0:
        return INF
    return ProjectiveReal.finite(n / d)


def _ratq(a: float, b: float, c: float, d: float, e: float, f: float) -> CoordRule:
    return CoordRule(mode="ratq", num=(a, b, c), den=(d, e, f))


_DRIVE = CoordRule(mode="drive")
_ZERO = CoordRule(mode="const", const=ProjectiveReal.finite(0.0))
_INF = CoordRule(mode="const", const=INF)


def _proportional(k: float) -> CoordRule:
    """coordinate = k * drive"""
    return CoordRule(mode="ratq", num=(k, 0.0), den=(0.0, 1.0))


def _inverse(k: float) -> CoordRule:
    """coordinate = k / drive"""
    return CoordRule(mode="ratq", num=(0.0, k), den=(1.0, 0.0))


def _sign(v: float) -> float:
    return math.copysign(1.0, v)


# --- quadratic-kind evaluation -------------------------------------------------

def _fn_value(rule: CoordRule, j: int, s: float, ctx: EllipticContext, fn_name: str) -> complex:
    triple = jacobi_shifted(ShiftedArgument((j + rule.quarter_add) % 4, s - rule.theta), ctx)
    return rule.sign * rule.amp * getattr(triple, fn_name)


def _exp_value(rule: CoordRule, j: int, s: float) -> complex:
    # the exponential's decay direction flips between the real and imaginary
    # amplitude chart families (even vs odd quarter lines)
    exponent = -s if j % 2 == 0 else s
    return rule.sign * rule.amp * (1j ** (j % 4)) * math.exp(exponent)


def _eval_quad_chart(branch: Branch, j: int, s: float, ctx: EllipticContext) -> FoldTangents:
    coords: list[ProjectiveReal] = []
    for rule in branch.rules:
        if rule.mode == "fn":
            v = _fn_value(rule, j, s, ctx, branch.fn_name)
        else:
            v = _exp_value(rule, j, s)
        r = real_part(v)
        pr = ProjectiveReal.finite(r)
        coords.append(pr.reciprocal() if rule.invert else pr)
    return FoldTangents(*coords)


def _quad_context(branch: Branch) -> EllipticContext:
    return EllipticContext.from_modulus(branch.modulus)


def _quad_state(branch: Branch, s: float) -> FoldTangents:
    ctx = _quad_context(branch)
    if s * branch.s_chart_sign >= 0.0:
        return _eval_quad_chart(branch, branch.offset, s, ctx)
    # mirror arc: opposite chart at reflected parameter
    return _eval_quad_chart(branch, (branch.offset + 2) % 4, -s, ctx)


def branch_state(branch: Branch, s: float, angles: SectorAngles) -> FoldTangents:
    """The fold state at branch parameter s.

    Rational branches take s as the driving fold angle in (-pi, pi]; the
    quadratic kinds take s with |s| the imaginary parameter of the tabled
    chart and sign(s) selecting the mirror arc.
    """
    lo, hi = branch.s_domain
    if not (lo - 1e-12 <= s <= hi + 1e-12):
        raise OutOfDomain(f"parameter {s!r} outside branch domain [{lo!r}, {hi!r}]")
    if branch.kind == BranchKind.RATIONAL:
        c = tan_half(s)
        coords: list[ProjectiveReal] = []
        for rule in branch.rules:
            if rule.mode == "drive":
                coords.append(c)
            elif rule.mode == "const":
                coords.append(rule.const)
            else:
                coords.append(_proj_ratq(rule.num, rule.den, c))
        vals = dict(zip("xyzw", coords))
        return FoldTangents(vals["x"], vals["y"], vals["z"], vals["w"])
    return _quad_state(branch, s)


def _interior_flat_params(branch: Branch, angles: SectorAngles) -> list[float]:
    """Branch parameters where some coordinate passes through a flat crease
    (tangent through infinity) in the interior of an arc."""
    if branch.kind == BranchKind.RATIONAL:
        return []
    ctx = _quad_context(branch)
    kp_period = ctx.K_prime
    lo, hi = branch.s_domain
    spots: list[float] = []
    for rule in branch.rules:
        if rule.mode != "fn" or rule.theta == 0.0:
            continue
        q = (branch.offset + rule.quarter_add) % 4
        cands: list[float] = []
        if rule.invert and q in (1, 3):
            cands = [rule.theta]  # base crosses zero
        elif not rule.invert and q in (0, 2) and math.isfinite(kp_period):
            cands = [rule.theta + kp_period, rule.theta - kp_period]  # base pole
        for c in cands:
            for s_glob in (c, -c):
                if lo + 1e-9 < s_glob < hi - 1e-9 and abs(s_glob) > 1e-9:
                    if not any(abs(s_glob - p) < 1e-12 for p in spots):
                        spots.append(s_glob)
    return spots


def _nudge_to_magnitude(branch: Branch, s_pole: float, angles: SectorAngles) -> list[float]:
    """Parameters just beside an interior flat crease where the diverging
    coordinate clears COORD_CAP."""
    out = []
    for side in (-1.0, 1.0):
        d = 1e-3
        for _ in range(60):
            try:
                st = branch_state(branch, s_pole + side * d, angles)
            except PoleProximity:
                d *= 4.0
                continue
            m = max(abs(c.value) for c in st.as_tuple() if not c.infinite)
            if m > 2.0 * COORD_CAP:
                break
            d *= 0.5
            if d < 1e-12:
                break
        out.append(s_pole + side * max(d, 1e-12))
    return out


def sample_params(branch: Branch, n: int, angles: SectorAngles) -> list[float]:
    """n parameter values covering the branch: uniform fold angle for rational
    branches, a tanh-spaced grid (dense near s = 0) on each arc otherwise.

    Grid points nearest an interior flat crease are snapped beside it so the
    sweep witnesses every coordinate that folds flat.
    """
    if n < 2:
        raise ValueError("need at least 2 samples")
    if branch.kind == BranchKind.RATIONAL:
        return [-PI + 2.0 * PI * (i + 1) / n for i in range(n)]
    lo, hi = branch.s_domain
    n_pos = n // 2
    n_neg = n - n_pos
    scale = 3.0
    norm = math.tanh(scale)
    grid = sorted(lo * math.tanh(scale * (i + 1) / n_neg) / norm for i in range(n_neg))
    grid += sorted(hi * math.tanh(scale * (i + 1) / n_pos) / norm for i in range(n_pos))
    for s_pole in _interior_flat_params(branch, angles):
        for s_near in _nudge_to_magnitude(branch, s_pole, angles):
            s_near = min(max(s_near, lo + 1e-12), hi - 1e-12)
            idx = min(range(len(grid)), key=lambda i: abs(grid[i] - s_near))
            grid[idx] = s_near
    return sorted(grid)


def branch_states_at_x(branch: Branch, x0: ProjectiveReal, angles: SectorAngles) -> list[tuple[float, FoldTangents]]:
    """All (s, state) pairs on the branch whose x coordinate equals x0.

    The x coordinate is monotone on each arc of the quadratic kinds, so the
    inversion is a bracketed bisection in fold-angle space.
    """
    if branch.kind == BranchKind.RATIONAL:
        drive_idx = "xyzw".index(branch.drive)
        if branch.rules[0].mode == "drive":
            s = x0.rho()
            return [(s, branch_state(branch, s, angles))]
        # x is not the driver (it is constant along the branch); match only exact hits
        probe = branch_state(branch, 0.5, angles)
        if probe.x.approx_eq(x0, 1e-9):
            return []  # a whole circle matches; callers sweep the free axis themselves
        return []
    lo, hi = branch.s_domain
    rho0 = x0.rho()
    out: list[tuple[float, FoldTangents]] = []
    eps = 1e-11 * max(hi, 1.0)
    for lo_i, hi_i in ((eps, hi), (lo, -eps)):
        try:
            f_lo = branch_state(branch, lo_i, angles).x.rho() - rho0
            f_hi = branch_state(branch, hi_i, angles).x.rho() - rho0
        except Exception:
            continue
        if f_lo * f_hi > 0.0:
            # arc endpoints (sheet junctions) count as hits within tolerance
            for s_end, f_end in ((lo_i, f_lo), (hi_i, f_hi)):
                if abs(f_end) < 1e-6:
                    out.append((s_end, branch_state(branch, s_end, angles)))
            continue
        a_s, b_s, f_a = lo_i, hi_i, f_lo
        for _ in range(90):
            mid = 0.5 * (a_s + b_s)
            f_m = branch_state(branch, mid, angles).x.rho() - rho0
            if f_a * f_m <= 0.0:
                b_s = mid
            else:
                a_s, f_a = mid, f_m
        s_hit = 0.5 * (a_s + b_s)
        out.append((s_hit, branch_state(branch, s_hit, angles)))
    dedup: list[tuple[float, FoldTangents]] = []
    for s_hit, st in out:
        if not any(st.approx_eq(prev, 1e-8) for _, prev in dedup):
            dedup.append((s_hit, st))
    return dedup


def sample_branch(branch: Branch, n: int, angles: SectorAngles) -> list[FoldTangents]:
    """n states along the branch; grid points falling on a pole are nudged."""
    states = []
    for s in sample_params(branch, n, angles):
        try:
            states.append(branch_state(branch, s, angles))
        except PoleProximity:
            states.append(branch_state(branch, s - 1e-9 * _sign(s), angles))
    return states


# --- rational branch tables ----------------------------------------------------

def _rational_branch(
    vt: VertexType,
    branch_id: int,
    label: str,
    drive: str,
    rules: dict[str, CoordRule],
    at_infinity: bool = False,
) -> Branch:
    ordered = tuple(rules[c] if c != drive else _DRIVE for c in "xyzw")
    reaches_inf = at_infinity or any(
        r.mode == "drive" or (r.mode == "ratq") or (r.mode == "const" and r.const.infinite)
        for r in ordered
    )
    return Branch(
        vertex_type=vt,
        kind=BranchKind.RATIONAL,
        branch_id=branch_id,
        label=label,
        rules=ordered,
        s_domain=(-PI, PI),
        drive=drive,
        at_infinity=at_infinity,
        closure_at_infinity=reaches_inf,
    )


def _simple_fold_x(vt: VertexType, bid: int) -> Branch:
    return _rational_branch(vt, bid, "fold along the x-z creases", "x", {"y": _ZERO, "z": _DRIVE, "w": _ZERO, "x": _DRIVE})


def _simple_fold_y(vt: VertexType, bid: int) -> Branch:
    return _rational_branch(
        vt, bid, "fold along the y-w creases", "y",
        {"x": _ZERO, "z": _ZERO, "w": _proportional(1.0), "y": _DRIVE},
    )


def _inf_branch_x(vt: VertexType, bid: int) -> Branch:
    """x sweeps with y = w held flat-folded, z = -x."""
    return _rational_branch(
        vt, bid, "flat y-w creases, x sweeping", "x",
        {"y": _INF, "z": _proportional(-1.0), "w": _INF, "x": _DRIVE},
        at_infinity=True,
    )


def _inf_branch_y(vt: VertexType, bid: int) -> Branch:
    return _rational_branch(
        vt, bid, "flat x-z creases, y sweeping", "y",
        {"x": _INF, "z": _INF, "w": _proportional(-1.0), "y": _DRIVE},
        at_infinity=True,
    )


# --- quadratic branch construction ----------------------------------------------

# effective phase data per realness row: (q_y_table, ratio_pair, quarter_add_y,
# quarter_add_w, theta_sign, theta2_quarter_delta)
_ROW_DATA = {
    "A": (0, "ag", 0, -1, +1.0, +1),
    "B": (-1, "bd", +1, +2, -1.0, +1),
    "C": (0, "ag", +2, +1, -1.0, -1),
    "D": (+1, "bd", -1, 0, +1.0, -1),
}


def _is_real(p: complex) -> bool:
    return abs(p.imag) <= _IS_REAL_TOL * (1.0 + abs(p.real))


def _row_of(p_x: complex, p_y: complex) -> str:
    rx, ry = _is_real(p_x), _is_real(p_y)
    if rx and ry:
        return "A"
    if not rx and ry:
        return "B"
    if not rx and not ry:
        return "C"
    return "D"


def _product_ratio_amplitudes(angles: SectorAngles) -> Amplitudes:
    """Amplitudes from cyclic sine-product ratios (the conic-type displays)."""
    sa, sb, sc, sd = (math.sin(v) for v in angles.as_tuple())
    return Amplitudes(
        signed_sqrt(sa * sb / (sc * sd) - 1.0),
        signed_sqrt(sb * sc / (sd * sa) - 1.0),
        signed_sqrt(sc * sd / (sa * sb) - 1.0),
        signed_sqrt(sd * sa / (sb * sc) - 1.0),
    )


def _conic_theta_prime(angles: SectorAngles, pair: str) -> float:
    """artanh of the smaller/larger cross-product ratio (trigonometric limit)."""
    a, b, c, d = angles.as_tuple()
    ag = math.sin(a) * math.sin(c)
    bd = math.sin(b) * math.sin(d)
    ratio = bd / ag if pair == "ag" else ag / bd
    ratio = min(ratio, 1.0 - 1e-16) if ratio < 1.0 else 1.0 - 1e-16
    return math.atanh(math.sqrt(ratio))


def _elliptic_theta_prime(angles: SectorAngles, pair: str, m: float, k_prime: float) -> float:
    from .elliptic import dc_inverse

    a, b, c, d = angles.as_tuple()
    s = angles.sigma
    if pair == "ag":
        ratio = math.sin(s - a) * math.sin(s - c) / (math.sin(a) * math.sin(c))
    else:
        ratio = math.sin(s - b) * math.sin(s - d) / (math.sin(b) * math.sin(d))
    if m < 1.0:
        ratio = 1.0 / ratio
    return dc_inverse(math.sqrt(max(ratio, 1.0)), k_prime)


def _quad_branch_pair(
    vt: VertexType,
    angles: SectorAngles,
    kind: str,
    fn_name: str,
    modulus: float,
    j_table: int,
    rules: tuple[CoordRule, CoordRule, CoordRule, CoordRule],
    phase1: PhaseShift,
    phase2: PhaseShift,
    amps: Amplitudes,
    sign_sigma: int,
    first_id: int = 1,
) -> list[Branch]:
    """Build the two finite branches; branch 1 is the sheet with x*z > 0."""
    proto = Branch(
        vertex_type=vt,
        kind=kind,
        branch_id=first_id,
        label="",
        rules=rules,
        s_domain=(-1.0, 1.0),
        sign_sigma=sign_sigma,
        amplitudes=amps,
        phase1=phase1,
        phase2=phase2,
        offset=j_table,
        s_chart_sign=1,
        modulus=modulus,
        fn_name=fn_name,
    )
    ctx = _quad_context(proto)
    s_end = ctx.K_prime if math.isfinite(ctx.K_prime) else math.inf
    probe = min(0.05, 0.2 * s_end) if math.isfinite(s_end) else 0.05
    st = _eval_quad_chart(proto, j_table, probe, ctx)
    xz = st.x.as_float() * st.z.as_float()
    sign_1 = 1 if xz > 0.0 else -1
    cap = _domain_cap(proto, ctx, s_end)
    out = []
    for bid, chart_sign in ((first_id, sign_1), (first_id + 1, -sign_1)):
        out.append(
            Branch(
                vertex_type=vt,
                kind=kind,
                branch_id=bid,
                label="sheet with x*z > 0" if bid == first_id else "sheet with x*z < 0",
                rules=rules,
                s_domain=(-cap, cap),
                sign_sigma=sign_sigma,
                amplitudes=amps,
                phase1=phase1,
                phase2=phase2,
                offset=j_table,
                s_chart_sign=chart_sign,
                modulus=modulus,
                fn_name=fn_name,
                closure_at_infinity=True,
            )
        )
    return out


def _domain_cap(branch: Branch, ctx: EllipticContext, s_end: float) -> float:
    """Largest |s| kept for sampling: all structurally-diverging coordinates stay
    below COORD_CAP (mid-arc flat creases of other coordinates are retained)."""

    def diverging(s: float) -> float:
        """Largest magnitude of the structurally unbounded parametrizing bases."""
        worst = 0.0
        for rule in branch.rules:
            if rule.mode == "exp":
                worst = max(worst, abs(rule.amp) * math.exp(abs(s)))
            elif rule.mode == "fn":
                q = (branch.offset + rule.quarter_add) % 4
                if math.isfinite(s_end) and (rule.invert or rule.theta != 0.0 or q not in (0, 2)):
                    continue  # bounded on (0, K') unless on the pole line
                v = _fn_value(rule, branch.offset, s, ctx, branch.fn_name)
                worst = max(worst, abs(v))
        return worst

    if math.isfinite(s_end):
        hi = s_end * (1.0 - 1e-12)
        try:
            if diverging(hi) <= COORD_CAP:
                return hi
        except (PoleProximity, OverflowError):
            hi = s_end * (1.0 - 1e-9)
    else:
        hi = 1.0
        for _ in range(80):
            try:
                if diverging(hi) > COORD_CAP:
                    break
            except (PoleProximity, OverflowError):
                break
            hi *= 1.5
    lo = 0.0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        try:
            big = diverging(mid) > COORD_CAP
        except (PoleProximity, OverflowError):
            big = True
        if big:
            hi = mid
        else:
            lo = mid
    # keep the side where the diverging coordinate just exceeds the cap, so a
    # sweep genuinely witnesses the flat crease
    return hi


def _fn_rule(sign: float, amp: complex, quarter_add: int = 0, theta: float = 0.0, invert: bool = False) -> CoordRule:
    return CoordRule(mode="fn", sign=sign, amp=amp, quarter_add=quarter_add, theta=theta, invert=invert)


def _exp_rule(sign: float, amp: complex) -> CoordRule:
    return CoordRule(mode="exp", sign=sign, amp=amp)


def _conic_branches(vt: VertexType, angles: SectorAngles) -> list[Branch]:
    a, b, c, d = angles.as_tuple()
    amps = _product_ratio_amplitudes(angles)
    kind = vt.kind
    if kind is VertexKind.CONIC_I:
        sigma_eff = angles.sigma
    elif kind is VertexKind.CONIC_II:
        sigma_eff = 0.5 * (a + b - c - d) + PI
    elif kind is VertexKind.CONIC_III:
        sigma_eff = 0.5 * (-a + b + c - d) + PI
    else:
        sigma_eff = 0.5 * (-a + b - c + d) + PI
    sgn = _sign(PI - sigma_eff)
    row = _row_of(amps.p_x, amps.p_y)
    q_y, pair, qa_y, qa_w, th_sign, dq2 = _ROW_DATA[row]
    theta_p = _conic_theta_prime(angles, pair)
    th = th_sign * theta_p
    # per-type display data: (x sign, x inv, y sign, y inv, z quarter, z inv, w sign, w inv)
    if kind is VertexKind.CONIC_I:
        data = (1.0, False, sgn, False, +1, False, sgn, False)
    elif kind is VertexKind.CONIC_II:
        data = (1.0, False, -sgn, True, -1, False, -sgn, True)
    elif kind is VertexKind.CONIC_III:
        data = (-1.0, True, sgn, False, -1, True, -sgn, False)
    else:
        data = (-1.0, True, -sgn, True, +1, True, sgn, True)
    xs, xi, ys, yi, zq, zi, ws, wi = data
    rules = (
        _fn_rule(xs, amps.p_x, 0, 0.0, xi),
        _fn_rule(ys, amps.p_y, qa_y, th, yi),
        _fn_rule(1.0, amps.p_z, zq, 0.0, zi),
        _fn_rule(ws, amps.p_w, qa_w, th, wi),
    )
    j_table = 0 if _is_real(amps.p_x) else 3
    phase1 = PhaseShift(q_y, theta_p)
    phase2 = PhaseShift(q_y + dq2, theta_p)
    return _quad_branch_pair(
        vt, angles, BranchKind.TRIG_EXPONENTIAL, "cn", 0.0, j_table, rules, phase1, phase2, amps, int(sgn)
    )


def _deltoid_ii_branches(vt: VertexType, angles: SectorAngles) -> list[Branch]:
    """Finite branches for the two-equal-adjacent-pair types (exponential y, w)."""
    b, c = angles.beta, angles.gamma
    sigma_d = b + c
    sgn = _sign(PI - sigma_d)
    p_x = signed_sqrt(math.sin(b) ** 2 / math.sin(c) ** 2 - 1.0)
    p_z = signed_sqrt(math.sin(c) ** 2 / math.sin(b) ** 2 - 1.0)
    amp_yw = signed_sqrt(math.sin(b + c) / math.sin(b - c))
    amps = Amplitudes(p_x, amp_yw, p_z, amp_yw)
    anti = vt.kind is VertexKind.ANTI_DELTOID_II
    if not anti:
        rules = (
            _fn_rule(1.0, p_x, 0),
            _exp_rule(sgn, amp_yw),
            _fn_rule(1.0, p_z, +1),
            _exp_rule(sgn, amp_yw),
        )
    else:
        rules = (
            _fn_rule(-1.0, p_x, 0, invert=True),
            _exp_rule(sgn, amp_yw),
            _fn_rule(1.0, p_z, -1, invert=True),
            _exp_rule(-sgn, amp_yw),
        )
    j_table = 0 if _is_real(p_x) else 3
    return _quad_branch_pair(
        vt, angles, BranchKind.TRIG_EXPONENTIAL, "cn", 0.0, j_table, rules, None, None, amps, int(sgn)
    )


def _elliptic_branches(vt: VertexType, angles: SectorAngles) -> list[Branch]:
    m = require_tractable_elliptic(angles)
    amps = amplitudes(angles)
    sgn = _sign(PI - angles.sigma)
    if m > 1.0:
        k = math.sqrt(1.0 - 1.0 / m)
        fn_name = "cn"
        kind = BranchKind.ELLIPTIC_CN
        j_table = 0 if _is_real(amps.p_x) else 3
    else:
        k = math.sqrt(1.0 - m)
        fn_name = "sn"
        kind = BranchKind.ELLIPTIC_SN
        j_table = 1 if _is_real(amps.p_x) else 0
    k_prime = math.sqrt((1.0 - k) * (1.0 + k))
    row = _row_of(amps.p_x, amps.p_y)
    q_y, pair, qa_y, qa_w, th_sign, dq2 = _ROW_DATA[row]
    theta_p = _elliptic_theta_prime(angles, pair, m, k_prime)
    th = th_sign * theta_p
    rules = (
        _fn_rule(1.0, amps.p_x, 0),
        _fn_rule(sgn, amps.p_y, qa_y, th),
        _fn_rule(1.0, amps.p_z, +1),
        _fn_rule(sgn, amps.p_w, qa_w, th),
    )
    phase1 = PhaseShift(q_y, theta_p)
    phase2 = PhaseShift(q_y + dq2, theta_p)
    return _quad_branch_pair(vt, angles, kind, fn_name, k, j_table, rules, phase1, phase2, amps, int(sgn))


def phase_shifts(angles: SectorAngles) -> tuple[PhaseShift, PhaseShift]:
    """The (theta1, theta2) offsets for conic and elliptic types."""
    vt = classify(angles)
    if vt.kind in (VertexKind.CONIC_I, VertexKind.CONIC_II, VertexKind.CONIC_III, VertexKind.CONIC_IV):
        branches = _conic_branches(vt, angles)
    elif vt.kind is VertexKind.ELLIPTIC:
        branches = _elliptic_branches(vt, angles)
    else:
        raise TypeMismatch(f"phase shifts defined for conic/elliptic types, not {vt.name}")
    return branches[0].phase1, branches[0].phase2


# --- per-type enumeration -------------------------------------------------------

def enumerate_branches(angles: SectorAngles) -> list[Branch]:
    """The complete branch list for the vertex, finite branches first.

    Branches at infinity (a coordinate identically flat-folded) are appended
    with ``at_infinity=True``.
    """
    vt = classify(angles)
    a, b, c, d = angles.as_tuple()
    kind = vt.kind
    out: list[Branch]
    if kind is VertexKind.SQUARE:
        out = [_simple_fold_x(vt, 1), _simple_fold_y(vt, 2), _inf_branch_x(vt, 3), _inf_branch_y(vt, 4)]
    elif kind is VertexKind.RHOMBUS:
        ca = math.cos(a)
        out = [
            _rational_branch(vt, 1, "spherical rhombus flex", "x", {"y": _inverse(ca), "z": _DRIVE, "w": _inverse(ca), "x": _DRIVE}),
            _inf_branch_x(vt, 2),
            _inf_branch_y(vt, 3),
        ]
    elif kind is VertexKind.CROSS:
        ca = math.cos(a)
        out = [
            _simple_fold_x(vt, 1),
            _simple_fold_y(vt, 2),
            _rational_branch(vt, 3, "butterfly", "x", {"y": _inverse(-1.0 / ca), "z": _proportional(-1.0), "w": _inverse(1.0 / ca), "x": _DRIVE}),
        ]
    elif kind is VertexKind.MIURA_I:
        ca = math.cos(a)
        out = [
            _simple_fold_y(vt, 1),
            _rational_branch(vt, 2, "coupled flex", "x", {"y": _proportional(ca), "z": _DRIVE, "w": _proportional(-ca), "x": _DRIVE}),
            _inf_branch_x(vt, 3),
        ]
    elif kind is VertexKind.MIURA_II:
        ca = math.cos(a)
        out = [
            _simple_fold_x(vt, 1),
            _rational_branch(vt, 2, "coupled flex", "x", {"y": _proportional(-1.0 / ca), "z": _proportional(-1.0), "w": _proportional(-1.0 / ca), "x": _DRIVE}),
            _inf_branch_y(vt, 3),
        ]
    elif kind is VertexKind.ISOGRAM:
        cp, cm = math.cos(0.5 * (a + b)), math.cos(0.5 * (a - b))
        sp, sm = math.sin(0.5 * (a + b)), math.sin(0.5 * (a - b))
        out = [
            _rational_branch(vt, 1, "car wiper", "x", {"y": _inverse(cp / cm), "z": _DRIVE, "w": _inverse(cp / cm), "x": _DRIVE}),
            _rational_branch(vt, 2, "butterfly", "x", {"y": _inverse(sp / sm), "z": _proportional(-1.0), "w": _inverse(-sp / sm), "x": _DRIVE}),
        ]
    elif kind is VertexKind.ANTI_ISOGRAM:
        cp, cm = math.cos(0.5 * (a + b)), math.cos(0.5 * (a - b))
        sp, sm = math.sin(0.5 * (a + b)), math.sin(0.5 * (a - b))
        out = [
            _rational_branch(vt, 1, "proportional flex", "x", {"y": _proportional(-sm / sp), "z": _DRIVE, "w": _proportional(sm / sp), "x": _DRIVE}),
            _rational_branch(vt, 2, "proportional flex", "x", {"y": _proportional(-cm / cp), "z": _proportional(-1.0), "w": _proportional(-cm / cp), "x": _DRIVE}),
        ]
    elif kind is VertexKind.DELTOID_I:
        sa, sb = math.sin(a), math.sin(b)
        out = [
            _rational_branch(
                vt, 1, "car wiper", "x",
                {
                    "y": _ratq(math.sin(b - a), 0.0, math.sin(b + a), 0.0, 2.0 * sa, 0.0),
                    "z": _DRIVE,
                    "w": _ratq(math.sin(a - b), 0.0, math.sin(a + b), 0.0, 2.0 * sb, 0.0),
                    "x": _DRIVE,
                },
            ),
            _inf_branch_x(vt, 2),
        ]
    elif kind is VertexKind.ANTI_DELTOID_I:
        sa, sb = math.sin(a), math.sin(b)
        out = [
            _simple_fold_x(vt, 1),
            _rational_branch(
                vt, 2, "coupled flex", "x",
                {
                    "y": _ratq(0.0, -2.0 * sa, 0.0, math.sin(b - a), 0.0, math.sin(b + a)),
                    "z": _proportional(-1.0),
                    "w": _ratq(0.0, -2.0 * sb, 0.0, math.sin(a - b), 0.0, math.sin(a + b)),
                    "x": _DRIVE,
                },
            ),
        ]
    elif kind in (VertexKind.DELTOID_II, VertexKind.ANTI_DELTOID_II):
        out = _deltoid_ii_branches(vt, angles)
        if kind is VertexKind.DELTOID_II:
            out.append(_inf_branch_y(vt, 3))
    elif kind in (VertexKind.CONIC_I, VertexKind.CONIC_II, VertexKind.CONIC_III, VertexKind.CONIC_IV):
        out = _conic_branches(vt, angles)
    else:
        out = _elliptic_branches(vt, angles)
    return out


# --- solutions at infinity -------------------------------------------------------

def _mirror_pair(x, y, z, w, angles: SectorAngles | None = None) -> list[InfinitySolution]:
    """The two mirror-image configurations built from the given magnitudes.

    Sign choices among the finite coordinates are settled by post-examination
    (3D closure), the same filter the per-type derivations apply; the
    transcribed display signs are tried first.
    """
    from .embed3d import closure_residual

    first = FoldTangents(x, y, z, w)
    if angles is None or closure_residual(angles, first) < 1e-8:
        return [InfinitySolution(first, True), InfinitySolution(first.negate(), True)]
    coords = first.as_tuple()
    finite_idx = [i for i, cset in enumerate(coords) if not cset.infinite and cset.value != 0.0]
    survivors: list[FoldTangents] = []
    for bits in range(2 ** len(finite_idx)):
        cand = list(coords)
        for pos, idx in enumerate(finite_idx):
            if (bits >> pos) & 1:
                cand[idx] = -cand[idx]
        st = FoldTangents(*cand)
        if closure_residual(angles, st) < 1e-8 and not any(st.approx_eq(sv, 1e-12) for sv in survivors):
            survivors.append(st)
    if not survivors:
        # no sign assignment closes: keep the transcription, tests will flag it
        return [InfinitySolution(first, True), InfinitySolution(first.negate(), True)]
    return [InfinitySolution(st, True) for st in survivors]


def _pr(v: float) -> ProjectiveReal:
    return ProjectiveReal.finite(v)


def _sqrt_pos(v: float) -> float:
    """Real square root of a quantity that is nonnegative by construction."""
    return math.sqrt(max(v, 0.0))


def solutions_at_infinity(angles: SectorAngles) -> list[InfinitySolution]:
    """Per-type inventory of configurations with at least one flat crease.

    Isolated points are limit or pass-through points of finite branches;
    non-isolated entries are representatives of whole branches at infinity.
    """
    vt = classify(angles)
    kind = vt.kind
    a, b, c, d = angles.as_tuple()
    sa, sb, sc, sd = (math.sin(v) for v in angles.as_tuple())
    zero, inf = ProjectiveReal.finite(0.0), INF

    def branch_rep_x() -> InfinitySolution:
        return InfinitySolution(FoldTangents(zero, inf, zero, inf), False)

    def branch_rep_y() -> InfinitySolution:
        return InfinitySolution(FoldTangents(inf, zero, inf, zero), False)

    if kind in (VertexKind.SQUARE, VertexKind.RHOMBUS):
        return [branch_rep_x(), branch_rep_y()]
    if kind in (VertexKind.CROSS, VertexKind.ISOGRAM):
        return [
            InfinitySolution(FoldTangents(inf, zero, inf, zero), True),
            InfinitySolution(FoldTangents(zero, inf, zero, inf), True),
        ]
    if kind is VertexKind.MIURA_I:
        return [branch_rep_x()]
    if kind is VertexKind.MIURA_II:
        return [branch_rep_y()]
    if kind in (VertexKind.ANTI_ISOGRAM, VertexKind.CONIC_I):
        return [InfinitySolution(FoldTangents(inf, inf, inf, inf), True)]
    if kind is VertexKind.DELTOID_I:
        return [branch_rep_x()]
    if kind is VertexKind.DELTOID_II:
        return [branch_rep_y()]
    if kind is VertexKind.ANTI_DELTOID_I:
        out = [InfinitySolution(FoldTangents(inf, zero, inf, zero), True)]
        r_y = math.sin(a + b) / math.sin(a - b)
        if r_y > 0.0:
            # the y crease folds flat; w is the reciprocal of the branch numerator
            xv = _sqrt_pos(r_y)
            wv = sb / _sqrt_pos(math.sin(a + b) * math.sin(a - b))
            out += _mirror_pair(_pr(xv), inf, _pr(-xv), _pr(-wv), angles)
        else:
            xv = _sqrt_pos(math.sin(b + a) / math.sin(b - a))
            yv = sa / _sqrt_pos(math.sin(b + a) * math.sin(b - a))
            out += _mirror_pair(_pr(xv), _pr(-yv), _pr(-xv), inf, angles)
        return out
    if kind is VertexKind.ANTI_DELTOID_II:
        out = [InfinitySolution(FoldTangents(zero, inf, zero, inf), True)]
        r = math.sin(b + c) / math.sin(b - c)
        if r > 0.0:
            xv = sc / _sqrt_pos(math.sin(b + c) * math.sin(b - c))
            yv = _sqrt_pos(r)
            out += _mirror_pair(_pr(-xv), _pr(yv), inf, _pr(-yv), angles)
        else:
            yv = _sqrt_pos(math.sin(c + b) / math.sin(c - b))
            zv = sb / _sqrt_pos(math.sin(c + b) * math.sin(c - b))
            out += _mirror_pair(inf, _pr(yv), _pr(-zv), _pr(-yv), angles)
        return out
    if kind is VertexKind.CONIC_II:
        sigma_eff = 0.5 * (a + b - c - d) + PI
        sg = _sign(sigma_eff - PI)
        out = [InfinitySolution(FoldTangents(inf, zero, inf, zero), True)]
        if sd * sa > sb * sc:
            xv = sg * _sqrt_pos(sa * math.sin(b - c) / (sc * math.sin(b - a)) - 1.0)
            zv = -sg * _sqrt_pos(sd * math.sin(c - b) / (sb * math.sin(c - d)) - 1.0)
            wv = 1.0 / _sqrt_pos(sd * sa / (sb * sc) - 1.0)
            out += _mirror_pair(_pr(xv), inf, _pr(zv), _pr(wv), angles)
        else:
            xv = sg * _sqrt_pos(sb * math.sin(a - d) / (sd * math.sin(a - b)) - 1.0)
            yv = 1.0 / _sqrt_pos(sb * sc / (sd * sa) - 1.0)
            zv = -sg * _sqrt_pos(sc * math.sin(d - a) / (sa * math.sin(d - c)) - 1.0)
            out += _mirror_pair(_pr(xv), _pr(yv), _pr(zv), inf, angles)
        return out
    if kind is VertexKind.CONIC_III:
        sigma_eff = 0.5 * (-a + b + c - d) + PI
        sg = _sign(sigma_eff - PI)
        out = [InfinitySolution(FoldTangents(zero, inf, zero, inf), True)]
        if sc * sd > sa * sb:
            yv = sg * _sqrt_pos(sc * math.sin(b - a) / (sa * math.sin(b - c)) - 1.0)
            zv = 1.0 / _sqrt_pos(sc * sd / (sa * sb) - 1.0)
            wv = -sg * _sqrt_pos(sd * math.sin(a - b) / (sb * math.sin(a - d)) - 1.0)
            out += _mirror_pair(inf, _pr(yv), _pr(zv), _pr(wv), angles)
        else:
            xv = 1.0 / _sqrt_pos(sa * sb / (sc * sd) - 1.0)
            yv = sg * _sqrt_pos(sb * math.sin(c - d) / (sd * math.sin(c - b)) - 1.0)
            wv = -sg * _sqrt_pos(sa * math.sin(d - c) / (sc * math.sin(d - a)) - 1.0)
            out += _mirror_pair(_pr(xv), _pr(yv), inf, _pr(wv), angles)
        return out
    if kind is VertexKind.CONIC_IV:
        sigma_eff = 0.5 * (-a + b - c + d) + PI
        sg = _sign(sigma_eff - PI)
        out: list[InfinitySolution] = []
        if sc * sd > sa * sb:
            yv = sg * _sqrt_pos(sc * math.sin(b - a) / (sb * math.sin(a + c)) - 1.0)
            zv = 1.0 / _sqrt_pos(sc * sd / (sa * sb) - 1.0)
            wv = -sg * _sqrt_pos(sd * math.sin(a - b) / (sa * math.sin(b + d)) - 1.0)
            out += _mirror_pair(inf, _pr(yv), _pr(zv), _pr(wv), angles)
        else:
            wv = sg * _sqrt_pos(sa * math.sin(d - c) / (sd * math.sin(a + c)) - 1.0)
            xv = 1.0 / _sqrt_pos(sa * sb / (sc * sd) - 1.0)
            yv = -sg * _sqrt_pos(sb * math.sin(c - d) / (sc * math.sin(b + d)) - 1.0)
            out += _mirror_pair(_pr(xv), _pr(yv), inf, _pr(wv), angles)
        if sd * sa > sb * sc:
            zv = sg * _sqrt_pos(sd * math.sin(c - b) / (sc * math.sin(b + d)) - 1.0)
            wv = 1.0 / _sqrt_pos(sd * sa / (sb * sc) - 1.0)
            xv = -sg * _sqrt_pos(sa * math.sin(b - c) / (sb * math.sin(a + c)) - 1.0)
            out += _mirror_pair(_pr(xv), inf, _pr(zv), _pr(wv), angles)
        else:
            xv = sg * _sqrt_pos(sb * math.sin(a - d) / (sa * math.sin(b + d)) - 1.0)
            yv = 1.0 / _sqrt_pos(sb * sc / (sa * sd) - 1.0)
            zv = -sg * _sqrt_pos(sc * math.sin(d - a) / (sd * math.sin(a + c)) - 1.0)
            out += _mirror_pair(_pr(xv), _pr(yv), _pr(zv), inf, angles)
        return out
    # elliptic: the four sign criteria, generically exactly two hold
    s = angles.sigma
    m1 = modulus_M(angles) - 1.0
    sg = _sign(s - PI)
    out = []
    ssa, ssb, ssc, ssd = (math.sin(s - v) for v in angles.as_tuple())
    if m1 * _sign(PI - s) * _sign(s - a - b) < 0.0:
        yv = sg * _sqrt_pos(sc * math.sin(b - a) / (ssb * math.sin(s - a - c)) - 1.0)
        zv = 1.0 / _sqrt_pos(sc * sd / (ssa * ssb) - 1.0)
        wv = -sg * _sqrt_pos(sd * math.sin(a - b) / (ssa * math.sin(s - b - d)) - 1.0)
        out += _mirror_pair(inf, _pr(yv), _pr(zv), _pr(wv), angles)
    if m1 * _sign(PI - s) * _sign(s - b - c) < 0.0:
        zv = sg * _sqrt_pos(sd * math.sin(c - b) / (ssc * math.sin(s - b - d)) - 1.0)
        wv = 1.0 / _sqrt_pos(sd * sa / (ssb * ssc) - 1.0)
        xv = -sg * _sqrt_pos(sa * math.sin(b - c) / (ssb * math.sin(s - a - c)) - 1.0)
        out += _mirror_pair(_pr(xv), inf, _pr(zv), _pr(wv), angles)
    if m1 * _sign(PI - s) * _sign(s - c - d) < 0.0:
        wv = sg * _sqrt_pos(sa * math.sin(d - c) / (ssd * math.sin(s - a - c)) - 1.0)
        xv = 1.0 / _sqrt_pos(sa * sb / (ssc * ssd) - 1.0)
        yv = -sg * _sqrt_pos(sb * math.sin(c - d) / (ssc * math.sin(s - b - d)) - 1.0)
        out += _mirror_pair(_pr(xv), _pr(yv), inf, _pr(wv), angles)
    if m1 * _sign(PI - s) * _sign(s - d - a) < 0.0:
        xv = sg * _sqrt_pos(sb * math.sin(a - d) / (ssa * math.sin(s - b - d)) - 1.0)
        yv = 1.0 / _sqrt_pos(sb * sc / (ssa * ssd) - 1.0)
        zv = -sg * _sqrt_pos(sc * math.sin(d - a) / (ssd * math.sin(s - a - c)) - 1.0)
        out += _mirror_pair(_pr(xv), _pr(yv), _pr(zv), inf, angles)
    return out
