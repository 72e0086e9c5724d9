"""Branch atlas document: assembly, JSON/CSV serialization, verification.

The JSON schema is versioned; infinity is serialized as the string "inf"
because JSON has no infinity literal.  CSV is a row projection of the same
numbers (one row per sample).
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import Any

from .analysis import self_intersects
from .branches import Branch, InfinitySolution, branch_state, enumerate_branches, sample_params, solutions_at_infinity
from .classify import VertexKind, classify, modulus_M
from .core import FoldTangents, ProjectiveReal, SectorAngles, validate_sector_angles
from .embed3d import closure_residual
from .errors import DegenerateState, PoleProximity, SchemaError
from .relations import diagonal_u, diagonal_v

SCHEMA_VERSION = "1"
DEFAULT_TOL = 1e-8
CSV_HEADER = [
    "branch_id", "s", "x", "y", "z", "w",
    "rho_x", "rho_y", "rho_z", "rho_w", "u", "v",
    "self_intersects", "closure_residual",
]


def _coord_json(c: ProjectiveReal) -> Any:
    return "inf" if c.infinite else c.value


def _coord_parse(v: Any) -> ProjectiveReal:
    if v == "inf":
        return ProjectiveReal.infinity()
    return ProjectiveReal.finite(float(v))


def _amp_json(p: complex) -> list[float]:
    return [p.real, p.imag]


@dataclass(frozen=True)
class SampleRow:
    branch_id: int
    s: float
    state: FoldTangents
    u: float
    v: float
    self_intersects: bool
    closure_residual: float

    def as_json(self) -> dict[str, Any]:
        rho = self.state.angles()
        return {
            "s": self.s,
            "x": _coord_json(self.state.x),
            "y": _coord_json(self.state.y),
            "z": _coord_json(self.state.z),
            "w": _coord_json(self.state.w),
            "rho_x": rho.rho_x,
            "rho_y": rho.rho_y,
            "rho_z": rho.rho_z,
            "rho_w": rho.rho_w,
            "u": self.u,
            "v": self.v,
            "self_intersects": self.self_intersects,
            "closure_residual": self.closure_residual,
        }


def make_row(angles: SectorAngles, branch_id: int, s: float, state: FoldTangents) -> SampleRow:
    try:
        crossed = self_intersects(state)
    except DegenerateState:
        crossed = False
    return SampleRow(
        branch_id=branch_id,
        s=s,
        state=state,
        u=diagonal_u(angles, state.x),
        v=diagonal_v(angles, state.y),
        self_intersects=crossed,
        closure_residual=closure_residual(angles, state),
    )


def build_document(angles: SectorAngles, n: int = 257, tol: float = DEFAULT_TOL) -> dict[str, Any]:
    """Assemble the full branch atlas with n samples per branch."""
    vt = classify(angles)
    branches = enumerate_branches(angles)
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "tolerance": tol,
        "angles": dict(zip(("alpha", "beta", "gamma", "delta"), angles.as_tuple())),
        "vertex_type": vt.name,
        "orthodiagonal": vt.orthodiagonal,
    }
    if vt.kind is VertexKind.ELLIPTIC:
        doc["M"] = modulus_M(angles)
    doc["branches"] = [_branch_json(b, angles, n) for b in branches]
    doc["infinity_solutions"] = [_infinity_json(s, angles) for s in solutions_at_infinity(angles)]
    return doc


def _branch_json(branch: Branch, angles: SectorAngles, n: int) -> dict[str, Any]:
    rows = []
    for s in sample_params(branch, n, angles):
        try:
            state = branch_state(branch, s, angles)
        except PoleProximity:
            s = s - math.copysign(1e-9, s)
            state = branch_state(branch, s, angles)
        rows.append(make_row(angles, branch.branch_id, s, state).as_json())
    out: dict[str, Any] = {
        "branch_id": branch.branch_id,
        "kind": branch.kind,
        "label": branch.label,
        "at_infinity": branch.at_infinity,
        "closure_at_infinity": branch.closure_at_infinity,
        "s_domain": list(branch.s_domain),
        "sign_sigma": branch.sign_sigma,
        "samples": rows,
    }
    if branch.amplitudes is not None:
        out["amplitudes"] = {
            "p_x": _amp_json(branch.amplitudes.p_x),
            "p_y": _amp_json(branch.amplitudes.p_y),
            "p_z": _amp_json(branch.amplitudes.p_z),
            "p_w": _amp_json(branch.amplitudes.p_w),
        }
    if branch.phase1 is not None:
        out["phase1"] = {"quarter_multiple": branch.phase1.quarter_multiple, "imag_part": branch.phase1.imag_part}
        out["phase2"] = {"quarter_multiple": branch.phase2.quarter_multiple, "imag_part": branch.phase2.imag_part}
    return out


def _infinity_json(sol: InfinitySolution, angles: SectorAngles) -> dict[str, Any]:
    st = sol.state
    return {
        "x": _coord_json(st.x),
        "y": _coord_json(st.y),
        "z": _coord_json(st.z),
        "w": _coord_json(st.w),
        "isolated": sol.isolated,
    }


def document_to_json(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=1)


def document_to_csv(doc: dict[str, Any]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_HEADER)
    for branch in doc["branches"]:
        for row in branch["samples"]:
            writer.writerow([
                branch["branch_id"],
                repr(row["s"]),
                *(("inf" if row[c] == "inf" else repr(row[c])) for c in ("x", "y", "z", "w")),
                *(repr(row[c]) for c in ("rho_x", "rho_y", "rho_z", "rho_w", "u", "v")),
                "true" if row["self_intersects"] else "false",
                repr(row["closure_residual"]),
            ])
    return buf.getvalue()


def parse_document(text: str) -> dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "schema_version" not in doc:
        raise SchemaError("missing schema_version")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {doc['schema_version']!r}")
    for key in ("angles", "vertex_type", "branches"):
        if key not in doc:
            raise SchemaError(f"missing field {key!r}")
    return doc


def verify_document(doc: dict[str, Any]) -> list[str]:
    """Recompute the closure residual of every sample; return failure messages."""
    ang = doc["angles"]
    angles = validate_sector_angles(ang["alpha"], ang["beta"], ang["gamma"], ang["delta"])
    tol = float(doc.get("tolerance", DEFAULT_TOL))
    failures = []
    for branch in doc["branches"]:
        for i, row in enumerate(branch["samples"]):
            state = FoldTangents(*(_coord_parse(row[c]) for c in ("x", "y", "z", "w")))
            res = closure_residual(angles, state)
            if not res < tol:
                failures.append(
                    f"branch {branch['branch_id']} sample {i} (s={row['s']}): closure residual {res:.3e} >= {tol:.1e}"
                )
    return failures
