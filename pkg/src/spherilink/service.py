"""Stateless JSON-over-HTTP facade for the browser explorer.

Three endpoints mirror the CLI: /classify, /branches, /state.  All evaluation
is pure, so identical requests produce identical responses; branch ids are
deterministic functions of the angles and serve as the client's handle.
"""

from __future__ import annotations

import argparse
import math
import os
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .analysis import grashof, self_intersects
from .branches import branch_state, enumerate_branches
from .classify import VertexKind, adjacent_coeffs, amplitudes, classify, modulus_M, opposite_coeffs
from .core import SectorAngles, validate_sector_angles
from .document import build_document
from .embed3d import closure_residual, crease_directions, panel_arcs
from .errors import DegenerateState, NearDegenerate, OutOfDomain, OutOfRange, PoleProximity, QuadrilateralInequality
from .relations import diagonal_u, diagonal_v

DEFAULT_PORT = 8075


class AnglesBody(BaseModel):
    alpha: float
    beta: float
    gamma: float
    delta: float
    unit: str = "rad"


class BranchesBody(AnglesBody):
    n: int = 65


class StateBody(AnglesBody):
    branch_id: int
    s: float


def _angles_of(body: AnglesBody) -> SectorAngles:
    vals = (body.alpha, body.beta, body.gamma, body.delta)
    if body.unit == "deg":
        vals = tuple(math.radians(v) for v in vals)
    elif body.unit != "rad":
        raise HTTPException(status_code=400, detail=f"unknown unit {body.unit!r}")
    try:
        return validate_sector_angles(*vals)
    except (OutOfRange, QuadrilateralInequality) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def create_app() -> FastAPI:
    app = FastAPI(title="spherilink", description="spherical 4-bar linkage kinematics")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.post("/classify")
    def classify_endpoint(body: AnglesBody):
        angles = _angles_of(body)
        vt = classify(angles)
        f = adjacent_coeffs(angles)
        g = opposite_coeffs(angles)
        gr = grashof(angles)
        out = {
            "type": vt.name,
            "orthodiagonal": vt.orthodiagonal,
            "sigma": angles.sigma,
            "angles_rad": dict(zip(("alpha", "beta", "gamma", "delta"), angles.as_tuple())),
            "adjacent": {"f22": f.f22, "f20": f.f20, "f11": f.f11, "f02": f.f02, "f00": f.f00},
            "opposite": {"g22": g.g22, "g20": g.g20, "g02": g.g02, "g00": g.g00},
            "grashof": gr.grashof,
            "reachable_infinities": sorted(gr.reachable_infinities),
        }
        if vt.kind is VertexKind.ELLIPTIC:
            out["M"] = modulus_M(angles)
            amp = amplitudes(angles)
            out["amplitudes"] = {
                name: [p.real, p.imag] for name, p in zip(("p_x", "p_y", "p_z", "p_w"), amp.as_tuple())
            }
        return out

    @app.post("/branches")
    def branches_endpoint(body: BranchesBody):
        angles = _angles_of(body)
        try:
            return build_document(angles, n=body.n)
        except NearDegenerate as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

    @app.post("/state")
    def state_endpoint(body: StateBody):
        angles = _angles_of(body)
        try:
            branches = enumerate_branches(angles)
        except NearDegenerate as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        match = [b for b in branches if b.branch_id == body.branch_id]
        if not match:
            raise HTTPException(status_code=404, detail=f"no branch with id {body.branch_id}")
        branch = match[0]
        try:
            state = branch_state(branch, body.s, angles)
        except OutOfDomain as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        except PoleProximity:
            state = branch_state(branch, body.s - math.copysign(1e-9, body.s), angles)
        rho = state.angles()
        try:
            crossed = self_intersects(state)
        except DegenerateState:
            crossed = False
        arcs = panel_arcs(angles, state)
        return {
            "x": "inf" if state.x.infinite else state.x.value,
            "y": "inf" if state.y.infinite else state.y.value,
            "z": "inf" if state.z.infinite else state.z.value,
            "w": "inf" if state.w.infinite else state.w.value,
            "rho_x": rho.rho_x,
            "rho_y": rho.rho_y,
            "rho_z": rho.rho_z,
            "rho_w": rho.rho_w,
            "u": diagonal_u(angles, state.x),
            "v": diagonal_v(angles, state.y),
            "self_intersects": crossed,
            "closure_residual": closure_residual(angles, state),
            "crease_dirs": crease_directions(angles, state).tolist(),
            "arcs": [a.tolist() for a in arcs],
        }

    ui_dir = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    if ui_dir.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")
    return app


app = create_app()


def main(argv: list[str] | None = None) -> None:
    import uvicorn

    parser = argparse.ArgumentParser(prog="spherilink-service")
    parser.add_argument("--port", type=int, default=int(os.environ.get("SPHERILINK_PORT", DEFAULT_PORT)))
    parser.add_argument("--host", default="127.0.0.1")
    args = parser.parse_args(argv)
    uvicorn.run(app, host=args.host, port=args.port)


if __name__ == "__main__":
    main()
