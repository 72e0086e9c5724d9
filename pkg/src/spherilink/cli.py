"""Command-line front door: classify, sample, oracle, and verify subcommands."""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .branches import solutions_at_infinity
from .classify import (
    VertexKind,
    adjacent_coeffs,
    amplitudes,
    classify,
    diagonal_coeffs,
    modulus_M,
    opposite_coeffs,
)
from .core import ProjectiveReal, SectorAngles, validate_sector_angles
from .document import (
    DEFAULT_TOL,
    build_document,
    document_to_csv,
    document_to_json,
    parse_document,
    verify_document,
)
from .embed3d import closure_residual, post_examine
from .errors import NearDegenerate, OutOfRange, QuadrilateralInequality, SchemaError
from .relations import candidate_tuples

EXIT_OK = 0
EXIT_INVALID_ANGLES = 2
EXIT_NEAR_DEGENERATE = 3
EXIT_VERIFY_FAILED = 4
EXIT_SCHEMA = 5


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _parse_angles(args: argparse.Namespace) -> SectorAngles:
    vals = [args.alpha, args.beta, args.gamma, args.delta]
    if args.deg:
        vals = [math.radians(v) for v in vals]
    return validate_sector_angles(*vals)


def _cmd_classify(args: argparse.Namespace) -> int:
    try:
        angles = _parse_angles(args)
    except (OutOfRange, QuadrilateralInequality) as exc:
        print(f"invalid sector angles: {exc}", file=sys.stderr)
        return EXIT_INVALID_ANGLES
    vt = classify(angles)
    f = adjacent_coeffs(angles)
    g = opposite_coeffs(angles)
    h = diagonal_coeffs(angles)
    print(f"type: {vt.name}")
    print(f"orthodiagonal: {str(vt.orthodiagonal).lower()}")
    print(f"sigma: {_fmt(angles.sigma)}")
    print(f"adjacent coefficients: f22={_fmt(f.f22)} f20={_fmt(f.f20)} f11={_fmt(f.f11)} f02={_fmt(f.f02)} f00={_fmt(f.f00)}")
    print(f"opposite coefficients: g22={_fmt(g.g22)} g20={_fmt(g.g20)} g02={_fmt(g.g02)} g00={_fmt(g.g00)}")
    print(f"diagonal coefficients: h11={_fmt(h.h11)} h10={_fmt(h.h10)} h01={_fmt(h.h01)} h00={_fmt(h.h00)}")
    if vt.kind is VertexKind.ELLIPTIC:
        amp = amplitudes(angles)
        print(f"M: {_fmt(modulus_M(angles))}")
        for name, p in zip(("p_x", "p_y", "p_z", "p_w"), amp.as_tuple()):
            tag = f"{_fmt(p.real)}" if p.imag == 0.0 else f"{_fmt(p.imag)}i"
            print(f"{name}: {tag}")
    return EXIT_OK


def _write_out(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _cmd_sample(args: argparse.Namespace) -> int:
    try:
        angles = _parse_angles(args)
    except (OutOfRange, QuadrilateralInequality) as exc:
        print(f"invalid sector angles: {exc}", file=sys.stderr)
        return EXIT_INVALID_ANGLES
    try:
        doc = build_document(angles, n=args.n, tol=args.tol)
    except NearDegenerate as exc:
        print(f"near-degenerate elliptic input: {exc}", file=sys.stderr)
        return EXIT_NEAR_DEGENERATE
    text = document_to_csv(doc) if args.format == "csv" else document_to_json(doc)
    _write_out(text, args.out)
    return EXIT_OK


def _oracle_grid(args: argparse.Namespace) -> list[ProjectiveReal]:
    if args.x is not None:
        out = []
        for tok in args.x.split(","):
            tok = tok.strip()
            if not tok:
                continue
            out.append(ProjectiveReal.infinity() if tok == "inf" else ProjectiveReal.finite(float(tok)))
        return out
    n = args.n
    return [ProjectiveReal.finite(math.tan(0.5 * (-math.pi + 2.0 * math.pi * (i + 1) / (n + 1)))) for i in range(n)]


def _cmd_oracle(args: argparse.Namespace) -> int:
    try:
        angles = _parse_angles(args)
    except (OutOfRange, QuadrilateralInequality) as exc:
        print(f"invalid sector angles: {exc}", file=sys.stderr)
        return EXIT_INVALID_ANGLES
    points = []
    for x0 in _oracle_grid(args):
        survivors = post_examine(angles, list(candidate_tuples(angles, x0)), args.tol)
        for st in survivors:
            points.append(
                {
                    "x": "inf" if st.x.infinite else st.x.value,
                    "y": "inf" if st.y.infinite else st.y.value,
                    "z": "inf" if st.z.infinite else st.z.value,
                    "w": "inf" if st.w.infinite else st.w.value,
                    "closure_residual": closure_residual(angles, st),
                }
            )
    if args.format == "csv":
        lines = ["x,y,z,w,closure_residual"]
        for p in points:
            lines.append(",".join(str(p[k]) if isinstance(p[k], str) else _fmt(p[k]) for k in ("x", "y", "z", "w", "closure_residual")))
        _write_out("\n".join(lines) + "\n", args.out)
    else:
        _write_out(json.dumps({"angles": dict(zip(("alpha", "beta", "gamma", "delta"), angles.as_tuple())), "points": points}, indent=1), args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        text = Path(args.document).read_text()
    except OSError as exc:
        print(f"cannot read document: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    try:
        doc = parse_document(text)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    failures = verify_document(doc)
    if failures:
        for line in failures:
            print(line, file=sys.stderr)
        print(f"{len(failures)} failing samples", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    n = sum(len(b["samples"]) for b in doc["branches"])
    print(f"ok: {n} samples within tolerance")
    return EXIT_OK


def _add_angle_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("alpha", type=float)
    p.add_argument("beta", type=float)
    p.add_argument("gamma", type=float)
    p.add_argument("delta", type=float)
    p.add_argument("--deg", action="store_true", help="angles are in degrees (default radians)")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="spherilink", description="Spherical 4-bar linkage kinematics")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="vertex type, relation coefficients, elliptic data")
    _add_angle_args(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("sample", help="emit the sampled branch atlas")
    _add_angle_args(p)
    p.add_argument("--n", type=int, default=257, help="samples per branch")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("oracle", help="brute-force certified point cloud over an x grid")
    _add_angle_args(p)
    p.add_argument("--n", type=int, default=101, help="grid size (uniform in the x fold angle)")
    p.add_argument("--x", default=None, help="explicit comma-separated x values ('inf' allowed)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="recheck every sample of a branch document")
    p.add_argument("document")
    p.set_defaults(func=_cmd_verify)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
