"""Spherical 4-bar linkage (degree-4 rigid origami vertex) kinematics.

Classify a vertex from its sector angles, enumerate every branch of its real
configuration space in half-angle tangent coordinates, and certify states
with an independent 3D closure check.
"""

from .analysis import GrashofReport, conjugate, grashof, self_intersects, strip_switch
from .branches import (
    Branch,
    BranchKind,
    InfinitySolution,
    PhaseShift,
    branch_state,
    branch_states_at_x,
    enumerate_branches,
    phase_shifts,
    sample_branch,
    sample_params,
    solutions_at_infinity,
)
from .classify import (
    Amplitudes,
    FCoeffs,
    GCoeffs,
    HCoeffs,
    VertexKind,
    VertexType,
    adjacent_coeffs,
    amplitudes,
    classify,
    diagonal_coeffs,
    modulus_M,
    opposite_coeffs,
)
from .core import (
    INF,
    FoldAngles,
    FoldTangents,
    ProjectiveReal,
    SectorAngles,
    semi_perimeter,
    signed_sqrt,
    tan_half,
    validate_sector_angles,
)
from .elliptic import EllipticContext, JacobiTriple, ShiftedArgument, complete_K, dc, dc_inverse, jacobi, jacobi_shifted
from .embed3d import Configuration3D, build_embedding, closure_residual, post_examine
from .relations import (
    CandidateSet,
    Diagonals,
    RootPair,
    candidate_tuples,
    cayley_menger_residual,
    diagonal_u,
    diagonal_v,
    eval_adjacent,
    eval_opposite,
    solve_w,
    solve_y,
    solve_z,
)

__version__ = "0.1.0"

__all__ = [
    "Amplitudes", "Branch", "BranchKind", "CandidateSet", "Configuration3D",
    "Diagonals", "EllipticContext", "FCoeffs", "FoldAngles", "FoldTangents",
    "GCoeffs", "GrashofReport", "HCoeffs", "INF", "InfinitySolution",
    "JacobiTriple", "PhaseShift", "ProjectiveReal", "RootPair", "SectorAngles",
    "ShiftedArgument", "VertexKind", "VertexType", "adjacent_coeffs",
    "amplitudes", "branch_state", "branch_states_at_x", "build_embedding",
    "candidate_tuples", "cayley_menger_residual", "classify", "closure_residual",
    "complete_K", "conjugate", "dc", "dc_inverse", "diagonal_coeffs",
    "diagonal_u", "diagonal_v", "enumerate_branches", "eval_adjacent",
    "eval_opposite", "grashof", "jacobi", "jacobi_shifted", "modulus_M",
    "opposite_coeffs", "phase_shifts", "post_examine", "sample_branch",
    "sample_params", "self_intersects", "semi_perimeter", "signed_sqrt",
    "solutions_at_infinity", "solve_w", "solve_y", "solve_z", "strip_switch",
    "tan_half", "validate_sector_angles",
]
