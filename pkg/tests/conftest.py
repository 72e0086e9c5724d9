import math

import numpy as np
import pytest

from spherilink.classify import VertexKind, classify, modulus_M
from spherilink.core import validate_sector_angles

PI = math.pi

# one tuple per vertex type (plus extra variants), used across the suite
FIXTURES = [
    ("square", (PI / 2, PI / 2, PI / 2, PI / 2), VertexKind.SQUARE),
    ("rhombus", (PI / 3, PI / 3, PI / 3, PI / 3), VertexKind.RHOMBUS),
    ("cross", (PI / 3, 2 * PI / 3, PI / 3, 2 * PI / 3), VertexKind.CROSS),
    ("miura_i", (PI / 3, 2 * PI / 3, 2 * PI / 3, PI / 3), VertexKind.MIURA_I),
    ("miura_ii", (PI / 3, PI / 3, 2 * PI / 3, 2 * PI / 3), VertexKind.MIURA_II),
    ("isogram", (PI / 3, PI / 6, PI / 3, PI / 6), VertexKind.ISOGRAM),
    ("anti_isogram", (PI / 3, PI / 6, 2 * PI / 3, 5 * PI / 6), VertexKind.ANTI_ISOGRAM),
    ("deltoid_i", (PI / 3, PI / 6, PI / 6, PI / 3), VertexKind.DELTOID_I),
    ("anti_deltoid_i", (PI / 3, PI / 6, 5 * PI / 6, 2 * PI / 3), VertexKind.ANTI_DELTOID_I),
    ("anti_deltoid_i_b", (PI / 6, PI / 3, 2 * PI / 3, 5 * PI / 6), VertexKind.ANTI_DELTOID_I),
    ("deltoid_ii", (PI / 3, PI / 3, PI / 6, PI / 6), VertexKind.DELTOID_II),
    ("deltoid_ii_b", (PI / 6, PI / 6, PI / 3, PI / 3), VertexKind.DELTOID_II),
    ("anti_deltoid_ii", (2 * PI / 3, PI / 3, PI / 6, 5 * PI / 6), VertexKind.ANTI_DELTOID_II),
    ("conic_i", (PI / 6, PI / 4, PI / 3, PI / 4), VertexKind.CONIC_I),
    ("conic_ii", (PI / 6, PI / 3, PI / 4, 5 * PI / 12), VertexKind.CONIC_II),
    ("conic_iii", (PI / 6, PI / 3, PI / 4, PI / 4), VertexKind.CONIC_III),
    ("conic_iv", (0.7, 1.1, 1.9, 2 * PI - 3.7), VertexKind.CONIC_IV),
    ("elliptic_ortho", (1.0, 0.9, 1.2, math.acos(math.cos(1.0) * math.cos(1.2) / math.cos(0.9))), VertexKind.ELLIPTIC),
    ("elliptic_near_sq", (PI / 3, PI / 2, 2 * PI / 5, PI / 4), VertexKind.ELLIPTIC),
    ("elliptic_m_big", (2.4, 1.0, 1.3, 0.8), VertexKind.ELLIPTIC),
]

assert len(FIXTURES) == 20


def fixture_angles(name):
    for n, tup, _ in FIXTURES:
        if n == name:
            return validate_sector_angles(*tup)
    raise KeyError(name)


def random_valid_angles(rng, n):
    """n uniformly sampled valid sector-angle tuples."""
    out = []
    while len(out) < n:
        t = rng.uniform(0.05, PI - 0.05, 4)
        try:
            out.append(validate_sector_angles(*t))
        except Exception:
            continue
    return out


def random_elliptic_angles(rng, n, m_margin=1e-3, lo=0.15):
    out = []
    while len(out) < n:
        t = rng.uniform(lo, PI - lo, 4)
        try:
            ang = validate_sector_angles(*t)
        except Exception:
            continue
        if classify(ang).kind is not VertexKind.ELLIPTIC:
            continue
        if abs(modulus_M(ang) - 1.0) < m_margin:
            continue
        out.append(ang)
    return out


def random_orthodiagonal_angles(rng, n):
    """Elliptic tuples with cos(a)cos(c) = cos(b)cos(d)."""
    out = []
    while len(out) < n:
        a, b, c = rng.uniform(0.3, PI - 0.3, 3)
        cd = math.cos(a) * math.cos(c) / math.cos(b)
        if abs(cd) >= 0.999:
            continue
        d = math.acos(cd)
        try:
            ang = validate_sector_angles(a, b, c, d)
        except Exception:
            continue
        if classify(ang).kind is not VertexKind.ELLIPTIC:
            continue
        if abs(modulus_M(ang) - 1.0) < 1e-4:
            continue
        out.append(ang)
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
