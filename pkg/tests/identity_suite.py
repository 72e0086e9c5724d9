"""Numeric checks of the nine sector-angle identities used across the build.

Each item returns the maximum absolute error over the identity's equalities
at one angle tuple.  Item 9 presupposes the orthodiagonal relation.
"""

import math

from spherilink.core import SectorAngles


def _parts(angles: SectorAngles):
    a, b, c, d = angles.as_tuple()
    s = angles.sigma
    return a, b, c, d, s


def item1(angles):
    a, b, c, d, s = _parts(angles)
    return abs((s - a - b) + (s - c - d))


def item2(angles):
    a, b, c, d, s = _parts(angles)
    base = math.sin(s - a) * math.sin(s - b) - math.sin(a) * math.sin(b)
    others = [
        0.5 * (math.cos(a + b) - math.cos(c + d)),
        math.sin(s) * math.sin(s - a - b),
        -math.sin(s) * math.sin(s - c - d),
        math.sin(c) * math.sin(d) - math.sin(s - c) * math.sin(s - d),
    ]
    return max(abs(base - o) for o in others)


def item3(angles):
    a, b, c, d, s = _parts(angles)
    base = math.sin(s - a) * math.sin(s - b) - math.sin(c) * math.sin(d)
    others = [
        0.5 * (math.cos(a - b) - math.cos(c - d)),
        math.sin(s - a - c) * math.sin(s - b - c),
        -math.sin(s - c - a) * math.sin(s - d - a),
        math.sin(a) * math.sin(b) - math.sin(s - c) * math.sin(s - d),
    ]
    return max(abs(base - o) for o in others)


def item4(angles):
    a, b, c, d, s = _parts(angles)
    e1 = abs(
        math.sin(a) * math.sin(b)
        + math.sin(c) * math.sin(d)
        - math.sin(s - a) * math.sin(s - b)
        - math.sin(s - c) * math.sin(s - d)
    )
    lhs = (
        math.sin(a) * math.sin(b) * math.sin(c) * math.sin(d)
        - math.sin(s - a) * math.sin(s - b) * math.sin(s - c) * math.sin(s - d)
    )
    rhs = math.sin(s) * math.sin(s - a - b) * math.sin(s - a - c) * math.sin(s - b - c)
    return max(e1, abs(lhs - rhs))


def item5(angles):
    a, b, c, d, s = _parts(angles)
    base = math.cos(s - a) * math.cos(s - b) - math.cos(a) * math.cos(b)
    others = [
        0.5 * (-math.cos(a + b) + math.cos(c + d)),
        -math.sin(s) * math.sin(s - a - b),
        math.sin(s) * math.sin(s - c - d),
        math.cos(c) * math.cos(d) - math.cos(s - c) * math.cos(s - d),
    ]
    return max(abs(base - o) for o in others)


def item6(angles):
    a, b, c, d, s = _parts(angles)
    base = math.cos(s - a) * math.cos(s - b) - math.cos(c) * math.cos(d)
    others = [
        0.5 * (math.cos(a - b) - math.cos(c - d)),
        math.sin(s - a - c) * math.sin(s - b - c),
        math.cos(a) * math.cos(b) - math.cos(s - c) * math.cos(s - d),
    ]
    e2 = abs(
        math.cos(a) * math.cos(b)
        + math.cos(c) * math.cos(d)
        - math.cos(s - a) * math.cos(s - b)
        - math.cos(s - c) * math.cos(s - d)
    )
    return max(max(abs(base - o) for o in others), e2)


def item7(angles):
    a, b, c, d, s = _parts(angles)
    lhs = (math.cos(s - a) - math.cos(s - b)) * (math.cos(s - c) - math.cos(s - d))
    rhs = (math.cos(a) - math.cos(b)) * (math.cos(c) - math.cos(d))
    return abs(lhs - rhs)


def item8(angles):
    a, b, c, d, s = _parts(angles)
    e1 = abs(
        math.sin(a) * math.sin(b)
        - math.sin(c) * math.sin(d)
        - (math.cos(s - a) * math.cos(s - b) - math.cos(s - c) * math.cos(s - d))
    )
    e2 = abs(
        math.cos(a) * math.cos(b)
        - math.cos(c) * math.cos(d)
        - (math.sin(s - a) * math.sin(s - b) - math.sin(s - c) * math.sin(s - d))
    )
    return max(e1, e2)


def item9(angles):
    """Orthodiagonal identities; valid when cos a cos c = cos b cos d."""
    a, b, c, d, s = _parts(angles)
    cb2 = 2.0 * math.cos(b)
    errs = [
        math.sin(s - b) * math.sin(s - b - d) - math.sin(b - a) * math.sin(b - c) / cb2,
        math.sin(s - a) * math.sin(s - a - d) - math.sin(b - a) * math.sin(b + c) / cb2,
        math.sin(s - c) * math.sin(s - c - d) - math.sin(b + a) * math.sin(b - c) / cb2,
        math.sin(s) * math.sin(s - d) - math.sin(b + a) * math.sin(b + c) / cb2,
        math.sin(s - a) * math.sin(s - c)
        - 0.5 * (math.sin(a) * math.sin(c) + math.sin(b) * math.sin(d)),
        math.sin(s - a) * math.sin(s - c) - math.sin(s - b) * math.sin(s - d),
    ]
    return max(abs(e) for e in errs)


ALL_ITEMS = [item1, item2, item3, item4, item5, item6, item7, item8]
