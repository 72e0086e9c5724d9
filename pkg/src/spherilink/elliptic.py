"""Jacobi elliptic toolkit: K(k), sn/cn/dn, quarter-shifted imaginary arguments.

Everything is built on the arithmetic-geometric mean: K by direct AGM,
sn/cn/dn by the descending Landen recursion sharing the same scale, and
values at t = j*K + i*s by composing the imaginary modulus transformation
with exact quarter-period shifts.  No general complex addition formulas are
evaluated; the quarter-shifted family is all the branch parametrizations need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ModulusOutOfRange, PoleProximity

_AGM_EPS = 4e-16  # just above double epsilon; AGM converges quadratically
_AGM_MAX_ITER = 40
_POLE_EPS = 1e-13


def _agm(a: float, b: float) -> float:
    for _ in range(_AGM_MAX_ITER):
        if abs(a - b) <= _AGM_EPS * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def complete_K(k: float) -> float:
    """Complete elliptic integral of the first kind, by AGM.

    K(0) = pi/2; K increases monotonically and diverges as k -> 1.
    """
    if not 0.0 <= k < 1.0:
        raise ModulusOutOfRange(f"modulus k = {k!r} outside [0, 1)")
    return math.pi / (2.0 * _agm(1.0, math.sqrt((1.0 - k) * (1.0 + k))))


@dataclass(frozen=True, slots=True)
class JacobiTriple:
    sn: complex
    cn: complex
    dn: complex

    def as_tuple(self) -> tuple[complex, complex, complex]:
        return (self.sn, self.cn, self.dn)


@dataclass(frozen=True, slots=True)
class ShiftedArgument:
    """Argument t = quarter_multiple * K + i * s on a quarter-shifted line."""

    quarter_multiple: int
    s: float


@dataclass(frozen=True, slots=True)
class EllipticContext:
    """Modulus pair and quarter periods for one linkage parametrization.

    k = 0 is allowed (trigonometric limit); its complementary quarter period
    is infinite.
    """

    k: float
    k_prime: float
    K: float
    K_prime: float

    @staticmethod
    def from_modulus(k: float) -> "EllipticContext":
        if not 0.0 <= k < 1.0:
            raise ModulusOutOfRange(f"modulus k = {k!r} outside [0, 1)")
        kp = math.sqrt((1.0 - k) * (1.0 + k))
        big_k = complete_K(k)
        big_kp = math.inf if k == 0.0 else complete_K(kp)
        return EllipticContext(k=k, k_prime=kp, K=big_k, K_prime=big_kp)


def jacobi(u: float, k: float) -> JacobiTriple:
    """Real-argument sn, cn, dn by the descending Landen (AGM) recursion.

    Valid for any real u (reduced modulo the period 4K first) and k in [0, 1];
    the k = 0 and k = 1 limits are exact trigonometric/hyperbolic forms.
    """
    if k < 0.0 or k > 1.0:
        raise ModulusOutOfRange(f"modulus k = {k!r} outside [0, 1]")
    if k == 0.0:
        return JacobiTriple(complex(math.sin(u)), complex(math.cos(u)), complex(1.0))
    if k == 1.0:
        sech = 1.0 / math.cosh(u)
        return JacobiTriple(complex(math.tanh(u)), complex(sech), complex(sech))

    kp = math.sqrt((1.0 - k) * (1.0 + k))
    big_k = math.pi / (2.0 * _agm(1.0, kp))
    # IEEE remainder keeps the reduction exact in the given double 4K.
    u = math.remainder(u, 4.0 * big_k)

    a_seq: list[float] = []
    c_seq: list[float] = []
    a, b, c = 1.0, kp, k
    for _ in range(_AGM_MAX_ITER):
        a_seq.append(a)
        c_seq.append(c)
        if abs(c) <= _AGM_EPS * a:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
    else:
        a_seq.append(a)
        c_seq.append(c)

    n = len(a_seq) - 1
    phi = (2.0**n) * a_seq[n] * u
    for i in range(n, 0, -1):
        arg = c_seq[i] / a_seq[i] * math.sin(phi)
        phi = 0.5 * (phi + math.asin(max(-1.0, min(1.0, arg))))

    sn = math.sin(phi)
    cn = math.cos(phi)
    # dn = sqrt(k'^2 + k^2 cn^2) avoids cancellation near sn = +-1.
    dn = math.sqrt(kp * kp + k * k * cn * cn)
    return JacobiTriple(complex(sn), complex(cn), complex(dn))


def _shift_quarter(t: JacobiTriple, k_prime: float) -> JacobiTriple:
    """Exact quarter-period shift: (sn, cn, dn)(u + K) from values at u."""
    sn, cn, dn = t.as_tuple()
    return JacobiTriple(cn / dn, -k_prime * sn / dn, k_prime / dn)


def jacobi_shifted(arg: ShiftedArgument, ctx: EllipticContext) -> JacobiTriple:
    """sn, cn, dn at t = j*K + i*s (complex-valued in general).

    The value at i*s comes from the imaginary modulus transformation of the
    real-argument functions at modulus k'; the j quarter shifts are then
    applied exactly.  Points with cn(s; k') ~ 0 are poles of the whole triple
    and are rejected rather than returned as large finite values.
    """
    base = jacobi(arg.s, ctx.k_prime)
    c1 = base.cn.real
    if abs(c1) < _POLE_EPS:
        raise PoleProximity(f"cn(s; k') = {c1!r} within {_POLE_EPS} of a pole (s = {arg.s!r})")
    s1, d1 = base.sn.real, base.dn.real
    triple = JacobiTriple(complex(0.0, s1 / c1), complex(1.0 / c1, 0.0), complex(d1 / c1, 0.0))
    for _ in range(arg.quarter_multiple % 4):
        triple = _shift_quarter(triple, ctx.k_prime)
    return triple


def dc(u: float, k: float) -> float:
    """dn(u; k) / cn(u; k) for real u."""
    t = jacobi(u, k)
    return t.dn.real / t.cn.real


def dc_inverse(v: float, k: float) -> float:
    """The unique theta in [0, K(k)) with dn(theta)/cn(theta) = v, for v >= 1.

    dc maps [0, K) monotonically onto [1, inf); bracketed bisection gives a
    safe start and Newton steps (d dc/du = k'^2 sn / cn^2) polish it.
    """
    if v < 1.0 - 1e-12:
        raise DomainError(f"dc_inverse requires v >= 1, got {v!r}")
    if v <= 1.0:
        return 0.0
    if not 0.0 <= k < 1.0:
        raise ModulusOutOfRange(f"modulus k = {k!r} outside [0, 1)")
    big_k = complete_K(k)
    kp2 = (1.0 - k) * (1.0 + k)

    lo, hi = 0.0, big_k * (1.0 - 1e-15)
    while dc(hi, k) < v:  # guard: v may exceed dc at the clipped endpoint
        hi = 0.5 * (hi + big_k)
        if big_k - hi < 1e-300:
            return hi
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if dc(mid, k) < v:
            lo = mid
        else:
            hi = mid
    theta = 0.5 * (lo + hi)
    for _ in range(4):
        t = jacobi(theta, k)
        sn, cn, dn = t.sn.real, t.cn.real, t.dn.real
        if abs(sn) < 1e-14 or abs(cn) < 1e-14:
            break
        step = (dn / cn - v) * cn * cn / (kp2 * sn)
        theta = min(max(theta - step, 0.0), big_k * (1.0 - 1e-15))
    return theta
