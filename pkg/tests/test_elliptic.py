import math

import numpy as np
import pytest
from scipy import integrate, special

from spherilink.elliptic import (
    EllipticContext,
    ShiftedArgument,
    complete_K,
    dc,
    dc_inverse,
    jacobi,
    jacobi_shifted,
)
from spherilink.errors import DomainError, ModulusOutOfRange, PoleProximity

PI = math.pi


class TestCompleteK:
    def test_k0(self):
        assert complete_K(0.0) == pytest.approx(PI / 2, abs=1e-14)

    def test_k1_rejected(self):
        with pytest.raises(ModulusOutOfRange):
            complete_K(1.0)
        with pytest.raises(ModulusOutOfRange):
            complete_K(-0.2)

    def test_monotone(self):
        ks = np.linspace(0, 0.999, 40)
        vals = [complete_K(k) for k in ks]
        assert all(b > a for a, b in zip(vals, vals[1:]))

    @pytest.mark.parametrize("k", [0.05, 0.3, 0.6, 0.9, 0.99, 0.999])
    def test_quadrature_oracle(self, k):
        # independent check: adaptive quadrature of the defining integral
        val, err = integrate.quad(lambda t: 1.0 / math.sqrt(1 - (k * math.sin(t)) ** 2), 0, PI / 2, epsabs=1e-14, epsrel=1e-13)
        assert complete_K(k) == pytest.approx(val, rel=1e-12)


class TestJacobi:
    def test_k0_trig(self, rng):
        for u in rng.uniform(-7, 7, 20):
            t = jacobi(u, 0.0)
            assert t.sn.real == pytest.approx(math.sin(u), abs=1e-15)
            assert t.cn.real == pytest.approx(math.cos(u), abs=1e-15)
            assert t.dn.real == 1.0

    def test_k1_hyperbolic(self, rng):
        for u in rng.uniform(-5, 5, 20):
            t = jacobi(u, 1.0)
            assert t.sn.real == pytest.approx(math.tanh(u), abs=1e-12)
            assert t.cn.real == pytest.approx(1 / math.cosh(u), abs=1e-12)
            assert t.dn.real == pytest.approx(1 / math.cosh(u), abs=1e-12)

    def test_quarter_period_values(self):
        for k in (0.2, 0.5, 0.8, 0.95):
            big_k = complete_K(k)
            t = jacobi(big_k, k)
            assert t.sn.real == pytest.approx(1.0, abs=1e-12)
            assert t.cn.real == pytest.approx(0.0, abs=1e-12)
            assert t.dn.real == pytest.approx(math.sqrt(1 - k * k), abs=1e-12)

    def test_identity_grid(self):
        # sn^2+cn^2 = 1 and k^2 sn^2 + dn^2 = 1 over a 10^4-point grid
        ks = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99]
        worst = 0.0
        for k in ks:
            big_k = complete_K(k)
            for u in np.linspace(-4 * big_k, 4 * big_k, 1000):
                sn, cn, dn = (c.real for c in jacobi(u, k).as_tuple())
                worst = max(worst, abs(sn * sn + cn * cn - 1), abs(k * k * sn * sn + dn * dn - 1))
        assert worst < 1e-12

    def test_periodicity(self, rng):
        for _ in range(50):
            k = rng.uniform(0.05, 0.95)
            big_k = complete_K(k)
            u = rng.uniform(-2 * big_k, 2 * big_k)
            t1, t2 = jacobi(u, k), jacobi(u + 4 * big_k, k)
            assert t1.sn.real == pytest.approx(t2.sn.real, abs=1e-12)
            assert t1.cn.real == pytest.approx(t2.cn.real, abs=1e-12)
            assert t1.dn.real == pytest.approx(t2.dn.real, abs=1e-12)
            t3 = jacobi(u + 2 * big_k, k)
            assert t3.sn.real == pytest.approx(-t1.sn.real, abs=1e-12)
            assert t3.dn.real == pytest.approx(t1.dn.real, abs=1e-12)

    def test_addition_formulas(self, rng):
        for _ in range(200):
            k = rng.uniform(0.05, 0.95)
            x, y = rng.uniform(-3, 3, 2)
            sx, cx, dx = (c.real for c in jacobi(x, k).as_tuple())
            sy, cy, dy = (c.real for c in jacobi(y, k).as_tuple())
            den = 1 - (k * sx * sy) ** 2
            want = jacobi(x + y, k)
            assert want.sn.real == pytest.approx((sx * cy * dy + sy * cx * dx) / den, abs=1e-11)
            assert want.cn.real == pytest.approx((cx * cy - sx * sy * dx * dy) / den, abs=1e-11)
            assert want.dn.real == pytest.approx((dx * dy - k * k * sx * sy * cx * cy) / den, abs=1e-11)

    def test_against_scipy(self, rng):
        for _ in range(300):
            k = rng.uniform(0.01, 0.99)
            u = rng.uniform(-8, 8)
            mine = jacobi(u, k)
            sn, cn, dn, _ = special.ellipj(u, k * k)
            assert mine.sn.real == pytest.approx(sn, abs=5e-13)
            assert mine.cn.real == pytest.approx(cn, abs=5e-13)
            assert mine.dn.real == pytest.approx(dn, abs=5e-13)


class TestJacobiShifted:
    def test_at_origin(self):
        # dn(0) = 1 is forced by k^2 sn^2 + dn^2 = 1
        ctx = EllipticContext.from_modulus(0.6)
        t = jacobi_shifted(ShiftedArgument(0, 0.0), ctx)
        assert t.sn == 0.0
        assert t.cn == 1.0
        assert t.dn == 1.0

    def test_continuity_at_axis(self):
        ctx = EllipticContext.from_modulus(0.6)
        t = jacobi_shifted(ShiftedArgument(0, 1e-9), ctx)
        assert abs(t.sn - 0.0) < 1e-8
        assert abs(t.cn - 1.0) < 1e-8
        assert abs(t.dn - 1.0) < 1e-8

    def test_imaginary_transformation(self, rng):
        for _ in range(50):
            k = rng.uniform(0.1, 0.9)
            ctx = EllipticContext.from_modulus(k)
            s = rng.uniform(0.01, 0.8) * ctx.K_prime
            base = jacobi(s, ctx.k_prime)
            t = jacobi_shifted(ShiftedArgument(0, s), ctx)
            assert abs(t.sn - 1j * base.sn.real / base.cn.real) < 1e-12 * (1 + abs(t.sn))
            assert abs(t.cn - 1.0 / base.cn.real) < 1e-12 * (1 + abs(t.cn))
            assert abs(t.dn - base.dn.real / base.cn.real) < 1e-12 * (1 + abs(t.dn))

    def test_quarter_shift_against_formula(self):
        # cn(K + i s) = -i k' sn(s; k')/dn(s; k')
        ctx = EllipticContext.from_modulus(0.7)
        s = 0.4
        base = jacobi(s, ctx.k_prime)
        t = jacobi_shifted(ShiftedArgument(1, s), ctx)
        want = -1j * ctx.k_prime * base.sn.real / base.dn.real
        assert abs(t.cn - want) < 1e-13
        assert t.cn.real == pytest.approx(0.0, abs=1e-15)  # purely imaginary

    def test_two_quarter_shift_negates_cn(self):
        ctx = EllipticContext.from_modulus(0.7)
        t0 = jacobi_shifted(ShiftedArgument(0, 0.3), ctx)
        t2 = jacobi_shifted(ShiftedArgument(2, 0.3), ctx)
        assert abs(t2.cn + t0.cn) < 1e-13

    def test_pole_rejected(self):
        ctx = EllipticContext.from_modulus(0.7)
        with pytest.raises(PoleProximity):
            jacobi_shifted(ShiftedArgument(0, ctx.K_prime), ctx)


class TestDcInverse:
    def test_v1(self):
        assert dc_inverse(1.0, 0.5) == 0.0

    def test_below_one_rejected(self):
        with pytest.raises(DomainError):
            dc_inverse(0.9, 0.5)

    @pytest.mark.parametrize("k", [0.1, 0.3, 0.5, 0.7, 0.9])
    def test_half_quarter_identity(self, k):
        # dc(K/2; k) = sqrt(1 + k')
        kp = math.sqrt(1 - k * k)
        big_k = complete_K(k)
        assert dc(big_k / 2, k) == pytest.approx(math.sqrt(1 + kp), abs=1e-10)
        assert dc_inverse(math.sqrt(1 + kp), k) == pytest.approx(big_k / 2, abs=1e-11)

    def test_roundtrip(self, rng):
        for _ in range(100):
            k = rng.uniform(0.05, 0.95)
            big_k = complete_K(k)
            theta = rng.uniform(1e-5, 0.999) * big_k
            assert dc_inverse(dc(theta, k), k) == pytest.approx(theta, abs=1e-11)
