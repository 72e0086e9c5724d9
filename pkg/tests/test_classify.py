import math

import numpy as np
import pytest

from conftest import FIXTURES, fixture_angles, random_orthodiagonal_angles, random_valid_angles
from spherilink.analysis import conjugate
from spherilink.classify import (
    VertexKind,
    adjacent_coeffs,
    amplitudes,
    classify,
    diagonal_coeffs,
    modulus_M,
    opposite_coeffs,
)
from spherilink.core import validate_sector_angles
from spherilink.errors import NotElliptic

PI = math.pi


@pytest.mark.parametrize("name,tup,kind", FIXTURES)
def test_fixture_classification(name, tup, kind):
    assert classify(validate_sector_angles(*tup)).kind is kind


def test_conic_i_example():
    assert classify(validate_sector_angles(PI / 6, PI / 4, PI / 3, PI / 4)).kind is VertexKind.CONIC_I


def test_elliptic_example_not_orthodiagonal():
    vt = classify(validate_sector_angles(PI / 3, PI / 2, 2 * PI / 5, PI / 4))
    assert vt.kind is VertexKind.ELLIPTIC and not vt.orthodiagonal


def test_orthodiagonal_flag(rng):
    for ang in random_orthodiagonal_angles(rng, 5):
        assert classify(ang).orthodiagonal


class TestAdjacentCoeffs:
    def test_square_zero_pattern(self):
        f = adjacent_coeffs(fixture_angles("square"))
        assert abs(f.f22) < 1e-15 and abs(f.f20) < 1e-15 and abs(f.f02) < 1e-15 and abs(f.f00) < 1e-15
        assert f.f11 == pytest.approx(-1.0, abs=1e-15)

    def test_isogram_zero_pattern(self):
        f = adjacent_coeffs(fixture_angles("isogram"))
        assert abs(f.f20) < 1e-15 and abs(f.f02) < 1e-15
        assert abs(f.f22) > 1e-3 and abs(f.f00) > 1e-3

    def test_cosine_form_equivalence(self, rng):
        # each coefficient equals -1/2 of the matching cosine-difference coefficient
        for ang in random_valid_angles(rng, 300):
            a, b, c, d = ang.as_tuple()
            f = adjacent_coeffs(ang)
            pairs = [
                (f.f22, math.cos(a - b + c) - math.cos(d)),
                (f.f20, math.cos(a - b - c) - math.cos(d)),
                (2 * f.f11, 4 * math.sin(a) * math.sin(c)),
                (f.f02, math.cos(a + b - c) - math.cos(d)),
                (f.f00, math.cos(a + b + c) - math.cos(d)),
            ]
            for got, cosine_coeff in pairs:
                assert abs(got - (-0.5) * cosine_coeff) < 1e-13


class TestOppositeCoeffs:
    def test_square(self):
        g = opposite_coeffs(fixture_angles("square"))
        assert abs(g.g22) < 1e-15 and abs(g.g00) < 1e-15
        assert g.g20 == pytest.approx(1.0, abs=1e-15)
        assert g.g02 == pytest.approx(-1.0, abs=1e-15)

    def test_rhombus(self):
        g = opposite_coeffs(fixture_angles("rhombus"))
        s2 = math.sin(PI / 3) ** 2
        assert g.g20 == pytest.approx(s2, abs=1e-15)
        assert g.g02 == pytest.approx(-s2, abs=1e-15)
        assert abs(g.g22) < 1e-15 and abs(g.g00) < 1e-15

    def test_sign_invariants(self, rng):
        for ang in random_valid_angles(rng, 300):
            g = opposite_coeffs(ang)
            assert g.g20 > 0.0
            assert g.g02 < 0.0

    def test_product_identity(self, rng):
        # g22*g00 - g20*g02 collapses to the product of the four sector sines
        for ang in random_valid_angles(rng, 100):
            a, b, c, d = ang.as_tuple()
            g = opposite_coeffs(ang)
            lhs = g.g22 * g.g00 - g.g20 * g.g02
            rhs = math.sin(a) * math.sin(b) * math.sin(c) * math.sin(d)
            assert lhs == pytest.approx(rhs, abs=1e-13)


class TestDiagonalCoeffs:
    def test_square(self):
        h = diagonal_coeffs(fixture_angles("square"))
        assert h.h11 == pytest.approx(4.0, abs=1e-15)
        assert abs(h.h10) < 1e-15 and abs(h.h01) < 1e-15 and abs(h.h00) < 1e-15

    def test_rhombus(self):
        h = diagonal_coeffs(fixture_angles("rhombus"))
        assert h.h11 == pytest.approx(4 - 4 * math.cos(PI / 3) ** 2, abs=1e-15)
        assert abs(h.h10) < 1e-15 and abs(h.h01) < 1e-15 and abs(h.h00) < 1e-15

    def test_conjugate_invariance(self, rng):
        for ang in random_valid_angles(rng, 200):
            h1 = diagonal_coeffs(ang)
            h2 = diagonal_coeffs(conjugate(ang))
            assert h1.h11 == pytest.approx(h2.h11, abs=1e-12)
            assert h1.h10 == pytest.approx(h2.h10, abs=1e-12)
            assert h1.h01 == pytest.approx(h2.h01, abs=1e-12)
            assert h1.h00 == pytest.approx(h2.h00, abs=1e-12)


class TestModulusM:
    def test_not_elliptic_raises(self):
        with pytest.raises(NotElliptic):
            modulus_M(fixture_angles("square"))

    def test_orthodiagonal_below_one(self, rng):
        for ang in random_orthodiagonal_angles(rng, 5):
            assert modulus_M(ang) < 1.0

    def test_orthodiagonal_complement_formula(self, rng):
        # 1 - M = ((sin a sin c - sin b sin d)/(sin a sin c + sin b sin d))^2
        for ang in random_orthodiagonal_angles(rng, 5):
            a, b, c, d = ang.as_tuple()
            ac = math.sin(a) * math.sin(c)
            bd = math.sin(b) * math.sin(d)
            assert 1.0 - modulus_M(ang) == pytest.approx(((ac - bd) / (ac + bd)) ** 2, abs=1e-12)

    def test_max_min_criterion(self):
        ang = fixture_angles("elliptic_near_sq")
        m = modulus_M(ang)
        vals = ang.as_tuple()
        mpm = max(vals) + min(vals)
        # max+min > sigma  <=>  sign(pi - sigma) * (M - 1) > 0
        assert (mpm > ang.sigma) == (math.copysign(1, PI - ang.sigma) * (m - 1.0) > 0)

    def test_conjugate_inverts_M(self, rng):
        # the defining ratio swaps numerator and denominator under conjugation,
        # so M -> 1/M while the induced elliptic modulus k is preserved
        from conftest import random_elliptic_angles

        for ang in random_elliptic_angles(rng, 10):
            m = modulus_M(ang)
            mc = modulus_M(conjugate(ang))
            assert mc == pytest.approx(1.0 / m, rel=1e-10)
            k1 = math.sqrt(1 - 1 / m) if m > 1 else math.sqrt(1 - m)
            k2 = math.sqrt(1 - 1 / mc) if mc > 1 else math.sqrt(1 - mc)
            assert k1 == pytest.approx(k2, abs=1e-12)

    def test_classification_preserved_under_conjugation(self, rng):
        from conftest import random_elliptic_angles

        for ang in random_elliptic_angles(rng, 10):
            assert classify(conjugate(ang)).kind is VertexKind.ELLIPTIC


class TestAmplitudes:
    def test_conic_i_px_imaginary(self):
        amp = amplitudes(fixture_angles("conic_i"))
        # sin(a) sin(b) = 0.3536 < sin(c) sin(d) = 0.6124, so p_x is imaginary
        assert amp.p_x.real == 0.0 and amp.p_x.imag > 0.0

    def test_values_real_or_positive_imaginary(self, rng):
        for ang in random_valid_angles(rng, 200):
            for p in amplitudes(ang).as_tuple():
                assert (p.imag == 0.0 and p.real >= 0.0) or (p.real == 0.0 and p.imag > 0.0)

    def test_opposite_pairs_alternate(self, rng):
        # exactly one of p_x, p_z is real and one imaginary (same for p_y, p_w)
        from conftest import random_elliptic_angles

        for ang in random_elliptic_angles(rng, 50):
            amp = amplitudes(ang)
            assert (amp.p_x.imag == 0.0) != (amp.p_z.imag == 0.0)
            assert (amp.p_y.imag == 0.0) != (amp.p_w.imag == 0.0)
