"""Kernel evaluation, roots, minima, and Bessel functions."""

import math
from itertools import combinations_with_replacement

import numpy as np
import pytest

from hidesign.orthopoly import (
    KernelSpec,
    bessel_first_zero,
    bessel_j,
    dim_harmonic,
    q_eval,
    q_min,
    q_roots,
)


def laplacian_kernel_dim(n_vars: int, degree: int) -> int:
    """Independent oracle for dim_harmonic: harmonic polynomials are the
    kernel of the Laplacian acting on homogeneous polynomials, so the
    dimension is (#monomials of the degree) - rank(Laplacian matrix)."""
    monos = list(combinations_with_replacement(range(n_vars), degree))
    lower = list(combinations_with_replacement(range(n_vars), degree - 2))
    lower_index = {m: i for i, m in enumerate(lower)}
    mat = np.zeros((len(lower), len(monos)))
    for j, mono in enumerate(monos):
        exps = [mono.count(v) for v in range(n_vars)]
        for v in range(n_vars):
            if exps[v] >= 2:
                e2 = exps.copy()
                e2[v] -= 2
                key = tuple(v2 for v2, e in enumerate(e2) for _ in range(e))
                mat[lower_index[key], j] += exps[v] * (exps[v] - 1)
    return len(monos) - np.linalg.matrix_rank(mat)


class TestDimHarmonic:
    def test_3_4_against_laplacian_rank(self):
        assert dim_harmonic(3, 4) == 9
        assert laplacian_kernel_dim(3, 4) == 9

    def test_circle_gives_two(self):
        for t in range(1, 20):
            assert dim_harmonic(2, t) == 2

    def test_4_58(self):
        assert dim_harmonic(4, 58) == 3481
        assert dim_harmonic(4, 58) == math.comb(61, 58) - math.comb(59, 56)

    def test_small_degrees(self):
        assert dim_harmonic(5, 0) == 1
        assert dim_harmonic(5, 1) == 5

    def test_rejects_low_dimension(self):
        with pytest.raises(ValueError):
            dim_harmonic(1, 3)


class TestQEval:
    def test_normalization_at_one(self):
        assert q_eval(KernelSpec(3, 4), 1.0) == pytest.approx(9.0, rel=1e-12)

    def test_value_at_zero_matches_explicit_polynomial(self):
        # Q_{3,4}(x) = (9/8)(35x^4 - 30x^2 + 3)
        explicit = lambda x: 9 / 8 * (35 * x**4 - 30 * x**2 + 3)
        assert q_eval(KernelSpec(3, 4), 0.0) == pytest.approx(27 / 8, rel=1e-14)
        for x in np.linspace(-1, 1, 17):
            assert q_eval(KernelSpec(3, 4), x) == pytest.approx(explicit(x), rel=1e-12, abs=1e-12)

    def test_degree_two_closed_form(self):
        # Q_{n,2}(x) = (n+2)/2 (n x^2 - 1)
        assert q_eval(KernelSpec(5, 2), 0.0) == pytest.approx(-3.5, rel=1e-14)
        for n in range(2, 9):
            for x in (-0.7, 0.0, 0.3, 1.0):
                expect = (n + 2) / 2 * (n * x * x - 1)
                assert q_eval(KernelSpec(n, 2), x) == pytest.approx(expect, rel=1e-12, abs=1e-12)

    def test_normalization_sweep(self):
        for n in range(2, 13):
            for t in range(1, 61):
                v = q_eval(KernelSpec(n, t), 1.0)
                assert abs(v - dim_harmonic(n, t)) <= 1e-12 * dim_harmonic(n, t)

    def test_parity(self):
        rng = np.random.default_rng(7)
        xs = rng.uniform(-1, 1, size=50)
        for n in (2, 3, 5, 8):
            for t in (1, 2, 5, 12):
                spec = KernelSpec(n, t)
                left = q_eval(spec, -xs)
                right = (-1) ** t * q_eval(spec, xs)
                np.testing.assert_allclose(left, right, rtol=1e-12, atol=1e-12)

    def test_boundedness(self):
        xs = np.linspace(-1, 1, 1000)
        for n in (2, 3, 6, 12):
            for t in (2, 9, 30, 60):
                spec = KernelSpec(n, t)
                assert np.abs(q_eval(spec, xs)).max() <= spec.dim * (1 + 1e-10)

    def test_vectorized_matches_scalar(self):
        spec = KernelSpec(4, 7)
        xs = np.linspace(-1, 1, 9)
        np.testing.assert_allclose(q_eval(spec, xs), [q_eval(spec, float(x)) for x in xs])


class TestQRoots:
    def test_3_4_closed_form(self):
        # positive roots sqrt((525 +- 70 sqrt(30))/1225)
        s30 = math.sqrt(30)
        expect = sorted([
            -math.sqrt((525 + 70 * s30) / 1225), -math.sqrt((525 - 70 * s30) / 1225),
            math.sqrt((525 - 70 * s30) / 1225), math.sqrt((525 + 70 * s30) / 1225),
        ])
        np.testing.assert_allclose(q_roots(KernelSpec(3, 4)), expect, atol=1e-12)

    def test_2_2_closed_form(self):
        np.testing.assert_allclose(
            q_roots(KernelSpec(2, 2)), [-math.sqrt(2) / 2, math.sqrt(2) / 2], atol=1e-12
        )

    def test_degree_two_roots(self):
        for n in range(2, 10):
            np.testing.assert_allclose(
                q_roots(KernelSpec(n, 2)), [-1 / math.sqrt(n), 1 / math.sqrt(n)], atol=1e-12
            )

    def test_residuals_and_ordering(self):
        for n in (2, 3, 4, 8, 12):
            for t in (1, 5, 20, 58):
                spec = KernelSpec(n, t)
                roots = q_roots(spec)
                assert len(roots) == t
                assert np.all(np.diff(roots) > 0)
                assert np.all(np.abs(roots) < 1)
                assert np.abs(q_eval(spec, roots)).max() < 1e-9 * spec.dim

    def test_interlacing(self):
        for n in (2, 3, 5, 9):
            for t in (1, 2, 7, 20):
                inner = q_roots(KernelSpec(n, t))
                outer = q_roots(KernelSpec(n, t + 1))
                assert np.all(outer[:-1] < inner) and np.all(inner < outer[1:])


class TestQMin:
    def test_3_4(self):
        rep = q_min(KernelSpec(3, 4))
        assert rep.c == pytest.approx(27 / 7, rel=1e-13)
        assert rep.argmin**2 == pytest.approx(3 / 7, rel=1e-12)
        assert rep.method == "derivative-roots"

    def test_circle_closed_form(self):
        for t in (1, 2, 17, 60):
            rep = q_min(KernelSpec(2, t))
            assert rep.c == 2.0
            assert rep.method == "chebyshev-closed-form"
            assert q_eval(KernelSpec(2, t), rep.argmin) == pytest.approx(-2.0, rel=1e-12)

    def test_degree_two(self):
        for n in range(3, 20):
            rep = q_min(KernelSpec(n, 2))
            assert rep.c == pytest.approx((n + 2) / 2, rel=1e-13)
            assert rep.argmin == pytest.approx(0.0, abs=1e-12)

    def test_degree_four_closed_form(self):
        for n in range(3, 30):
            rep = q_min(KernelSpec(n, 4))
            assert rep.c == pytest.approx(n * (n + 1) * (n + 6) / (4 * (n + 4)), rel=1e-12)
            assert rep.argmin**2 == pytest.approx(3 / (n + 4), rel=1e-10)

    def test_value_consistency(self):
        for n, t in [(3, 9), (5, 14), (10, 21)]:
            rep = q_min(KernelSpec(n, t))
            assert q_eval(KernelSpec(n, t), rep.argmin) == pytest.approx(-rep.c, rel=1e-12)

    def test_argmin_is_largest_derivative_root(self):
        # for even degrees (odd degrees bottom out at the endpoint -1)
        for n, t in [(3, 4), (4, 10), (7, 12), (5, 58)]:
            rep = q_min(KernelSpec(n, t))
            assert rep.argmin == pytest.approx(q_roots(KernelSpec(n + 2, t - 1)).max(), abs=1e-9)

    def test_odd_degree_minimum_at_endpoint(self):
        rep = q_min(KernelSpec(7, 13))
        assert rep.argmin == -1.0
        assert rep.c == pytest.approx(dim_harmonic(7, 13), rel=1e-12)


def series_bessel(alpha: float, z: float, terms: int = 60) -> float:
    """Ascending-series oracle, reliable for small z."""
    total = 0.0
    for k in range(terms):
        total += (-1) ** k * (z / 2) ** (2 * k + alpha) / (
            math.factorial(k) * math.gamma(k + alpha + 1)
        )
    return total


class TestBessel:
    def test_half_order_closed_form(self):
        for z in (0.5, 1.0, 2.0, math.pi, 10.0):
            expect = math.sqrt(2 / (math.pi * z)) * math.sin(z)
            assert bessel_j(0.5, z) == pytest.approx(expect, rel=1e-12, abs=1e-12)
        assert abs(bessel_j(0.5, math.pi)) < 1e-12

    def test_j0_at_zero(self):
        assert bessel_j(0.0, 0.0) == 1.0

    def test_against_ascending_series(self):
        for alpha in (0.0, 1.0, 2.5, 4.5):
            for z in (0.3, 1.7, 4.0, 7.5):
                assert bessel_j(alpha, z) == pytest.approx(series_bessel(alpha, z), rel=1e-10, abs=1e-13)

    def test_negative_argument_rejected(self):
        with pytest.raises(ValueError):
            bessel_j(1.0, -0.5)
        with pytest.raises(ValueError):
            bessel_j(-1.0, 0.5)

    def test_first_zero_half_order(self):
        assert bessel_first_zero(0.5) == pytest.approx(math.pi, abs=1e-10)

    def test_first_zero_j0_series_bisection_oracle(self):
        lo, hi = 2.0, 3.0
        flo = series_bessel(0.0, lo)
        for _ in range(60):
            mid = (lo + hi) / 2
            fm = series_bessel(0.0, mid)
            if (fm > 0) == (flo > 0):
                lo, flo = mid, fm
            else:
                hi = mid
        oracle = (lo + hi) / 2
        z0 = bessel_first_zero(0.0)
        assert z0 == pytest.approx(oracle, abs=1e-9)
        assert z0 == pytest.approx(2.404825557, abs=1e-9)
        assert abs(bessel_j(0.0, z0)) < 1e-9

    def test_first_zero_j1_with_derivative_identity(self):
        z1 = bessel_first_zero(1.0)
        assert z1 == pytest.approx(3.831705970, abs=1e-9)
        # d/dz (z J_1(z)) = z J_0(z), checked by central differences
        h = 1e-6
        for z in (0.8, 2.0, z1):
            lhs = ((z + h) * bessel_j(1.0, z + h) - (z - h) * bessel_j(1.0, z - h)) / (2 * h)
            assert lhs == pytest.approx(z * bessel_j(0.0, z), rel=1e-7, abs=1e-8)


class TestMehlerHeine:
    def test_scaled_kernel_converges_to_bessel(self):
        # alpha = (n-3)/2 = 0 for n = 3; renormalize Q to P with P(1) = C(t+alpha, t)
        n, z = 3, 1.0
        alpha = (n - 3) / 2
        target = (z / 2) ** (-alpha) * bessel_j(alpha, z) if alpha else bessel_j(alpha, z)
        errs = []
        for t in (200, 400):
            spec = KernelSpec(n, t)
            scale = math.comb(t + 0, t) / dim_harmonic(n, t)  # binom(t+alpha,t) with alpha=0
            p_val = q_eval(spec, math.cos(z / t)) * scale
            errs.append(abs(t ** (-alpha) * p_val - target))
        assert errs[1] < errs[0]
        assert errs[1] < 1e-2
