"""Scalar numerics: bisection, sign scanning, golden-section search, quadrature."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blochsums import bisect, golden_max, remark6_poly, sign_changes, trapezoid


class TestBisect:
    def test_square_root_of_two(self):
        result = bisect(lambda x: x * x - 2.0, 1.0, 2.0, tol=1e-14)
        assert abs(result.root - math.sqrt(2.0)) < 1e-13
        assert result.converged
        assert result.bracket[0] <= result.root <= result.bracket[1]
        assert result.bracket[1] - result.bracket[0] <= 1e-13

    def test_unbracketed_interval_rejected(self):
        with pytest.raises(ValueError, match="bracket"):
            bisect(lambda x: x * x + 1.0, 0.0, 1.0)

    def test_exact_zero_at_endpoint(self):
        result = bisect(lambda x: x, 0.0, 1.0)
        assert result.root == 0.0
        assert result.residual == 0.0

    def test_threshold_polynomial_root(self):
        # Frozen oracle: the positive root of the degree-8 polynomial and
        # its square root, which the printed decimal 0.39466 abbreviates.
        result = bisect(remark6_poly, 0.15, 0.16, tol=1e-15)
        assert abs(result.root - 0.15576149947372592) < 5e-14
        assert abs(remark6_poly(result.root)) <= 1e-12
        assert abs(math.sqrt(result.root) - 0.39466) <= 5e-5

    @given(st.floats(min_value=-20.0, max_value=20.0))
    @settings(max_examples=40, deadline=None)
    def test_monotone_cubic_roots(self, c):
        result = bisect(lambda x: x**3 - c, -3.0, 3.0, tol=1e-13)
        assert abs(result.root - math.copysign(abs(c) ** (1.0 / 3.0), c)) < 1e-10


class TestSignChanges:
    def test_sine_brackets(self):
        brackets = sign_changes(math.sin, 0.1, 10.0, 1001)
        assert len(brackets) == 3
        for (lo, hi), zero in zip(brackets, (math.pi, 2 * math.pi, 3 * math.pi)):
            assert lo < zero < hi

    def test_no_changes(self):
        assert sign_changes(lambda x: 1.0 + x * x, -1.0, 1.0, 100) == []

    def test_threshold_polynomial_bracket(self):
        brackets = sign_changes(remark6_poly, 0.0, 0.5, 10000)
        assert brackets, "expected a sign change below 0.5"
        lo, hi = brackets[0]
        assert 0.15 < lo and hi < 0.16


class TestGoldenMax:
    def test_parabola(self):
        arg, val = golden_max(lambda x: 1.0 - (x - 0.3) ** 2, 0.0, 1.0, tol=1e-12)
        assert abs(arg - 0.3) < 1e-8
        assert abs(val - 1.0) < 1e-12

    def test_monotone_function_ends_at_boundary(self):
        arg, val = golden_max(lambda x: x, 0.0, 1.0, tol=1e-12)
        assert abs(arg - 1.0) < 1e-6
        assert val <= 1.0


class TestTrapezoid:
    def test_cubic_exactness_scaling(self):
        exact = 0.25
        err_m = abs(trapezoid(lambda x: x**3, 0.0, 1.0, 200) - exact)
        err_2m = abs(trapezoid(lambda x: x**3, 0.0, 1.0, 400) - exact)
        assert err_m < 1e-5
        assert err_m / err_2m == pytest.approx(4.0, rel=1e-2)

    def test_quarter_circle_area(self):
        val = trapezoid(lambda x: math.sqrt(max(0.0, 1.0 - x * x)), 0.0, 1.0, 20000)
        assert abs(val - math.pi / 4.0) < 1e-5

    def test_subinterval_validation(self):
        with pytest.raises(ValueError):
            trapezoid(lambda x: x, 0.0, 1.0, 0)
