"""Branch conventions, gamma, and the summation/quadrature engines."""

import cmath
import math

import pytest

from lerchkit.branch_numerics import (QuadResult, branched_power,
                                      complex_gamma, principal_log,
                                      quad_semiaxis, reciprocal_gamma,
                                      semi_principal_log,
                                      sum_with_tail_bound)
from lerchkit.errors import AccuracyError, DomainError


def test_principal_log_range_and_edge():
    # Im in (-pi, pi]; the cut on the negative axis takes the upper edge
    assert principal_log(-1.0) == complex(0.0, math.pi)
    assert principal_log(-1.0 - 0.0j).imag == pytest.approx(math.pi)
    assert principal_log(1j).imag == pytest.approx(math.pi / 2)
    assert principal_log(-1j).imag == pytest.approx(-math.pi / 2)
    assert principal_log(2.0) == complex(math.log(2.0), 0.0)


def test_semi_principal_log_range_and_edge():
    # Im in [0, 2*pi); positive reals sit on the lower edge (0), not 2*pi
    assert semi_principal_log(2.0).imag == 0.0
    assert semi_principal_log(-1.0).imag == pytest.approx(math.pi)
    assert semi_principal_log(-1j).imag == pytest.approx(3 * math.pi / 2)
    assert semi_principal_log(1j).imag == pytest.approx(math.pi / 2)


def test_log_zero_rejected():
    with pytest.raises(DomainError):
        principal_log(0)
    with pytest.raises(DomainError):
        semi_principal_log(0)


def test_branched_power_two_branches_disagree_below_axis():
    # (-1j)^0.5: principal gives e^{-i pi/4}, semi gives e^{+i 3 pi/4}
    p = branched_power(-1j, 0.5, "principal")
    s = branched_power(-1j, 0.5, "semi")
    r = 1.0 / math.sqrt(2.0)
    assert p == pytest.approx(complex(r, -r))
    assert s == pytest.approx(complex(-r, r))


def test_branched_power_agrees_in_upper_half_plane():
    for z in (0.3 + 0.4j, -2.0 + 0.1j, 1j, 5.0 + 2.0j):
        for e in (0.5, -1.3, 2.0 + 1.0j):
            assert branched_power(z, e, "principal") == pytest.approx(
                branched_power(z, e, "semi"))


def test_complex_gamma_known_values():
    assert complex_gamma(5).real == pytest.approx(24.0, rel=1e-12)
    assert complex_gamma(0.5).real == pytest.approx(math.sqrt(math.pi),
                                                    rel=1e-12)
    # Gamma(1/2 + i): |Gamma(1/2 + i t)|^2 = pi / cosh(pi t)
    g = complex_gamma(0.5 + 1j)
    assert abs(g) ** 2 == pytest.approx(math.pi / math.cosh(math.pi),
                                        rel=1e-11)


def test_reciprocal_gamma_exact_zeros():
    for n in (0, -1, -2, -7, -30):
        assert reciprocal_gamma(n) == 0j  # exact, not merely small
    assert reciprocal_gamma(3) == pytest.approx(0.5)


def test_quad_semiaxis_gamma_integral():
    # int_0^inf t^{s-1} e^{-t} dt = Gamma(s)
    for s in (1.5, 2.0, 3.7):
        got = quad_semiaxis(lambda t, s=s: t ** (s - 1) * math.exp(-t))
        assert isinstance(got, QuadResult)
        assert got.value == pytest.approx(complex_gamma(s).real, rel=1e-11)
        assert got.error < 1e-9


def test_quad_semiaxis_reports_failure():
    # a non-integrable integrand cannot satisfy the tolerance
    with pytest.raises(AccuracyError) as exc:
        quad_semiaxis(lambda t: cmath.exp(1j * t * t), tol=1e-12,
                      max_level=4)
    assert exc.value.best is not None


def test_sum_with_tail_bound_geometric():
    q = 0.5
    res = sum_with_tail_bound((q ** n for n in range(10 ** 6)),
                              lambda n: q ** n / (1 - q), tol=1e-13)
    assert res.value == pytest.approx(2.0, abs=1e-12)
    assert res.tail_bound <= 1e-13
