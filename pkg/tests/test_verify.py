"""Cross-identity residual checks: ladders, PDE, functional equations,
dilogarithm identities, and monodromy vanishing."""

import json
import math

import pytest

from lerchkit.errors import DomainError
from lerchkit.verify import (ResidualReport, SUITE_NAMES, check_commutator,
                             check_four_term, check_ladder_down,
                             check_ladder_up, check_lerch_three_term,
                             check_monodromy_vanishing, check_pde,
                             check_rogers, check_spence, dilog_real,
                             run_suite)


# ---------------------------------------------------------------------------
# report object
# ---------------------------------------------------------------------------

def test_residual_report_properties():
    r = ResidualReport("demo", (1.0,), 2.0 + 0j, 2.0 + 1e-12j, 1e-9)
    assert r.abs_residual == pytest.approx(1e-12)
    assert r.signed_residual == -(ResidualReport(
        "demo", (1.0,), 2.0 + 1e-12j, 2.0 + 0j, 1e-9).signed_residual)
    assert r.passed
    assert not ResidualReport("demo", (), 1.0, 2.0, 1e-9).passed


def test_rel_residual_normalizes_by_scale():
    big = ResidualReport("big", (), 1e8 + 0j, 1e8 + 1.0j, 1e-6)
    assert big.abs_residual == pytest.approx(1.0)
    assert big.rel_residual == pytest.approx(1e-8)
    assert big.passed  # tolerance reads the relative residual


def test_report_round_trips_through_json():
    r = check_ladder_down(2, 0.5, 0.5)
    d = json.loads(json.dumps(r.to_dict()))
    assert d["name"] == r.name
    assert d["passed"] is True
    assert d["abs_residual"] == pytest.approx(r.abs_residual)


# ---------------------------------------------------------------------------
# ladder and PDE checks
# ---------------------------------------------------------------------------

LADDER_POINTS = [
    (2, 0.5, 0.5),
    (1.5, 0.3 + 0.2j, 0.7),
    (0.5 + 0.5j, -0.4, 1.2),
    (3, -0.7, 2.0),
    (2, 0.85, 0.6),       # integral route
    (1.2, -1.3, 0.8),     # integral route
]


@pytest.mark.parametrize("s,z,c", LADDER_POINTS)
def test_ladder_down(s, z, c):
    r = check_ladder_down(s, z, c)
    assert r.passed, r.to_dict()


@pytest.mark.parametrize("s,z,c", LADDER_POINTS)
def test_ladder_up(s, z, c):
    r = check_ladder_up(s, z, c)
    assert r.passed, r.to_dict()


def test_ladder_up_exact_at_s_zero():
    r = check_ladder_up(0, 0.5, 0.75)
    assert r.passed and r.abs_residual == 0.0


@pytest.mark.parametrize("s,z,c", LADDER_POINTS)
def test_pde(s, z, c):
    r = check_pde(s, z, c)
    assert r.passed, r.to_dict()


def test_pde_on_monodromy_term():
    r = check_pde(0.6 + 0.4j, -0.8 + 0.5j, 0.7, target="monodromy")
    assert r.name == "pde_monodromy_term"
    assert r.passed, r.to_dict()


def test_commutator_is_exact():
    r = check_commutator(max_degree=6)
    assert r.passed and r.abs_residual == 0.0


# ---------------------------------------------------------------------------
# functional equations on the unit polycylinder
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("s,a,c", [
    (0.5, 0.5, 0.5),
    (0.3, 0.4, 0.6),
    (0.3 + 0.2j, 0.4, 0.6),
])
def test_three_term_equation(s, a, c):
    r = check_lerch_three_term(s, a, c)
    assert r.passed, r.to_dict()


@pytest.mark.parametrize("parity", [1, -1])
def test_four_term_equation(parity):
    r = check_four_term(0.4, 0.3, 0.7, parity=parity)
    assert r.name == ("four_term_plus" if parity == 1 else "four_term_minus")
    assert r.passed, r.to_dict()


def test_three_term_rejects_points_off_the_cylinder():
    with pytest.raises(DomainError):
        check_lerch_three_term(1.5, 0.5, 0.5)
    with pytest.raises(DomainError):
        check_four_term(0.5, 0.5, 1.2)


# ---------------------------------------------------------------------------
# dilogarithm identities
# ---------------------------------------------------------------------------

def test_dilog_real_values():
    assert dilog_real(0.0) == 0.0
    assert dilog_real(0.5) == pytest.approx(
        math.pi ** 2 / 12.0 - math.log(2.0) ** 2 / 2.0, abs=1e-14)


def test_spence_five_term():
    for x in (0.0, 0.15, 0.3, 0.45):
        for y in (0.0, 0.2, 0.4):
            r = check_spence(x, y)
            assert r.passed, r.to_dict()
    with pytest.raises(DomainError):
        check_spence(0.6, 0.1)


def test_rogers_five_term():
    for x in (0.1, 0.3, 0.45):
        for y in (0.2, 0.4):
            r = check_rogers(x, y)
            assert r.passed, r.to_dict()
    with pytest.raises(DomainError):
        check_rogers(0.0, 0.3)  # open interval


# ---------------------------------------------------------------------------
# monodromy vanishing
# ---------------------------------------------------------------------------

def test_vanishing_at_integer_s():
    # tolerance 0: the zeros must be exact
    for s in (0, -1, -2, 1, 2):
        r = check_monodromy_vanishing(s)
        assert r.passed and r.abs_residual == 0.0


def test_vanishing_needs_integer_s():
    with pytest.raises(DomainError):
        check_monodromy_vanishing(0.5)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def test_every_suite_passes():
    for name in SUITE_NAMES:
        rep = run_suite(name)
        assert rep.passed, (name, [r.to_dict() for r in rep.reports
                                   if not r.passed])
    combined = run_suite("all")
    assert len(combined.reports) > 50


def test_empty_grid_is_a_vacuous_pass():
    with pytest.warns(UserWarning):
        rep = run_suite("ladders", grid=())
    assert rep.passed and rep.warning is not None
    assert rep.reports == ()


def test_run_suite_rejects_unknown_name():
    with pytest.raises(ValueError):
        run_suite("no-such-suite")
    with pytest.raises(ValueError):
        run_suite("all", grid=((2, 0.5, 0.5),))


def test_tolerance_monotone():
    r_loose = check_ladder_down(2, 0.85, 0.6, tol=1e-3)
    r_tight = check_ladder_down(2, 0.85, 0.6, tol=1e-30)
    assert r_loose.abs_residual == r_tight.abs_residual  # deterministic
    assert r_loose.passed and not r_tight.passed
