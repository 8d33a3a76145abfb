import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rel
from ellint2 import (
    DomainError,
    ToleranceConfig,
    appell_f4,
    complete_E,
    gauss_2f1,
    identity_eq6_first,
    identity_eq6_second,
    modulus_from_z,
    quad2d,
    series_3f2,
)

import oracles

# oracles.gauss_sum(-1/4, 1/4, 1) == 2 sqrt(2) / pi
GAUSS_SUM = 0.9003163161571061
# oracles.double_integral(0.3, 0.3) and (0.5, 0.5)
E_03_03 = 9.750416848197892
E_05_05 = 9.455983085086117

Z_GRID = [i / 10 for i in range(1, 10)]


def test_2f1_at_zero():
    res = gauss_2f1(-0.25, 0.25, 1, 0)
    assert res.value == 1.0 and res.converged


def test_2f1_gauss_summation():
    # gamma - alpha - beta = 1: terms fall like n^-2, so the tail after N terms is ~ 1/N
    res = gauss_2f1(-0.25, 0.25, 1, 1, ToleranceConfig(max_terms=200_000))
    assert res.value == pytest.approx(0.900316, abs=1e-6)
    assert rel(res.value, GAUSS_SUM) <= 1e-6
    assert rel(GAUSS_SUM, 2 * math.sqrt(2) / math.pi * complete_E(1)) <= 1e-15


@pytest.mark.slow
def test_frozen_hyper_oracles():
    assert rel(float(oracles.gauss_sum(-0.25, 0.25, 1)), GAUSS_SUM) <= 1e-16
    assert rel(float(oracles.double_integral(0.3, 0.3)), E_03_03) <= 1e-16
    assert rel(float(oracles.double_integral(0.5, 0.5)), E_05_05) <= 1e-16


@given(st.floats(0.0, 0.95))
def test_2f1_first_identity_property(z):
    lhs = gauss_2f1(-0.25, 0.25, 1, z * z).value
    rhs = 2 / math.pi * math.sqrt(1 + z) * complete_E(modulus_from_z(z))
    assert rel(lhs, rhs) <= 1e-13


def test_2f1_domain():
    with pytest.raises(DomainError):
        gauss_2f1(0.5, 0.5, 0, 0.1)
    with pytest.raises(DomainError):
        gauss_2f1(0.5, 0.5, -2, 0.1)
    with pytest.raises(DomainError):
        gauss_2f1(0.5, 0.5, 1, 1.5)
    with pytest.raises(DomainError):
        gauss_2f1(0.75, 1.25, 2, 1.0)  # gamma - alpha - beta = 0


def test_2f1_truncation_is_reported_not_raised():
    res = gauss_2f1(0.75, 1.25, 2, 0.999, ToleranceConfig(max_terms=50))
    assert not res.converged
    assert res.terms_used == 50
    assert res.tail_estimate > 0


def test_2f1_terminating():
    # (-2)_n vanishes from n = 3: 1 - 2z + z^2 for 2F1(-2, 1; 1; z)
    res = gauss_2f1(-2, 1, 1, 0.3)
    assert res.value == pytest.approx(0.49, abs=1e-16)
    assert res.converged


def test_minus_quarter_does_not_terminate():
    res = gauss_2f1(-0.25, 0.25, 1, 0.5)
    assert res.terms_used > 10


def test_stop_rule_invariant():
    cfg = ToleranceConfig()
    for z in Z_GRID:
        res = gauss_2f1(0.75, 1.25, 2, z)
        assert res.converged
        assert res.tail_estimate <= max(cfg.rel_tol * abs(res.value), cfg.abs_tol)
        assert res.terms_used <= cfg.max_terms


def test_3f2_zero():
    assert series_3f2(-0.25, 0.25, 0.5, 1, 1, 0).value == 1.0


def test_3f2_quarter_integral():
    res = series_3f2(-0.25, 0.25, 0.5, 1, 1, 4 * 0.3 ** 2)
    assert res.converged
    assert rel(math.pi ** 2 / 4 * res.value, E_03_03 / 4) <= 1e-13


def test_3f2_boundary_slow_decay():
    res = series_3f2(-0.25, 0.25, 0.5, 1, 1, 1, ToleranceConfig(max_terms=1_000_000))
    assert res.converged
    # E(1/2, 1/2) = pi^2 3F2(...; 1)
    assert rel(math.pi ** 2 * res.value, E_05_05) <= 1e-9
    assert rel(res.value, quad2d((0.5, 0.5)).value / math.pi ** 2) <= 1e-9


def test_3f2_default_cap_at_boundary_is_honest():
    res = series_3f2(-0.25, 0.25, 0.5, 1, 1, 1)
    assert not res.converged
    assert res.terms_used == ToleranceConfig().max_terms


def test_f4_origin():
    res = appell_f4(-0.25, 0.25, 0, 0)
    assert res.value == 1.0 and res.converged


def test_f4_collapses_to_2f1():
    f4 = appell_f4(-0.25, 0.25, 0.16, 0).value
    f21 = gauss_2f1(-0.25, 0.25, 1, 0.16).value
    assert rel(f4, f21) <= 1e-15


@pytest.mark.parametrize("x", [0.0, 0.1, 0.3, 0.5, 0.7, 0.9])
def test_f4_termwise_collapse(x):
    assert rel(appell_f4(-0.25, 0.25, x, 0).value, gauss_2f1(-0.25, 0.25, 1, x).value) <= 1e-13
    assert rel(appell_f4(0.3, 0.7, x, 0).value, gauss_2f1(0.3, 0.7, 1, x).value) <= 1e-13


def test_f4_matches_double_integral():
    from ellint2.validation import GOLDEN_E_03_04

    assert rel(math.pi ** 2 * appell_f4(-0.25, 0.25, 0.09, 0.16).value, GOLDEN_E_03_04) <= 1e-14


@given(st.floats(0.0, 0.24), st.floats(0.0, 0.24))
def test_f4_symmetry(x, y):
    assert rel(appell_f4(-0.25, 0.25, x, y).value, appell_f4(-0.25, 0.25, y, x).value) <= 1e-15


def test_f4_domain():
    with pytest.raises(DomainError):
        appell_f4(-0.25, 0.25, 0.36, 0.16)  # sqrt sum exactly 1
    with pytest.raises(DomainError):
        appell_f4(-0.25, 0.25, -0.1, 0.1)


def test_f4_truncation():
    res = appell_f4(-0.25, 0.25, 0.2, 0.2, ToleranceConfig(max_terms=20))
    assert not res.converged and res.terms_used == 20


def test_f4_near_boundary_no_underflow_stall():
    # a = b = 0.49: blocks decay like 0.98^s, edge terms underflow long before convergence
    res = appell_f4(-0.25, 0.25, 0.49 ** 2, 0.49 ** 2)
    assert res.converged
    assert rel(math.pi ** 2 * res.value, 9.483030553284639) <= 1e-12


def test_identity_first_at_zero():
    assert identity_eq6_first(0) == (1.0, 1.0)


@pytest.mark.parametrize("z,tol", [(0.5, 1e-12), (0.99, 1e-10)])
def test_identity_first_points(z, tol):
    lhs, rhs = identity_eq6_first(z)
    assert rel(lhs, rhs) <= tol


@pytest.mark.parametrize("z,tol", [(1e-4, 1e-6), (0.5, 1e-11), (0.9, 1e-9)])
def test_identity_second_points(z, tol):
    lhs, rhs = identity_eq6_second(z)
    assert rel(lhs, rhs) <= tol
    if z < 1e-3:
        assert lhs == pytest.approx(1, abs=1e-6) and rhs == pytest.approx(1, abs=1e-6)


@pytest.mark.parametrize("z", Z_GRID)
def test_identities_lock_modulus_convention(z):
    for ident in (identity_eq6_first, identity_eq6_second):
        lhs, rhs = ident(z)
        assert rel(lhs, rhs) <= 1e-10


def test_parameter_convention_would_fail():
    # feeding m = k^2 where the modulus is expected breaks the first identity
    z = 0.5
    k = modulus_from_z(z).k
    wrong = 2 / math.pi * math.sqrt(1 + z) * complete_E(k * k)
    assert rel(gauss_2f1(-0.25, 0.25, 1, z * z).value, wrong) > 1e-3


def test_identity_domains():
    with pytest.raises(DomainError):
        identity_eq6_first(1.0)
    with pytest.raises(DomainError):
        identity_eq6_second(0.0)
