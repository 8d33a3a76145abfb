import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rel
from ellint2 import (
    ConvergenceError,
    DivergenceError,
    DomainError,
    EllipticModulus,
    ToleranceConfig,
    agm,
    complete_E,
    complete_K,
    elliptic_ke,
)
from ellint2.quadrature import rule_on

import oracles

# frozen from oracles.agm_by_integral(1, 2), theta_K(0.5), theta_E(0.5)
AGM_1_2 = 1.4567910310469068
K_HALF = 1.6857503548125960
E_HALF = 1.4674622093394272


def test_agm_fixed_points():
    assert agm(1, 1) == 1.0
    for c in (1e-3, 0.7, 42.0):
        assert agm(c, c) == c


def test_agm_against_defining_integral():
    assert rel(agm(1, 2), AGM_1_2) <= 1e-15


@pytest.mark.slow
def test_frozen_values_match_oracles():
    assert rel(float(oracles.agm_by_integral(1, 2)), AGM_1_2) <= 1e-16
    assert rel(float(oracles.theta_K(0.5)), K_HALF) <= 1e-16
    assert rel(float(oracles.theta_E(0.5)), E_HALF) <= 1e-16


@given(st.floats(1e-6, 1e6), st.floats(1e-6, 1e6))
def test_agm_bounds_and_symmetry(x, y):
    m = agm(x, y)
    assert min(x, y) * (1 - 1e-15) <= m <= max(x, y) * (1 + 1e-15)
    assert rel(agm(y, x), m) <= 1e-15


def test_agm_rejects_nonpositive():
    with pytest.raises(DomainError):
        agm(0, 1)
    with pytest.raises(DomainError):
        agm(-1, 1)


def test_agm_iteration_limit_carries_gap():
    with pytest.raises(ConvergenceError) as info:
        agm(1, 1e-6, ToleranceConfig(max_iters=2))
    assert info.value.residual > 0


def test_K_E_at_zero():
    assert complete_K(0) == pytest.approx(math.pi / 2, rel=1e-16)
    assert complete_E(0) == pytest.approx(math.pi / 2, rel=1e-16)


def test_half_modulus():
    assert rel(complete_K(0.5), K_HALF) <= 1e-15
    assert rel(complete_E(0.5), E_HALF) <= 1e-15


def test_k_one():
    assert complete_E(1) == 1.0
    with pytest.raises(DivergenceError):
        complete_K(1)


@pytest.mark.parametrize("k", [-0.1, 1.0000001, math.nan])
def test_outside_domain(k):
    with pytest.raises(DomainError):
        complete_E(k)
    with pytest.raises(DomainError):
        complete_K(k)


@pytest.mark.parametrize("k", [i / 10 for i in range(1, 10)])
def test_legendre_relation(k):
    m = EllipticModulus.of(k)
    a, b = elliptic_ke(m), elliptic_ke(m.complement())
    assert rel(a.E * b.K + b.E * a.K - a.K * b.K, math.pi / 2) <= 1e-14


@pytest.mark.parametrize("k", [0.05, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99])
def test_against_theta_quadrature(k):
    x, w = rule_on(200, 0.0, math.pi / 2)
    s = [1 - (k * math.sin(t)) ** 2 for t in x]
    K = sum(wi / math.sqrt(si) for wi, si in zip(w, s))
    E = sum(wi * math.sqrt(si) for wi, si in zip(w, s))
    assert rel(complete_K(k), K) <= 1e-12
    assert rel(complete_E(k), E) <= 1e-12


def test_monotone_in_k():
    ks = [i / 200 for i in range(200)]
    Ks = [complete_K(k) for k in ks]
    Es = [complete_E(k) for k in ks]
    assert all(x < y for x, y in zip(Ks, Ks[1:]))
    assert all(x > y for x, y in zip(Es, Es[1:]))


@given(st.floats(0.0, 1.0, exclude_max=True))
def test_value_bounds(k):
    v = elliptic_ke(k)
    assert v.K >= math.pi / 2 * (1 - 1e-16)
    assert 1.0 <= v.E <= math.pi / 2 * (1 + 1e-16)
    assert v.E <= v.K * (1 + 1e-16)


def test_near_one_uses_complement():
    # kc supplied exactly keeps K finite and accurate where 1 - k*k would round to 0
    m = EllipticModulus(1.0, 1e-10)
    K = complete_K(m)
    assert rel(K, math.log(4 / 1e-10)) <= 1e-9
    assert rel(complete_E(m), 1.0) <= 1e-15
