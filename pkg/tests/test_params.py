import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ellint2 import Amplitudes, DomainError, map_uv, modulus_from_z
from ellint2.params import discriminant

import oracles

# oracles.solve_uv(0.3, 0.4)
UV_03_04 = (0.10971842153018966, 0.17971842153018966)


@st.composite
def admissible(draw):
    s = draw(st.floats(0.0, 1.0))
    t = draw(st.floats(0.0, 1.0))
    a, b = s * t, s * (1 - t)
    return a * draw(st.sampled_from((1, -1))), b * draw(st.sampled_from((1, -1)))


def test_origin():
    r = map_uv((0, 0))
    assert (r.u, r.v) == (0.0, 0.0)


def test_single_axis():
    r = map_uv((0.5, 0))
    assert r.u == pytest.approx(0.25, abs=1e-16)
    assert r.v == 0.0


def test_known_pair():
    r = map_uv((0.3, 0.4))
    assert r.u == pytest.approx(UV_03_04[0], abs=1e-15)
    assert r.v == pytest.approx(UV_03_04[1], abs=1e-15)
    assert discriminant(0.3, 0.4) == pytest.approx(0.5049, abs=1e-15)


@pytest.mark.slow
def test_known_pair_oracle():
    u, v = oracles.solve_uv(0.3, 0.4)
    assert (float(u), float(v)) == pytest.approx(UV_03_04, abs=1e-16)


def test_diagonal_boundary():
    r = map_uv((0.5, 0.5))
    assert (r.u, r.v) == (0.5, 0.5)


def test_discriminant_forms_agree():
    for a, b in [(0.1, 0.2), (0.3, 0.4), (0.05, 0.9), (0.6, 0.1)]:
        d1 = (1 + a * a - b * b) ** 2 - 4 * a * a
        d2 = (1 - a * a + b * b) ** 2 - 4 * b * b
        assert discriminant(a, b) == pytest.approx(d1, abs=1e-15)
        assert discriminant(a, b) == pytest.approx(d2, abs=1e-15)


@given(admissible())
def test_round_trip(p):
    a, b = p
    r = map_uv(p)
    assert abs(r.u * (1 - r.v) - a * a) <= 1e-12
    assert abs(r.v * (1 - r.u) - b * b) <= 1e-12
    assert 0.0 <= r.u <= 1.0 and 0.0 <= r.v <= 1.0
    assert math.sqrt(r.u * (1 - r.v)) + math.sqrt(r.v * (1 - r.u)) == pytest.approx(
        abs(a) + abs(b), abs=1e-12
    )


@given(admissible())
def test_swap_and_sign(p):
    a, b = p
    r = map_uv((a, b))
    s = map_uv((b, a))
    assert (s.u, s.v) == (r.v, r.u)
    for sa in (1, -1):
        for sb in (1, -1):
            assert map_uv((sa * a, sb * b)) == r


@given(admissible())
def test_minus_branch(p):
    a, b = p
    r = map_uv(p)
    assert r.u <= 0.5 * (1 + a * a - b * b) + 1e-15


@given(st.floats(0.0, 0.99))
def test_collapse_as_other_amplitude_vanishes(a):
    r = map_uv((a, 1e-9))
    assert r.u == pytest.approx(a * a, abs=1e-12)
    assert r.v == pytest.approx(1e-18 / (1 - a * a), rel=1e-6)


@given(st.floats(0.0, 1.0))
def test_boundary_line(a):
    assume(0.0 < a < 1.0)
    r = map_uv((a, 1 - a))
    assert r.u == pytest.approx(a, abs=1e-12)
    assert r.v == pytest.approx(1 - a, abs=1e-12)


def test_domain():
    with pytest.raises(DomainError):
        map_uv((0.7, 0.7))
    map_uv((0.6, 0.4 + 1e-15))  # within the boundary slack
    with pytest.raises(DomainError):
        Amplitudes(math.inf, 0)


def test_modulus_map():
    assert modulus_from_z(0).k == 0.0
    m1 = modulus_from_z(1)
    assert (m1.k, m1.kc) == (1.0, 0.0)
    assert modulus_from_z(1 / 3).k == pytest.approx(math.sqrt(0.5), rel=1e-15)
    ks = [modulus_from_z(i / 100).k for i in range(101)]
    assert all(x < y for x, y in zip(ks, ks[1:]))
    for z in (0.1, 0.5, 0.9):
        m = modulus_from_z(z)
        assert m.k ** 2 + m.kc ** 2 == pytest.approx(1.0, abs=1e-15)
    for z in (-0.01, 1.01):
        with pytest.raises(DomainError):
            modulus_from_z(z)
