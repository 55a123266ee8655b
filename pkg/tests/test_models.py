import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from dked_blockage import (
    LOSS_CAP_DB,
    AntennaPattern,
    BlockageLoss,
    GeometryError,
    HeightSpan,
    LinkGeometry,
    Model,
    ScreenBlocker,
    knife_edge_f,
    modified_screen_loss,
    multi_screen_loss,
    screen_loss,
    screen_loss_2edge,
    screen_loss_4edge,
)

ISO = AntennaPattern.isotropic()
LAMBDA_735 = 299792458.0 / 73.5e9


@st.composite
def geometries(draw):
    r = draw(st.floats(1.0, 50.0))
    d = draw(st.floats(1e-3, 1 - 1e-3)) * r
    yc = draw(st.floats(-2.0, 2.0))
    w = draw(st.floats(0.05, 1.0))
    f = draw(st.floats(6e9, 100e9))
    return LinkGeometry(separation_m=r, carrier_hz=f), ScreenBlocker(d, yc, w)


# ---- knife-edge term --------------------------------------------------------

def test_f_zero_excess():
    assert knife_edge_f(0.0, LAMBDA_735, 1) == 0.0
    assert knife_edge_f(0.0, LAMBDA_735, -1) == 0.0


def test_f_matches_oracle():
    excess = 0.0078338
    want = float(oracles.f_term(excess, 0.00407881, 1))
    assert knife_edge_f(excess, 0.00407881, 1) == pytest.approx(want, abs=1e-12)
    assert knife_edge_f(excess, 0.00407881, 1) == pytest.approx(0.4192795, abs=1e-6)
    assert knife_edge_f(excess, 0.00407881, -1) == pytest.approx(-want, abs=1e-12)


def test_f_asymptote():
    assert knife_edge_f(1e3, LAMBDA_735, 1) == pytest.approx(0.5, abs=1e-3)
    assert knife_edge_f(1e3, LAMBDA_735, -1) == pytest.approx(-0.5, abs=1e-3)


@pytest.mark.parametrize("args", [(-1e-3, 0.004, 1), (0.01, 0.0, 1), (0.01, -1.0, 1), (0.01, 0.004, 0)])
def test_f_rejects(args):
    with pytest.raises(ValueError):
        knife_edge_f(*args)


# ---- 2-edge -----------------------------------------------------------------

def test_2edge_centered(link):
    res = screen_loss_2edge(link, ScreenBlocker(2.5, 0.0, 0.28))
    assert res.model is Model.METIS_2EDGE and res.boresight_blocked
    assert res.loss_db == pytest.approx(15.84, abs=0.05)
    assert res.loss_db == pytest.approx(float(oracles.loss_2edge(5, 2.5, 0, 0.28, 73.5e9)), abs=1e-9)
    assert [e.label for e in res.per_edge] == ["w1", "w2"]


def test_2edge_los(link):
    res = screen_loss_2edge(link, ScreenBlocker(2.5, 0.64, 0.28))
    assert not res.boresight_blocked
    assert res.loss_db == pytest.approx(0.07, abs=0.02)
    assert res.loss_db == pytest.approx(float(oracles.loss_2edge(5, 2.5, 0.64, 0.28, 73.5e9)), abs=1e-9)


def test_half_plane_limit(link):
    res = screen_loss_2edge(link, ScreenBlocker(2.5, 500.0, 1000.0))
    assert res.loss_db == pytest.approx(20 * math.log10(2), abs=0.05)


@pytest.mark.parametrize("d, yc", [(0.5, 0.0), (1.0, 0.05), (2.5, -0.1), (4.0, 0.3), (3.3, 1.2)])
def test_2edge_matches_oracle_grid(link, d, yc):
    got = screen_loss_2edge(link, ScreenBlocker(d, yc, 0.28)).loss_db
    assert got == pytest.approx(float(oracles.loss_2edge(5, d, yc, 0.28, 73.5e9)), abs=1e-9)


@settings(max_examples=300)
@given(geometries())
def test_2edge_sign_structure(geom):
    link, screen = geom
    res = screen_loss_2edge(link, screen)
    f1, f2 = (e.f_value for e in res.per_edge)
    for e in res.per_edge:
        assert abs(e.f_value) < 0.5
        assert e.f_value == 0 or math.copysign(1, e.f_value) == e.sign
    if res.boresight_blocked:
        assert f1 >= 0 and f2 >= 0 and 0 <= f1 + f2 < 1
    else:
        assert 0 <= f1 + f2 < 1
    assert 0 < 1 - (f1 + f2) <= 1
    assert 0 <= res.loss_db <= LOSS_CAP_DB
    assert not res.log_guarded


def test_shadow_dominance(link):
    grid = np.linspace(-1.0, 1.0, 401)
    losses = [screen_loss_2edge(link, ScreenBlocker(1.5, y, 0.28)).loss_db for y in grid]
    assert int(np.argmax(losses)) == 200
    assert grid[200] == 0.0


def test_monotone_in_edge_excess(link):
    # push w2 outward with w1 fixed on the far side of the ray: both edges in shadow
    prev = -1.0
    for w in np.linspace(0.1, 3.0, 300):
        loss = screen_loss_2edge(link, ScreenBlocker(2.0, w / 2 - 0.05, w)).loss_db
        assert loss >= prev - 1e-12
        prev = loss


# ---- 4-edge -----------------------------------------------------------------

def test_4edge_centered(link):
    res = screen_loss_4edge(link, ScreenBlocker(2.5, 0.0, 0.28, HeightSpan(0.0, 1.8)))
    assert res.loss_db == pytest.approx(14.30, abs=0.05)
    want = oracles.loss_4edge(5, 2.5, 0, 0.28, 0, 1.8, 1.4, 73.5e9)
    assert res.loss_db == pytest.approx(float(want), abs=1e-9)
    assert [e.label for e in res.per_edge] == ["w1", "w2", "h1", "h2"]


def test_4edge_converges_to_2edge(link):
    two = screen_loss_2edge(link, ScreenBlocker(2.5, 0.0, 0.28)).loss_db
    four = screen_loss_4edge(link, ScreenBlocker(2.5, 0.0, 0.28, HeightSpan(-1e3, 1e3))).loss_db
    assert four == pytest.approx(two, abs=0.05)


def test_4edge_below_link(link):
    res = screen_loss_4edge(link, ScreenBlocker(2.5, 0.0, 0.28, HeightSpan(-10.0, -0.6)))
    assert not res.boresight_blocked
    assert res.loss_db < 0.5


def test_4edge_rejects_infinite(link):
    with pytest.raises(GeometryError):
        screen_loss_4edge(link, ScreenBlocker(2.5))


@settings(max_examples=200)
@given(st.floats(0.1, 4.9), st.floats(-0.13, 0.13), st.floats(0.0, 1.39), st.floats(1.41, 3.0))
def test_4edge_not_above_2edge_in_full_shadow(link, d, yc, bottom, top):
    screen = ScreenBlocker(d, yc, 0.28, HeightSpan(bottom, top))
    assert screen_loss_4edge(link, screen).loss_db <= screen_loss_2edge(link, screen).loss_db + 1e-12


# ---- modified directional ---------------------------------------------------

def test_modified_d05(link, horn):
    screen = ScreenBlocker(0.5, 0.0, 0.28)
    mod = modified_screen_loss(link, screen, horn, horn)
    base = screen_loss_2edge(link, screen)
    assert mod.loss_db == pytest.approx(40.2, abs=0.5)
    assert base.loss_db == pytest.approx(20.08, abs=0.2)
    assert mod.loss_db == pytest.approx(float(oracles.loss_modified(5, 0.5, 0, 0.28, 73.5e9, 15)), abs=1e-8)
    assert mod.gains.g_d2_w1 == pytest.approx(0.01005, abs=1e-5)


def test_modified_d10(link, horn):
    mod = modified_screen_loss(link, ScreenBlocker(1.0, 0.0, 0.28), horn, horn)
    assert mod.loss_db == pytest.approx(21.3, abs=0.5)
    assert mod.loss_db == pytest.approx(float(oracles.loss_modified(5, 1.0, 0, 0.28, 73.5e9, 15)), abs=1e-8)


def test_modified_unit_gains_when_not_blocked(link, horn):
    screen = ScreenBlocker(0.5, 0.5, 0.28)
    mod = modified_screen_loss(link, screen, horn, horn)
    assert not mod.boresight_blocked
    assert mod.gains.g_d2_w1 == mod.gains.g_d1_w2 == 1.0
    assert mod.loss_db == pytest.approx(screen_loss_2edge(link, screen).loss_db, abs=1e-12)


def test_modified_boundary_jump(link, horn):
    # gains switch on when an edge touches the ray; pin the size of the jump
    edge_on_ray = modified_screen_loss(link, ScreenBlocker(0.5, 0.14, 0.28), horn, horn).loss_db
    just_clear = modified_screen_loss(link, ScreenBlocker(0.5, 0.14 + 1e-9, 0.28), horn, horn).loss_db
    assert edge_on_ray == pytest.approx(float(oracles.loss_modified(5, 0.5, 0.14, 0.28, 73.5e9, 15)), abs=1e-8)
    assert edge_on_ray - just_clear == pytest.approx(0.368852, abs=1e-5)


@settings(max_examples=300)
@given(geometries())
def test_reduction_identity(geom):
    link, screen = geom
    assert modified_screen_loss(link, screen, ISO, ISO).loss_db == pytest.approx(
        screen_loss_2edge(link, screen).loss_db, abs=1e-9
    )


@settings(max_examples=200)
@given(geometries(), st.floats(3.0, 60.0))
def test_tx_rx_exchange(geom, hpbw):
    link, screen = geom
    p = AntennaPattern.from_hpbw_deg(hpbw)
    mirrored = ScreenBlocker(link.separation_m - screen.distance_from_tx_m, screen.lateral_offset_m, screen.width_m)
    for model in (Model.METIS_2EDGE, Model.MODIFIED_DIRECTIONAL):
        a = screen_loss(model, link, screen, p, p).loss_db
        b = screen_loss(model, link, mirrored, p, p).loss_db
        assert a == pytest.approx(b, abs=1e-9)


def test_loss_cap_and_guard(link):
    # a pattern whose null falls on both legs zeroes the weighted field sum
    p = AntennaPattern.from_hpbw_deg(15.0)
    theta_null = math.asin(math.pi / p.coefficient_a)
    d = 0.14 / math.tan(theta_null)
    res = modified_screen_loss(LinkGeometry(separation_m=2 * d), ScreenBlocker(d, 0.0, 0.28), p, p)
    assert res.loss_db <= LOSS_CAP_DB
    assert res.loss_db > 100


# ---- multi-screen -----------------------------------------------------------

def test_multi_screen():
    assert multi_screen_loss([]) == 0.0
    assert multi_screen_loss([20.08, 15.84]) == pytest.approx(35.92, abs=1e-12)
    one = BlockageLoss(12.5, Model.METIS_2EDGE, True)
    assert multi_screen_loss([one]) == 12.5


def test_multi_screen_sums_models(link, horn):
    a = screen_loss_2edge(link, ScreenBlocker(2.5))
    b = modified_screen_loss(link, ScreenBlocker(0.5), horn, horn)
    assert multi_screen_loss([a, b]) == pytest.approx(a.loss_db + b.loss_db)
