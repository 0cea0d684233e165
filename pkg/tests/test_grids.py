"""Grids, sampled test functions, weighted norms, fixture serialization."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hywbench import (
    Grid1D,
    TestFunctionSpec,
    fixture_checksum,
    load_sampled,
    lp_norm_G,
    make_axb,
    make_grids,
    make_heisenberg,
    sample,
    sample_from_callable,
    save_sampled,
)

AXB, _ = make_axb()
HEIS, _ = make_heisenberg()


def test_grid_layout():
    g = Grid1D(-8.0, 8.0, 128)
    assert g.spacing == 0.125
    assert g.nyquist == 4.0
    assert g.origin_index == 64
    pts = g.points()
    assert pts[0] == -8.0
    assert pts[-1] == pytest.approx(8.0 - 0.125)
    np.testing.assert_allclose(g.weights(), 0.125)


def test_grid_validation():
    with pytest.raises(ValueError):
        Grid1D(1.0, 1.0, 8)
    with pytest.raises(ValueError):
        Grid1D(0.0, 1.0, 1)
    with pytest.raises(ValueError):
        Grid1D(0.5, 8.5, 16).origin_index  # origin between points


@given(st.integers(min_value=1, max_value=8), st.floats(min_value=0.25, max_value=16.0))
def test_difference_of_points_is_on_lattice(npow, half):
    # translations act by index shifts: p_i - p_j must be (i - j) * spacing
    g = Grid1D(-half, half, 2**npow)
    pts = g.points()
    i, j = 2**npow - 1, 2 ** (npow - 1)
    assert pts[i] - pts[j] == pytest.approx((i - j) * g.spacing, rel=1e-12)


def test_refine_keeps_extents_and_halves_spacing():
    g = Grid1D(-4.0, 4.0, 64)
    f = g.refine()
    assert (f.lo, f.hi, f.n) == (-4.0, 4.0, 128)
    assert f.spacing == g.spacing / 2


def test_balanced_refine_grows_extents():
    g = Grid1D(-4.0, 4.0, 64)
    f = g.balanced_refine()
    assert f.n == 128
    assert f.hi == pytest.approx(4.0 * np.sqrt(2.0))
    assert f.spacing < g.spacing
    assert f.origin_index == 64


def test_reciprocal_grid_spans_the_band():
    g = Grid1D(-8.0, 8.0, 128)
    r = g.reciprocal()
    assert r.lo == -g.nyquist and r.hi == g.nyquist and r.n == g.n
    assert r.origin_index == 64


def test_make_grids_checks_origin_alignment():
    n_grids, h_grid = make_grids([64], [(-8.0, 8.0)], 64, (-4.0, 4.0))
    assert len(n_grids) == 1 and h_grid.n == 64
    with pytest.raises(ValueError):
        make_grids([64], [(-8.0, 8.0)], 64, (0.25, 8.25))
    with pytest.raises(ValueError):
        make_grids([64, 64], [(-8.0, 8.0)], 64, (-4.0, 4.0))


def test_spec_validation():
    with pytest.raises(ValueError):
        TestFunctionSpec(kind="sinc")


def test_gaussian_sample_matches_callable():
    g = Grid1D(-6.0, 6.0, 64)
    spec = TestFunctionSpec(kind="gaussian", center_n=(0.5,), center_h=-1.0, width_n=(2.0,), width_h=0.5)
    f = sample(spec, (g,), g, AXB)
    direct = sample_from_callable(
        lambda n, t: np.exp(-((n - 0.5) ** 2) / 8.0) * np.exp(-((t + 1.0) ** 2) / 0.5),
        (g,),
        g,
        AXB,
    )
    np.testing.assert_allclose(f.values, direct.values, atol=1e-15)
    assert f.values.shape == (64, 64)


def test_bump_is_compactly_supported():
    g = Grid1D(-6.0, 6.0, 64)
    spec = TestFunctionSpec(kind="bump", width_n=(1.5,), width_h=2.0)
    f = sample(spec, (g,), g, AXB)
    pts = g.points()
    outside = np.abs(pts) >= 1.5
    assert np.all(f.values[outside, :] == 0)
    assert np.abs(f.values).max() > 0


def test_random_bandlimited_is_seed_deterministic():
    g = Grid1D(-6.0, 6.0, 32)
    a = sample(TestFunctionSpec(kind="random-bandlimited", seed=42), (g,), g, AXB)
    b = sample(TestFunctionSpec(kind="random-bandlimited", seed=42), (g,), g, AXB)
    c = sample(TestFunctionSpec(kind="random-bandlimited", seed=43), (g,), g, AXB)
    np.testing.assert_array_equal(a.values, b.values)
    assert np.abs(a.values - c.values).max() > 1e-6


def test_lp_norm_axb_gaussian_closed_form():
    # int exp(-b^2) db * int exp(-t^2) e^{-t} dt = sqrt(pi) * sqrt(pi) e^{1/4}
    g = Grid1D(-8.0, 8.0, 128)
    f = sample(TestFunctionSpec(kind="gaussian"), (g,), g, AXB)
    assert lp_norm_G(f, 2.0) ** 2 == pytest.approx(np.pi * np.exp(0.25), rel=1e-10)


def test_lp_norm_heisenberg_gaussian_closed_form():
    gy = Grid1D(-12.0, 12.0, 64)
    gz = Grid1D(-6.0, 6.0, 64)
    gx = Grid1D(-16.0, 16.0, 128)
    spec = TestFunctionSpec(kind="gaussian", center_n=(0.0, 0.0), width_n=(2.0, 0.5), width_h=1.0)
    f = sample(spec, (gy, gz), gx, HEIS)
    # product of three 1-D Gaussian squared integrals: sqrt(pi)*2 * sqrt(pi)*0.5 * sqrt(pi)
    assert lp_norm_G(f, 2.0) ** 2 == pytest.approx(np.pi**1.5, rel=1e-10)


def test_lp_norm_against_naive_loop():
    from hywbench import SampledFunction

    g = Grid1D(-3.0, 3.0, 16)
    h = Grid1D(-2.0, 2.0, 8)
    rng = np.random.default_rng(0)
    vals = rng.standard_normal((16, 8)) + 1j * rng.standard_normal((16, 8))
    f = SampledFunction(model=AXB, n_grids=(g,), h_grid=h, values=vals)
    p = 1.7
    acc = 0.0
    for i, b in enumerate(g.points()):
        for j, t in enumerate(h.points()):
            acc += abs(vals[i, j]) ** p * g.spacing * np.exp(-t) * h.spacing
    assert lp_norm_G(f, p) == pytest.approx(acc ** (1 / p), rel=1e-12)


def test_lp_norm_rejects_bad_exponent():
    g = Grid1D(-3.0, 3.0, 16)
    f = sample(TestFunctionSpec(kind="gaussian"), (g,), g, AXB)
    with pytest.raises(ValueError):
        lp_norm_G(f, 0.5)
    with pytest.raises(ValueError):
        lp_norm_G(f, np.inf)


def test_boundary_mass_ratio_flags_truncation():
    g = Grid1D(-8.0, 8.0, 64)
    centered = sample(TestFunctionSpec(kind="gaussian"), (g,), g, AXB)
    shifted = sample(TestFunctionSpec(kind="gaussian", center_n=(7.5,)), (g,), g, AXB)
    assert centered.boundary_mass_ratio() < 1e-8
    assert shifted.boundary_mass_ratio() > 1e-3


def test_values_shape_is_validated():
    g = Grid1D(-3.0, 3.0, 16)
    from hywbench import SampledFunction

    with pytest.raises(ValueError):
        SampledFunction(model=AXB, n_grids=(g,), h_grid=g, values=np.zeros((16, 15)))
    with pytest.raises(ValueError):
        SampledFunction(model=AXB, n_grids=(g,), h_grid=g, values=np.full((16, 16), np.nan))


def test_fixture_roundtrip(tmp_path):
    gy = Grid1D(-4.0, 4.0, 16)
    gz = Grid1D(-2.0, 2.0, 8)
    gx = Grid1D(-4.0, 4.0, 16)
    spec = TestFunctionSpec(kind="random-bandlimited", seed=5, center_n=(0.0, 0.0), width_n=(1.0, 0.5))
    f = sample(spec, (gy, gz), gx, HEIS)
    path = tmp_path / "f.hyw"
    save_sampled(f, path)
    g = load_sampled(path, HEIS)
    np.testing.assert_array_equal(f.values, g.values)
    assert [gr.n for gr in g.n_grids] == [16, 8]
    assert (g.h_grid.lo, g.h_grid.hi) == (-4.0, 4.0)
    # serialization is deterministic
    path2 = tmp_path / "g.hyw"
    save_sampled(f, path2)
    assert path.read_bytes() == path2.read_bytes()


def test_fixture_rejects_garbage(tmp_path):
    p = tmp_path / "bad.hyw"
    p.write_bytes(b"HYWX 4 0:1 0\n" + b"\x00" * 64)
    with pytest.raises(ValueError):
        load_sampled(p, AXB)
    p.write_bytes(b"HYW1 4,4 0:1,0:1 0\n" + b"\x00" * 8)  # payload too short
    with pytest.raises(ValueError):
        load_sampled(p, AXB)


def test_fixture_checksum_is_stable():
    g = Grid1D(-4.0, 4.0, 16)
    f = sample(TestFunctionSpec(kind="random-bandlimited", seed=42), (g,), g, AXB)
    a = fixture_checksum(f)
    b = fixture_checksum(sample(TestFunctionSpec(kind="random-bandlimited", seed=42), (g,), g, AXB))
    assert a == b
    assert len(a) == 64
