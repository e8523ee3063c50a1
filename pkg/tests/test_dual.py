import numpy as np
import pytest

from rsmaxwell import (
    FieldSample,
    SourceTuple,
    SpacetimePoint,
    dual_transform,
    dual_transform_sources,
    lc_frame,
    maxwell_residual,
    phase_transform,
    plane_wave_lc,
    plane_wave_z,
)


def sample(e, cb):
    return FieldSample(np.asarray(e, float), np.asarray(cb, float), SpacetimePoint(0, 0, 0, 0))


def test_dual_swaps_fields():
    f = sample([1, 2, 3], [4, 5, 6])
    g = dual_transform(f)
    np.testing.assert_allclose(g.e, [-4, -5, -6])
    np.testing.assert_allclose(g.cb, [1, 2, 3])


def test_dual_of_variant_one_is_variant_two_up_to_sign(rng):
    # E1_D = -k0 A cos, cB2_D = -k3 A cos: variant II with a global minus
    for _ in range(20):
        k0, amp = rng.uniform(0.5, 2.0, 2)
        x = rng.uniform(-2, 2, 4)
        fd = dual_transform(plane_wave_z("I", k0, amp, x))
        fII = plane_wave_z("II", k0, amp, x)
        stacked_d = np.concatenate([fd.e, fd.cb])
        stacked_II = np.concatenate([fII.e, fII.cb])
        denom = stacked_II @ stacked_II
        sign = stacked_d @ stacked_II / denom if denom > 0 else 1.0
        np.testing.assert_allclose(stacked_d, sign * stacked_II, atol=1e-13)
        if denom > 1e-12:
            assert abs(sign - (-1.0)) < 1e-12


def test_dual_square_and_fourth_power(rng):
    f = sample(rng.normal(size=3), rng.normal(size=3))
    g = dual_transform(dual_transform(f))
    np.testing.assert_allclose(g.e, -f.e)
    np.testing.assert_allclose(g.cb, -f.cb)
    g4 = dual_transform(dual_transform(g))
    np.testing.assert_allclose(g4.e, f.e)
    np.testing.assert_allclose(g4.cb, f.cb)


def test_phase_transform_identity_and_inverse(rng):
    f = sample(rng.normal(size=3), rng.normal(size=3))
    g = phase_transform(f, 0.0)
    np.testing.assert_allclose(g.e, f.e)
    np.testing.assert_allclose(g.cb, f.cb)
    chi = rng.uniform(-np.pi, np.pi)
    h = phase_transform(phase_transform(f, chi), -chi)
    np.testing.assert_allclose(h.e, f.e, atol=1e-15)
    np.testing.assert_allclose(h.cb, f.cb, atol=1e-15)


def test_phase_transform_group_action(rng):
    f = sample(rng.normal(size=3), rng.normal(size=3))
    c1, c2 = rng.uniform(-2, 2, 2)
    g = phase_transform(phase_transform(f, c1), c2)
    h = phase_transform(f, c1 + c2)
    np.testing.assert_allclose(g.e, h.e, atol=1e-14)
    np.testing.assert_allclose(g.cb, h.cb, atol=1e-14)


def test_phase_at_quarter_turn_is_dual(rng):
    f = sample(rng.normal(size=3), rng.normal(size=3))
    g = phase_transform(f, np.pi / 2)
    d = dual_transform(f)
    np.testing.assert_allclose(g.e, d.e, atol=1e-15)
    np.testing.assert_allclose(g.cb, d.cb, atol=1e-15)


def test_phase_preserves_null_invariants(rng):
    # for E.cB = 0, |E| = |cB| the rotation acts rigidly
    for _ in range(50):
        n = rng.normal(size=3)
        n /= np.linalg.norm(n)
        fr = lc_frame(n, rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3))
        f = plane_wave_lc(fr, 1.0, 1.0, rng.uniform(-1, 1, 4))
        g = phase_transform(f, rng.uniform(-np.pi, np.pi))
        scale = f.e @ f.e + f.cb @ f.cb + 1e-30
        assert abs(g.e @ g.cb) < 1e-12 * scale
        assert abs(g.e @ g.e - g.cb @ g.cb) < 1e-12 * scale


def test_sources_map():
    s = SourceTuple(rho_e=1.0)
    d = dual_transform_sources(s)
    assert d == SourceTuple(rho_m=1.0)
    dd = dual_transform_sources(d)
    assert dd.rho_e == -1.0 and dd.rho_m == 0.0
    z = dual_transform_sources(SourceTuple())
    assert z == SourceTuple()
    s2 = SourceTuple(rho_e=0.5, rho_m=-1.5, j_e=(1, 2, 3), j_m=(-1, 0, 1))
    d2 = dual_transform_sources(s2)
    assert d2.rho_e == 1.5 and d2.rho_m == 0.5
    assert d2.j_e == (-1.0, 0.0, 1.0) and d2.j_m == (-1.0, -2.0, -3.0)


def test_sources_double_application_negates():
    s = SourceTuple(rho_e=0.7, rho_m=0.2, j_e=(0.1, 0.2, 0.3), j_m=(0.4, 0.5, 0.6))
    dd = dual_transform_sources(dual_transform_sources(s))
    assert dd.rho_e == -s.rho_e and dd.rho_m == -s.rho_m
    assert dd.j_e == tuple(-v for v in s.j_e)
    assert dd.j_m == tuple(-v for v in s.j_m)


def test_sources_validation():
    with pytest.raises(ValueError):
        SourceTuple(rho_e=np.inf)
    with pytest.raises(ValueError):
        SourceTuple(j_e=(1.0, 2.0))


def test_dual_preserves_maxwell_residual(rng):
    n = rng.normal(size=3)
    n /= np.linalg.norm(n)
    fr = lc_frame(n, rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3))
    fn = lambda p: plane_wave_lc(fr, 1.0, 1.0, p)
    fn_dual = lambda p: dual_transform(fn(p))
    x = rng.uniform(-1, 1, 4)
    rep = maxwell_residual(fn, x, 1e-4)
    rep_d = maxwell_residual(fn_dual, x, 1e-4)
    assert rep.max_relative < 1e-6
    assert rep_d.max_relative < 1e-6
    # the dual permutes the four residual expressions among themselves
    assert abs(rep.max_residual - rep_d.max_residual) < 1e-12 * max(rep.gradient_scale, 1)
