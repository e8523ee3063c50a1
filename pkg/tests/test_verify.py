import numpy as np
import pytest

from rsmaxwell import (
    FieldSample,
    NonFiniteFieldError,
    SourceTuple,
    SpacetimePoint,
    convergence_order,
    lc_frame,
    maxwell_residual,
    plane_wave_lc,
    plane_wave_z,
)
from rsmaxwell.algebra import as_point, as_point_array


def const_field(e, cb):
    def fn(p):
        return FieldSample(np.asarray(e, float), np.asarray(cb, float), as_point(p))

    return fn


def lc_wave_fn(n=(0.36, 0.48, 0.8)):
    fr = lc_frame(np.asarray(n), np.array([1.0, -0.2, 0.3]), np.array([0.1, 0.5, -0.4]))
    return lambda p: plane_wave_lc(fr, 1.0, 1.0, p)


def test_static_uniform_field_zero_residual():
    rep = maxwell_residual(const_field([1, 2, 3], [0.5, 0, -1]), (0.1, 0.2, 0.3, 0.4), 1e-3)
    assert rep.max_residual == 0.0
    assert rep.div_e == 0.0 and rep.div_cb == 0.0
    assert rep.curl_e_plus_dt_cb == 0.0 and rep.curl_cb_minus_dt_e == 0.0


def test_lc_wave_residual_small():
    rep = maxwell_residual(lc_wave_fn(), (0.2, 0.3, 0.5, 0.7), 1e-4)
    assert rep.max_residual < 1e-7
    assert rep.max_relative < 1e-7


def test_corrupted_field_large_residual(rng):
    base = lc_wave_fn()

    def corrupted(p):
        f = base(p)
        e = f.e.copy()
        e[1] = -e[1]
        return FieldSample(e, f.cb, f.point)

    rep = maxwell_residual(corrupted, (0.2, 0.3, 0.5, 0.7), 1e-4)
    assert rep.max_relative > 0.05


def test_corrupted_plane_variant_one():
    # flipping E2 on the z wave breaks the curl law by 2 k0^2 A |sin phi|
    k0 = amp = 1.0

    def corrupted(p):
        f = plane_wave_z("I", k0, amp, p)
        e = f.e.copy()
        e[1] = -e[1]
        return FieldSample(e, f.cb, f.point)

    x = (0.9, 0.1, 0.2, 0.3)  # generic phase
    rep = maxwell_residual(corrupted, x, 1e-4)
    assert rep.max_residual > 0.1 * k0 * k0 * amp


def test_sourced_right_hand_sides():
    # E = (x1, 0, 0), cB = 0 solves the sourced equations with rho_e = 1
    def fn(p):
        x = as_point_array(p)
        return FieldSample(np.array([x[1], 0, 0]), np.zeros(3), as_point(p))

    vac = maxwell_residual(fn, (0.1, 0.2, 0.3, 0.4), 1e-4)
    assert abs(vac.div_e - 1.0) < 1e-9
    src = maxwell_residual(fn, (0.1, 0.2, 0.3, 0.4), 1e-4, sources=SourceTuple(rho_e=1.0))
    assert src.max_residual < 1e-9
    # a current can also be certified: E = (0, 0, t) needs j_e = (0, 0, -1)
    def fn2(p):
        x = as_point_array(p)
        return FieldSample(np.array([0, 0, x[0]]), np.zeros(3), as_point(p))

    src2 = maxwell_residual(fn2, (0.1, 0.2, 0.3, 0.4), 1e-4, sources=SourceTuple(j_e=(0, 0, -1)))
    assert src2.max_residual < 1e-9


def test_residual_report_is_nonnegative_and_finite():
    rep = maxwell_residual(lc_wave_fn(), (0.2, 0.3, 0.5, 0.7), 1e-3)
    for v in (rep.div_e, rep.div_cb, rep.curl_e_plus_dt_cb, rep.curl_cb_minus_dt_e,
              rep.max_residual, rep.gradient_scale, rep.max_relative):
        assert v >= 0.0 and np.isfinite(v)
    assert rep.h == 1e-3


def test_convergence_slope_for_exact_solution():
    co = convergence_order(lc_wave_fn(), (0.2, 0.3, 0.5, 0.7), [1e-2, 5e-3, 2.5e-3])
    assert not co.floor_limited
    assert abs(co.slope - 2.0) < 0.1


def test_convergence_slope_for_corrupted_field():
    base = lc_wave_fn()

    def corrupted(p):
        f = base(p)
        e = f.e.copy()
        e[1] = -e[1]
        return FieldSample(e, f.cb, f.point)

    co = convergence_order(corrupted, (0.2, 0.3, 0.5, 0.7), [1e-2, 5e-3, 2.5e-3])
    assert abs(co.slope) < 0.3


def test_convergence_floor_limited_for_constant_field():
    co = convergence_order(const_field([1, 2, 3], [0, 0, 0]), (0, 0, 0, 0), [1e-2, 5e-3, 2.5e-3])
    assert co.floor_limited
    assert co.slope is None


def test_convergence_validates_steps():
    fn = lc_wave_fn()
    with pytest.raises(ValueError):
        convergence_order(fn, (0, 0, 0, 0), [1e-2, 5e-3])
    with pytest.raises(ValueError):
        convergence_order(fn, (0, 0, 0, 0), [1e-2, 5e-3, 3e-3])


def test_non_finite_sample_raises_with_point():
    # a field function that hands back garbage is caught by the verifier,
    # naming the offending stencil point
    def fn(p):
        x = as_point_array(p)
        f = FieldSample(np.zeros(3), np.zeros(3), as_point(p))
        if x[0] > 0.05:
            object.__setattr__(f, "e", np.array([np.nan, 0.0, 0.0]))
        return f

    with pytest.raises(NonFiniteFieldError) as err:
        maxwell_residual(fn, (0, 0, 0, 0), 0.1)
    assert "x0=0.1" in str(err.value)


def test_step_validation():
    with pytest.raises(ValueError):
        maxwell_residual(lc_wave_fn(), (0, 0, 0, 0), -1e-3)
