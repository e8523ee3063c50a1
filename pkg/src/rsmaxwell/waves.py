"""Closed-form electromagnetic wave families and polarization diagnostics.

Plane waves along z, plane waves along an arbitrary unit direction, the
orthogonal L/C polarization frame for complex-seed plane waves, and
cylindrical waves built on Bessel radial profiles.  All constructors return
real (E, cB) samples including their full amplitude factors; c = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy import special

from .algebra import PointLike, RSVector, SpacetimePoint, as_point, as_point_array
from .seeds import CylindricalSeed

__all__ = [
    "FieldSample",
    "LCFrame",
    "PolarizationReport",
    "cylindrical_wave",
    "cylindrical_wave_special",
    "lc_frame",
    "plane_wave_general",
    "plane_wave_lc",
    "plane_wave_z",
    "polarization_report",
    "rs_of_sample",
]

Variant = Literal["I", "II"]


@dataclass(frozen=True)
class FieldSample:
    """Real E and cB 3-vectors at a spacetime point."""

    e: np.ndarray
    cb: np.ndarray
    point: SpacetimePoint

    def __post_init__(self) -> None:
        e = np.asarray(self.e, dtype=float).copy()
        cb = np.asarray(self.cb, dtype=float).copy()
        if e.shape != (3,) or cb.shape != (3,):
            raise ValueError("E and cB must be 3-vectors")
        if not (np.all(np.isfinite(e)) and np.all(np.isfinite(cb))):
            raise ValueError(f"non-finite field components at {self.point}")
        e.setflags(write=False)
        cb.setflags(write=False)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "cb", cb)


def rs_of_sample(f: FieldSample) -> RSVector:
    """Pack a field sample into the 4-column (0, E + i cB)."""
    return RSVector(np.concatenate([[0.0 + 0.0j], f.e + 1j * f.cb]))


def _check_variant(variant: str) -> None:
    if variant not in ("I", "II"):
        raise ValueError(f"variant must be 'I' or 'II', got {variant!r}")


def _check_unit(n: np.ndarray) -> None:
    if abs(np.linalg.norm(n) - 1.0) > 1e-12:
        raise ValueError(f"propagation direction must be unit length, |n|={np.linalg.norm(n)!r}")


def plane_wave_z(variant: Variant, k0: float, amplitude: float, p: PointLike) -> FieldSample:
    """Linearly polarized plane wave along +z built from the sine seed.

    Variant I:  E = (0, -k3 A cos phi, 0),  cB = (k0 A cos phi, 0, 0)
    Variant II: E = (k3 A cos phi, 0, 0),   cB = (0, k0 A cos phi, 0)

    with k3 = k0 and phi = k0 x0 - k3 x3.  Both carry Poynting flux along +z
    and are mutually orthogonal in E and in cB.
    """
    _check_variant(variant)
    if k0 <= 0:
        raise ValueError(f"k0 must be positive, got {k0}")
    pt = as_point(p)
    k3 = k0
    c = amplitude * np.cos(k0 * pt.x0 - k3 * pt.x3)
    if variant == "I":
        e = np.array([0.0, -k3 * c, 0.0])
        cb = np.array([k0 * c, 0.0, 0.0])
    else:
        e = np.array([k3 * c, 0.0, 0.0])
        cb = np.array([0.0, k0 * c, 0.0])
    return FieldSample(e, cb, pt)


def plane_wave_general(
    variant: Variant, n: np.ndarray | list[float], k0: float, amplitude: float, p: PointLike
) -> FieldSample:
    """Plane wave along an arbitrary unit direction n.

    Variant I:  E = (n1^2 - 1, n1 n2, n1 n3),  cB = (0, -n3, n2)
    Variant II: E = (n2 n1, n2^2 - 1, n2 n3),  cB = (n3, 0, -n1)

    each times k0 A cos(k0 (x0 - n.x)).  The two variants are independent but
    not orthogonal: E_I . E_II = -n1 n2 times the square of that factor.
    """
    _check_variant(variant)
    if k0 <= 0:
        raise ValueError(f"k0 must be positive, got {k0}")
    n = np.asarray(n, dtype=float)
    _check_unit(n)
    pt = as_point(p)
    x = as_point_array(pt)
    c = k0 * amplitude * np.cos(k0 * (x[0] - n @ x[1:]))
    if variant == "I":
        e = c * np.array([n[0] * n[0] - 1.0, n[0] * n[1], n[0] * n[2]])
        cb = c * np.array([0.0, -n[2], n[1]])
    else:
        e = c * np.array([n[1] * n[0], n[1] * n[1] - 1.0, n[1] * n[2]])
        cb = c * np.array([n[2], 0.0, -n[0]])
    return FieldSample(e, cb, pt)


@dataclass(frozen=True)
class LCFrame:
    """Orthogonal polarization pair (L, C) transverse to a unit direction n."""

    n: np.ndarray
    l: np.ndarray
    c: np.ndarray

    def __post_init__(self) -> None:
        for name in ("n", "l", "c"):
            v = np.asarray(getattr(self, name), dtype=float).copy()
            if v.shape != (3,):
                raise ValueError(f"{name} must be a 3-vector")
            v.setflags(write=False)
            object.__setattr__(self, name, v)


def lc_frame(
    n: np.ndarray | list[float], a: np.ndarray | list[float], b: np.ndarray | list[float]
) -> LCFrame:
    """Build the polarization frame L = n(n.a) - a - b x n, C = n(n.b) - b + a x n.

    The pair satisfies L.C = 0, L.n = C.n = 0 and |L| = |C| with
    |L|^2 = a^2 + b^2 - (n.a)^2 - (n.b)^2 + 2 n.(a x b).
    """
    n = np.asarray(n, dtype=float)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    _check_unit(n)
    l = n * (n @ a) - a - np.cross(b, n)
    c = n * (n @ b) - b + np.cross(a, n)
    return LCFrame(n, l, c)


def plane_wave_lc(frame: LCFrame, k0: float, amplitude: float, p: PointLike) -> FieldSample:
    """Plane wave with polarization read off an L/C frame.

    E = k0 A (cos phi L - sin phi C), cB = k0 A (sin phi L + cos phi C), with
    phi = k0 (x0 - n.x); equivalently E + i cB = k0 A (L + i C) e^{i phi}.
    """
    if k0 <= 0:
        raise ValueError(f"k0 must be positive, got {k0}")
    pt = as_point(p)
    x = as_point_array(pt)
    phi = k0 * (x[0] - frame.n @ x[1:])
    s, c = np.sin(phi), np.cos(phi)
    e = k0 * amplitude * (c * frame.l - s * frame.c)
    cb = k0 * amplitude * (s * frame.l + c * frame.c)
    return FieldSample(e, cb, pt)


def _cylindrical_lam0(freq: float, kz: float, lam3: complex) -> complex:
    # admissibility: -lam0 * freq + i * lam3 * kz = 0
    return 1j * lam3 * kz / freq


def cylindrical_wave(
    freq: float, kz: float, m: int, lam3: complex, p: PointLike
) -> FieldSample:
    """Cylindrical Maxwell field from the Bessel seed, on the admissible ray.

    The only admissible weights for a cylindrical seed are
    lambda_1 = lambda_2 = 0 with -lambda_0 freq + i lambda_3 kz = 0; the
    resulting components are

        E3 + i cB3 = -lambda_3 (freq^2 - kz^2) / freq * Phi
        E1 + i cB1 = -lambda_0 F1 + lambda_3 F2
        E2 + i cB2 = -lambda_0 F2 - lambda_3 F1

    with F the seed gradient.  For kz = +-freq the longitudinal component
    vanishes identically (and with the Bessel profile the transverse ones
    degenerate to zero as well).
    """
    if freq == 0:
        raise ValueError("freq must be nonzero")
    if freq ** 2 < kz ** 2:
        raise ValueError(f"needs freq^2 >= kz^2, got freq={freq}, kz={kz}")
    pt = as_point(p)
    seed = CylindricalSeed(1.0, freq, kz, m)
    f = seed.gradient(pt)
    phi_val = seed.value(pt)
    lam0 = _cylindrical_lam0(freq, kz, lam3)
    psi1 = -lam0 * f[1] + lam3 * f[2]
    psi2 = -lam0 * f[2] - lam3 * f[1]
    psi3 = -lam3 * (freq ** 2 - kz ** 2) / freq * phi_val
    psi = np.array([psi1, psi2, psi3])
    return FieldSample(psi.real, psi.imag, pt)


def cylindrical_wave_special(
    freq: float, kz: float, m: int, lam3: complex, p: PointLike
) -> FieldSample:
    """Closed forms of the cylindrical wave for the degenerate cases kz = +-freq.

    kz = +freq:  E1 + i cB1 = -i lam3 e^{+i phi} (d/drho - m/rho) Phi,
                 E2 + i cB2 = -  lam3 e^{+i phi} (d/drho - m/rho) Phi
    kz = -freq:  E1 + i cB1 = +i lam3 e^{-i phi} (d/drho + m/rho) Phi,
                 E2 + i cB2 = -  lam3 e^{-i phi} (d/drho + m/rho) Phi

    and E3 + i cB3 = 0 in both.  Evaluated through the Bessel ladder
    (d/drho -+ m/rho) J_m = -+ q J_{m +- 1}, independently of the generic
    gradient route.
    """
    if freq == 0:
        raise ValueError("freq must be nonzero")
    if kz not in (freq, -freq):
        raise ValueError(f"special closed forms require kz = +-freq, got kz={kz}, freq={freq}")
    pt = as_point(p)
    x = as_point_array(pt)
    rho = float(np.hypot(x[1], x[2]))
    seed = CylindricalSeed(1.0, freq, kz, m)  # validates domain; q = 0 here
    q = seed.q
    phi_az = float(np.arctan2(x[2], x[1]))
    if rho <= 0:
        raise ValueError("rho must be positive")
    t = np.exp(1j * (freq * x[0] + kz * x[3]))
    if kz == freq:
        radial = -q * special.jv(m + 1, q * rho)  # (d/drho - m/rho) J_m
        ladder = t * np.exp(1j * (m + 1) * phi_az) * radial
        psi1 = -1j * lam3 * ladder
        psi2 = -lam3 * ladder
    else:
        radial = q * special.jv(m - 1, q * rho)  # (d/drho + m/rho) J_m
        ladder = t * np.exp(1j * (m - 1) * phi_az) * radial
        psi1 = 1j * lam3 * ladder
        psi2 = -lam3 * ladder
    psi = np.array([psi1, psi2, 0.0 + 0.0j])
    return FieldSample(psi.real, psi.imag, pt)


@dataclass(frozen=True)
class PolarizationReport:
    """Pointwise polarization diagnostics of a field sample."""

    e_dot_cb: float
    e2_minus_cb2: float
    poynting_direction: np.ndarray | None
    direction_defined: bool
    e_dot_n: float | None = None
    cb_dot_n: float | None = None


def polarization_report(
    f: FieldSample, n: np.ndarray | list[float] | None = None
) -> PolarizationReport:
    """E.cB, |E|^2 - |cB|^2, the unit Poynting direction and transversality.

    The direction is flagged undefined when |E x cB| is negligible relative
    to |E| |cB| (including the zero field).  If a propagation direction n is
    supplied, E.n and cB.n are reported as well.
    """
    s = np.cross(f.e, f.cb)
    mag = float(np.linalg.norm(s))
    scale = float(np.linalg.norm(f.e) * np.linalg.norm(f.cb))
    defined = mag > 1e-12 * scale and mag > 0.0
    direction = s / mag if defined else None
    e_dot_n = cb_dot_n = None
    if n is not None:
        n = np.asarray(n, dtype=float)
        e_dot_n = float(f.e @ n)
        cb_dot_n = float(f.cb @ n)
    return PolarizationReport(
        e_dot_cb=float(f.e @ f.cb),
        e2_minus_cb2=float(f.e @ f.e - f.cb @ f.cb),
        poynting_direction=direction,
        direction_defined=defined,
        e_dot_n=e_dot_n,
        cb_dot_n=cb_dot_n,
    )
