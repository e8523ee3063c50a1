"""Dual and phase transformations of fields, and the formal source map.

Multiplying the Riemann-Silberstein column by i sends E -> -cB, cB -> E and
maps vacuum solutions to vacuum solutions; the continuous version multiplies
E + i cB by a phase e^{i chi}.  With both electric and magnetic sources the
dual becomes a symmetry of the extended equations through a matching rotation
of the source tuple.  Only the data transformations live here; nothing is
solved.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .waves import FieldSample

__all__ = ["SourceTuple", "dual_transform", "dual_transform_sources", "phase_transform"]


@dataclass(frozen=True)
class SourceTuple:
    """Electric/magnetic charge and current densities (units with eps0 = 1)."""

    rho_e: float = 0.0
    rho_m: float = 0.0
    j_e: tuple[float, float, float] = (0.0, 0.0, 0.0)
    j_m: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self) -> None:
        je = tuple(float(v) for v in np.asarray(self.j_e, dtype=float))
        jm = tuple(float(v) for v in np.asarray(self.j_m, dtype=float))
        if len(je) != 3 or len(jm) != 3:
            raise ValueError("currents must be 3-vectors")
        values = (self.rho_e, self.rho_m, *je, *jm)
        if not np.all(np.isfinite(values)):
            raise ValueError("sources must be finite")
        object.__setattr__(self, "j_e", je)
        object.__setattr__(self, "j_m", jm)


def dual_transform(f: FieldSample) -> FieldSample:
    """E -> -cB, cB -> +E (multiplication of E + i cB by i)."""
    return FieldSample(-f.cb, f.e, f.point)


def phase_transform(f: FieldSample, chi: float) -> FieldSample:
    """Rotate E + i cB by e^{i chi}; chi = pi/2 reproduces the dual transform."""
    c, s = np.cos(chi), np.sin(chi)
    return FieldSample(c * f.e - s * f.cb, s * f.e + c * f.cb, f.point)


def dual_transform_sources(src: SourceTuple) -> SourceTuple:
    """Source rotation accompanying the dual transform.

    rho_e -> -rho_m,  j_e -> +j_m,  rho_m -> +rho_e,  j_m -> -j_e.
    """
    return SourceTuple(
        rho_e=-src.rho_m,
        rho_m=+src.rho_e,
        j_e=src.j_m,
        j_m=tuple(-v for v in src.j_e),
    )
