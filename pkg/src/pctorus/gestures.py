"""Continuous chord gestures: coefficient rotations and nearest-point queries.

A full rotation by a real parameter t rotates coefficient m by -2 pi m t / c
(mirror coefficients conjugately, so the sampled distributions stay real) and
coincides with discrete transposition at integer t.  A restricted rotation
moves only the two selected coefficients and their mirrors, keeping everything
else fixed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

from .core import PcDistribution, Spectrum, dft, idft
from .torus import TorusLocus, TorusSelection, chord_locus, phase_coords, torus_distance

GOLDEN = (math.sqrt(5) - 1) / 2


def continuous_transpose(d: PcDistribution, t: float) -> PcDistribution:
    """Transposition by a possibly fractional number of semitones.

    For even c the self-mirror coefficient c/2 cannot rotate without breaking
    realness; it is scaled by cos(pi t), which agrees with e^{-i pi t} at every
    integer t.
    """
    c = d.modulus
    coeffs = list(dft(d).coeffs)
    for m in range(1, c // 2 + (c % 2)):
        rot = cmath.exp(-2j * math.pi * m * t / c)
        coeffs[m] *= rot
        coeffs[c - m] *= rot.conjugate()
    if c % 2 == 0 and c >= 2:
        coeffs[c // 2] *= math.cos(math.pi * t)
    return idft(Spectrum(c, tuple(coeffs)))


def restricted_rotation(
    d: PcDistribution, sel: TorusSelection, theta_j: float, theta_k: float
) -> PcDistribution:
    """Rotate only the selected coefficients (mirrors conjugately)."""
    c = d.modulus
    sel.validate_modulus(c)
    coeffs = list(dft(d).coeffs)
    for index, theta in ((sel.j, theta_j), (sel.k, theta_k)):
        if c % 2 == 0 and index == c // 2:
            coeffs[index] *= math.cos(theta)
        else:
            rot = cmath.exp(1j * theta)
            coeffs[index] *= rot
            coeffs[c - index] *= rot.conjugate()
    return idft(Spectrum(c, tuple(coeffs)))


@dataclass(frozen=True)
class GesturePath:
    """Parametrized curve of distributions for t in [0, modulus).

    With selection None every coefficient rotates (a continuous transposition
    line); with a selection only the two chosen coefficients move, at the
    rotation speeds -2 pi j / c and -2 pi k / c.
    """

    base: PcDistribution
    selection: Optional[TorusSelection] = None
    resolution: int = 256

    def __post_init__(self):
        if self.resolution < 1:
            raise ValueError("resolution must be a positive integer")
        if self.selection is not None:
            self.selection.validate_modulus(self.base.modulus)

    def at(self, t: float) -> PcDistribution:
        if self.selection is None:
            return continuous_transpose(self.base, t)
        c = self.base.modulus
        return restricted_rotation(
            self.base,
            self.selection,
            -2 * math.pi * self.selection.j * t / c,
            -2 * math.pi * self.selection.k * t / c,
        )


def path_polyline(
    path: GesturePath, sel: TorusSelection
) -> list[tuple[float, TorusLocus]]:
    """Sample the path at t = i * c / resolution, i = 0..resolution-1."""
    if path.resolution < 2:
        raise ValueError("resolution must be >= 2 to draw a polyline")
    c = path.base.modulus
    return [
        (i * c / path.resolution, chord_locus(path.at(i * c / path.resolution), sel))
        for i in range(path.resolution)
    ]


def nearest_on_path(
    target: PcDistribution,
    path: GesturePath,
    sel: TorusSelection,
    samples: int = 4096,
) -> tuple[float, float]:
    """Global minimizer of the torus distance from the path to `target`.

    Dense sampling over [0, c) followed by golden-section refinement of the
    best bracket; ties resolve to the smallest parameter.
    """
    if samples < 4096:
        samples = 4096
    c = path.base.modulus
    target_locus = chord_locus(target, sel)

    def objective(t: float) -> float:
        return torus_distance(chord_locus(path.at(t), sel), target_locus, sel)

    step = c / samples
    best_i, best_d = 0, math.inf
    for i in range(samples):
        dist = objective(i * step)
        if dist < best_d - 1e-15:
            best_i, best_d = i, dist

    # refine within one sample step on each side of the best grid point
    lo, hi = (best_i - 1) * step, (best_i + 1) * step
    a, b = lo, hi
    x1 = b - GOLDEN * (b - a)
    x2 = a + GOLDEN * (b - a)
    f1, f2 = objective(x1), objective(x2)
    while b - a > 1e-7:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - GOLDEN * (b - a)
            f1 = objective(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + GOLDEN * (b - a)
            f2 = objective(x2)
    t_star = (a + b) / 2 % c
    return t_star, objective(t_star)
