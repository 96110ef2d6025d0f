"""Phase coordinates on a two-coefficient torus and the quotient metric.

A chord is placed on the torus by the pair (arg a_j, arg a_k) of its selected
Fourier coefficients.  When a selected coefficient vanishes the corresponding
angle is free: the chord occupies a whole circle (or the whole torus), and
distances minimize over the free parameter.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .core import PcDistribution, Spectrum, ZERO_TOL, dft, principal_angle

#: weight on the arg(a_5) difference that evens out the three Tonnetz
#: neighbour distances of every consonant triad (published rounding: 0.7365)
TONNETZ_WEIGHT = math.sqrt((24 * math.atan(0.5) - 3 * math.pi) / math.pi)


@dataclass(frozen=True)
class TorusSelection:
    """Choice of coefficient pair (j, k) and per-coordinate metric weights."""

    j: int
    k: int
    weight_j: float = 1.0
    weight_k: float = 1.0

    def __post_init__(self):
        if self.j < 1 or self.k < 1:
            raise ValueError("coefficient indices must be >= 1")
        if self.j == self.k:
            raise ValueError("coefficient indices must differ")
        if self.weight_j <= 0 or self.weight_k <= 0:
            raise ValueError("weights must be positive")

    def validate_modulus(self, modulus: int) -> None:
        half = modulus // 2
        if self.j > half or self.k > half:
            raise ValueError(
                f"selection ({self.j},{self.k}) out of range for modulus {modulus}"
            )


SELECTION_35 = TorusSelection(3, 5)
SELECTION_35_WEIGHTED = TorusSelection(3, 5, weight_k=0.7365)
SELECTION_45 = TorusSelection(4, 5)


class LocusKind(enum.Enum):
    POINT = "point"
    CIRCLE_FREE_J = "circle_free_j"
    CIRCLE_FREE_K = "circle_free_k"
    FULL_TORUS = "full_torus"


@dataclass(frozen=True)
class TorusLocus:
    """A point or circle on the torus; a free angle is stored as None."""

    angle_j: Optional[float]
    angle_k: Optional[float]

    def __post_init__(self):
        for name in ("angle_j", "angle_k"):
            a = getattr(self, name)
            if a is not None:
                object.__setattr__(self, name, principal_angle(float(a)))

    @property
    def kind(self) -> LocusKind:
        if self.angle_j is None and self.angle_k is None:
            return LocusKind.FULL_TORUS
        if self.angle_j is None:
            return LocusKind.CIRCLE_FREE_J
        if self.angle_k is None:
            return LocusKind.CIRCLE_FREE_K
        return LocusKind.POINT


def wrap_difference(a: float, b: float) -> float:
    """Representative of a - b in [-pi, pi] (the quotient-metric minimum)."""
    return principal_angle(a - b)


def phase_coords(s: Spectrum, sel: TorusSelection, tol: float = ZERO_TOL) -> TorusLocus:
    """Locus of a spectrum on the selected torus."""
    sel.validate_modulus(s.modulus)
    aj, ak = s.coeffs[sel.j], s.coeffs[sel.k]
    return TorusLocus(
        angle_j=None if abs(aj) < tol else math.atan2(aj.imag, aj.real),
        angle_k=None if abs(ak) < tol else math.atan2(ak.imag, ak.real),
    )


def torus_distance(p: TorusLocus, q: TorusLocus, sel: TorusSelection) -> float:
    """Weighted quotient distance; a coordinate free on either side contributes 0."""
    dj = 0.0
    if p.angle_j is not None and q.angle_j is not None:
        dj = sel.weight_j * wrap_difference(p.angle_j, q.angle_j)
    dk = 0.0
    if p.angle_k is not None and q.angle_k is not None:
        dk = sel.weight_k * wrap_difference(p.angle_k, q.angle_k)
    return math.hypot(dj, dk)


def chord_locus(d: PcDistribution, sel: TorusSelection) -> TorusLocus:
    return phase_coords(dft(d), sel)


def distance_table(chords: Sequence[PcDistribution], sel: TorusSelection) -> np.ndarray:
    """Symmetric matrix of pairwise torus distances, zero diagonal."""
    if not chords:
        raise ValueError("chord list must be nonempty")
    loci = [chord_locus(d, sel) for d in chords]
    n = len(loci)
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            out[i, j] = out[j, i] = torus_distance(loci[i], loci[j], sel)
    return out


def nearest_neighbors(
    chords: Sequence[tuple[str, PcDistribution]],
    target: str,
    n: int,
    sel: TorusSelection,
) -> list[tuple[str, float]]:
    """The n nearest labelled chords to `target`, ties broken by input order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    labels = [label for label, _ in chords]
    if target not in labels:
        raise KeyError(f"unknown label: {target!r}")
    table = distance_table([d for _, d in chords], sel)
    ti = labels.index(target)
    ranked = sorted(
        ((table[ti, i], i) for i in range(len(labels)) if i != ti),
        key=lambda pair: (pair[0], pair[1]),
    )
    return [(labels[i], dist) for dist, i in ranked[:n]]
