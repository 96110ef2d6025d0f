"""Pitch-class distributions over Z_c and their discrete Fourier transforms.

A distribution assigns a complex "quantity of pc" to each of the c pitch
classes.  Genuine pc-sets are the 0/1 indicator distributions; multisets and
arbitrary real or complex distributions flow through the same operations.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

#: magnitudes below this are treated as an exactly vanishing coefficient
ZERO_TOL = 1e-9


@dataclass(frozen=True)
class PcDistribution:
    """Complex-valued map on Z_modulus, indexed by pitch class."""

    modulus: int
    values: tuple[complex, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be a positive integer")
        vals = tuple(complex(v) for v in self.values)
        if len(vals) != self.modulus:
            raise ValueError(
                f"expected {self.modulus} values, got {len(vals)}"
            )
        object.__setattr__(self, "values", vals)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.values, dtype=complex)

    def is_real(self, tol: float = ZERO_TOL) -> bool:
        return all(abs(v.imag) <= tol for v in self.values)

    def is_indicator(self, tol: float = ZERO_TOL) -> bool:
        return all(
            abs(v.imag) <= tol and (abs(v.real) <= tol or abs(v.real - 1) <= tol)
            for v in self.values
        )

    def is_multiset(self, tol: float = ZERO_TOL) -> bool:
        return all(
            abs(v.imag) <= tol
            and v.real >= -tol
            and abs(v.real - round(v.real)) <= tol
            for v in self.values
        )


@dataclass(frozen=True)
class Spectrum:
    """Fourier coefficients a_0 .. a_{c-1} of a distribution."""

    modulus: int
    coeffs: tuple[complex, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be a positive integer")
        cs = tuple(complex(v) for v in self.coeffs)
        if len(cs) != self.modulus:
            raise ValueError(
                f"expected {self.modulus} coefficients, got {len(cs)}"
            )
        object.__setattr__(self, "coeffs", cs)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=complex)


@dataclass(frozen=True)
class IntervalVector:
    """Unordered pairwise interval-class counts; entry 0 is the cardinality."""

    counts: tuple[int, ...]


def from_values(values: Iterable[complex], modulus: Optional[int] = None) -> PcDistribution:
    """Build a distribution from raw values; modulus defaults to their count."""
    vals = tuple(complex(v) for v in values)
    return PcDistribution(modulus if modulus is not None else len(vals), vals)


def indicator(pcs: Iterable[int], modulus: int = 12) -> PcDistribution:
    """0/1 characteristic distribution of a set of residues (duplicates collapse)."""
    reduced = {int(p) % modulus for p in pcs}
    return PcDistribution(
        modulus, tuple(1.0 + 0j if k in reduced else 0j for k in range(modulus))
    )


def _dft_matrix(c: int, sign: float) -> np.ndarray:
    k = np.arange(c)
    return np.exp(sign * 2j * np.pi * np.outer(k, k) / c)


def dft(d: PcDistribution) -> Spectrum:
    """Direct O(c^2) Fourier transform: a_t = sum_k f(k) e^{-2i pi k t / c}."""
    c = d.modulus
    coeffs = _dft_matrix(c, -1.0) @ d.array
    return Spectrum(c, tuple(coeffs))


def idft(s: Spectrum) -> PcDistribution:
    """Inverse transform f(k) = (1/c) sum_t a_t e^{+2i pi k t / c}."""
    c = s.modulus
    values = (_dft_matrix(c, +1.0) @ s.array) / c
    return PcDistribution(c, tuple(values))


def transpose(d: PcDistribution, t: int) -> PcDistribution:
    """Cyclic shift by t semitones; rotates coefficient k by -2 pi k t / c."""
    c = d.modulus
    return PcDistribution(c, tuple(d.values[(k - t) % c] for k in range(c)))


def invert(d: PcDistribution, axis: int = 0) -> PcDistribution:
    """Inversion k -> axis - k (mod c); conjugates the spectrum when axis = 0."""
    c = d.modulus
    return PcDistribution(c, tuple(d.values[(axis - k) % c] for k in range(c)))


def interval_content(pcs: Iterable[int], modulus: int = 12) -> IntervalVector:
    """Interval vector: counts[d] = number of unordered pairs at interval class d."""
    reduced = sorted({int(p) % modulus for p in pcs})
    counts = [0] * (modulus // 2 + 1)
    counts[0] = len(reduced)
    for i, x in enumerate(reduced):
        for y in reduced[i + 1 :]:
            diff = (y - x) % modulus
            counts[min(diff, modulus - diff)] += 1
    return IntervalVector(tuple(counts))


def magnitudes(s: Spectrum) -> tuple[float, ...]:
    return tuple(abs(a) for a in s.coeffs)


def phases(s: Spectrum, tol: float = ZERO_TOL) -> tuple[Optional[float], ...]:
    """Principal phases in (-pi, pi]; None where the coefficient vanishes."""
    return tuple(
        None if abs(a) < tol else principal_angle(cmath.phase(a)) for a in s.coeffs
    )


def principal_angle(x: float) -> float:
    """Reduce an angle into the canonical range (-pi, pi]."""
    return math.pi - (math.pi - x) % (2 * math.pi)


def nearest_pcset(d: PcDistribution, tol: float) -> Optional[frozenset[int]]:
    """The pc-set a distribution approximates within tol, or None if there is none.

    Every component must be within tol of 0 or 1 (and near-real); otherwise the
    distribution is a generalized one and None is returned.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    members = set()
    for k, v in enumerate(d.values):
        if abs(v.imag) >= tol:
            return None
        if abs(v.real - 1) < tol:
            members.add(k)
        elif not abs(v.real) < tol:
            return None
    return frozenset(members)
