"""Spectral units: unit-magnitude spectra connecting homometric distributions.

Two real distributions with identical Fourier magnitudes differ by termwise
multiplication with a unit-magnitude spectrum.  These units form a group under
termwise multiplication, admit k-th roots by phase division, and their powers
generate orbits that move through genuine pc-sets and generalized distributions.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Optional

from .core import (
    PcDistribution,
    Spectrum,
    ZERO_TOL,
    dft,
    idft,
    nearest_pcset,
    principal_angle,
)

UNIT_TOL = 1e-12


class NotHomometricError(ValueError):
    """Raised when two distributions do not share all Fourier magnitudes."""


@dataclass(frozen=True)
class SpectralUnit:
    """Termwise unit-magnitude multiplier in Fourier space."""

    modulus: int
    coeffs: tuple[complex, ...]

    def __post_init__(self):
        cs = tuple(complex(v) for v in self.coeffs)
        if len(cs) != self.modulus:
            raise ValueError(f"expected {self.modulus} coefficients, got {len(cs)}")
        for t, v in enumerate(cs):
            if abs(abs(v) - 1.0) > 1e-9:
                raise ValueError(f"coefficient {t} has magnitude {abs(v)}, not 1")
        # renormalize so the unit-magnitude invariant holds to rounding error
        object.__setattr__(self, "coeffs", tuple(v / abs(v) for v in cs))


def identity_unit(modulus: int = 12) -> SpectralUnit:
    return SpectralUnit(modulus, (1.0 + 0j,) * modulus)


def transposition_unit(t: int, modulus: int = 12) -> SpectralUnit:
    """The unit effecting transposition by t semitones."""
    return SpectralUnit(
        modulus,
        tuple(cmath.exp(-2j * cmath.pi * k * t / modulus) for k in range(modulus)),
    )


def unit_between(
    a: PcDistribution,
    b: PcDistribution,
    zero_policy: float = 0.0,
    tol: float = ZERO_TOL,
) -> SpectralUnit:
    """The unit u with u x dft(a) = dft(b), slotwise.

    Raises NotHomometricError when the magnitude profiles differ beyond tol.
    Slots where both spectra vanish are unconstrained and take the angle
    `zero_policy`.
    """
    if a.modulus != b.modulus:
        raise ValueError("modulus mismatch")
    sa, sb = dft(a).coeffs, dft(b).coeffs
    coeffs = []
    for t in range(a.modulus):
        ma, mb = abs(sa[t]), abs(sb[t])
        if abs(ma - mb) > max(tol, 1e-9):
            raise NotHomometricError(
                f"magnitudes differ at coefficient {t}: {ma} vs {mb}"
            )
        if ma < tol and mb < tol:
            coeffs.append(cmath.exp(1j * zero_policy))
        elif ma < tol or mb < tol:
            raise NotHomometricError(
                f"coefficient {t} vanishes on one side only"
            )
        else:
            ratio = sb[t] / sa[t]
            coeffs.append(ratio / abs(ratio))
    return SpectralUnit(a.modulus, tuple(coeffs))


def unit_multiply(u: SpectralUnit, v: SpectralUnit) -> SpectralUnit:
    if u.modulus != v.modulus:
        raise ValueError("modulus mismatch")
    return SpectralUnit(u.modulus, tuple(x * y for x, y in zip(u.coeffs, v.coeffs)))


def unit_power(u: SpectralUnit, n: int) -> SpectralUnit:
    """n-th termwise power; negative n uses the conjugate (group inverse)."""
    return SpectralUnit(
        u.modulus,
        tuple(cmath.exp(1j * n * cmath.phase(x)) for x in u.coeffs),
    )


def unit_root(u: SpectralUnit, k: int) -> SpectralUnit:
    """k-th root by dividing each principal phase (in (-pi, pi]) by k."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    return SpectralUnit(
        u.modulus,
        tuple(cmath.exp(1j * principal_angle(cmath.phase(x)) / k) for x in u.coeffs),
    )


def unit_order(u: SpectralUnit, max_order: int, tol: float = 1e-9) -> Optional[int]:
    """Smallest n <= max_order with u^n = identity, or None if none is found.

    The identity test is numerical (per-coefficient phase distance below tol),
    so an infinite-order unit is only ever reported as None.
    """
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    angles = [principal_angle(cmath.phase(x)) for x in u.coeffs]
    for n in range(1, max_order + 1):
        if all(abs(principal_angle(n * a)) < tol for a in angles):
            return n
    return None


def apply_unit(u: SpectralUnit, d: PcDistribution) -> PcDistribution:
    """Multiply the spectrum of d by u and transform back to pc space."""
    if u.modulus != d.modulus:
        raise ValueError("modulus mismatch")
    s = dft(d)
    return idft(Spectrum(d.modulus, tuple(x * a for x, a in zip(u.coeffs, s.coeffs))))


def orbit(
    u: SpectralUnit,
    start: PcDistribution,
    n_steps: int,
    tol: float = 1e-6,
) -> list[tuple[PcDistribution, Optional[frozenset[int]]]]:
    """Elements idft(u^k x dft(start)) for k = 1..n_steps.

    Each element is paired with the pc-set it realizes (via nearest_pcset at
    `tol`), or None for a generalized distribution.
    """
    if n_steps < 1:
        raise ValueError("n_steps must be >= 1")
    s = dft(start).coeffs
    out = []
    for k in range(1, n_steps + 1):
        uk = unit_power(u, k)
        element = idft(
            Spectrum(start.modulus, tuple(x * a for x, a in zip(uk.coeffs, s)))
        )
        out.append((element, nearest_pcset(element, tol)))
    return out
