"""Builtin chord collections used as fixtures by the CLI and tests."""

from __future__ import annotations

from typing import Iterable

from .core import PcDistribution, indicator

NOTE_NAMES = ("C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B")

MAJOR = (0, 4, 7)
MINOR = (0, 3, 7)
AUGMENTED = (0, 4, 8)
DIMINISHED = (0, 3, 6)
DIATONIC = (0, 2, 4, 5, 7, 9, 11)


def _transposed(shape: Iterable[int], root: int, modulus: int = 12) -> frozenset[int]:
    return frozenset((p + root) % modulus for p in shape)


def _family(shape, suffix, roots, modulus=12):
    return [
        (NOTE_NAMES[r] + suffix, indicator(_transposed(shape, r, modulus), modulus))
        for r in roots
    ]


def consonant_triads() -> list[tuple[str, PcDistribution]]:
    """The 24 major and minor triads, majors first, roots ascending."""
    return _family(MAJOR, "maj", range(12)) + _family(MINOR, "min", range(12))


def major_triads() -> list[tuple[str, PcDistribution]]:
    return _family(MAJOR, "maj", range(12))


def minor_triads() -> list[tuple[str, PcDistribution]]:
    return _family(MINOR, "min", range(12))


def augmented_triads() -> list[tuple[str, PcDistribution]]:
    """The 4 distinct augmented triads."""
    return _family(AUGMENTED, "aug", range(4))


def diminished_triads() -> list[tuple[str, PcDistribution]]:
    return _family(DIMINISHED, "dim", range(12))


def diatonic_scales() -> list[tuple[str, PcDistribution]]:
    """The 12 diatonic collections, labelled by tonic."""
    return _family(DIATONIC, "dia", range(12))


BUILTIN_SETS = {
    "triads": consonant_triads,
    "diatonic": diatonic_scales,
    "augmented": augmented_triads,
    "diminished": diminished_triads,
}
