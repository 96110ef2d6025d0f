"""Scikit-learn compatible wrappers around the phase-coordinate machinery."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .core import ZERO_TOL


class PhaseCoordinates(TransformerMixin, BaseEstimator):
    """Transform pitch-class weight vectors into torus phase coordinates.

    Rows of X are real pitch-class weight vectors of length `modulus` (an
    indicator row is an ordinary pc-set).  The output has two columns,
    (arg a_j, arg a_k); a vanishing coefficient yields NaN, the free angle.
    """

    def __init__(self, j: int = 3, k: int = 5, modulus: int = 12):
        self.j = j
        self.k = k
        self.modulus = modulus

    def fit(self, X, y=None):
        X = check_array(X)
        if X.shape[1] != self.modulus:
            raise ValueError(
                f"expected {self.modulus} columns, got {X.shape[1]}"
            )
        half = self.modulus // 2
        if not (1 <= self.j <= half and 1 <= self.k <= half and self.j != self.k):
            raise ValueError(f"bad coefficient selection ({self.j},{self.k})")
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "n_features_in_")
        X = check_array(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError("column count changed between fit and transform")
        c = self.modulus
        k_idx = np.arange(c)
        out = np.empty((X.shape[0], 2))
        for col, m in enumerate((self.j, self.k)):
            coeff = X @ np.exp(-2j * np.pi * k_idx * m / c)
            angles = np.angle(coeff)
            angles[np.abs(coeff) < ZERO_TOL] = np.nan
            out[:, col] = angles
        return out


def pairwise_torus_distances(
    P: np.ndarray, Q: np.ndarray | None = None, weights=(1.0, 1.0)
) -> np.ndarray:
    """Quotient-metric distances between rows of two coordinate arrays.

    NaN marks a free angle; a coordinate free on either side contributes 0.
    """
    P = np.asarray(P, dtype=float)
    Q = P if Q is None else np.asarray(Q, dtype=float)
    diff = P[:, None, :] - Q[None, :, :]
    wrapped = np.pi - np.mod(np.pi - diff, 2 * np.pi)
    wrapped = np.where(np.isnan(wrapped), 0.0, wrapped)
    wrapped *= np.asarray(weights)
    return np.sqrt((wrapped**2).sum(axis=2))
