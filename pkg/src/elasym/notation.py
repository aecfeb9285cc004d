"""Voigt and Kelvin 6x6 views of fourth-order tensors with minor and major symmetries.

Index order is (11, 22, 33, 23, 13, 12).  Voigt carries no scale factors; the
Kelvin matrix is ``P @ voigt @ P`` with ``P = diag(1, 1, 1, sqrt2, sqrt2, sqrt2)``.
"""

import numpy as np

VOIGT_PAIRS = ((0, 0), (1, 1), (2, 2), (1, 2), (0, 2), (0, 1))
KELVIN_SCALE = np.array([1.0, 1.0, 1.0, np.sqrt(2.0), np.sqrt(2.0), np.sqrt(2.0)])

_PAIR_INDEX = np.empty((3, 3), dtype=int)
for _k, (_i, _j) in enumerate(VOIGT_PAIRS):
    _PAIR_INDEX[_i, _j] = _PAIR_INDEX[_j, _i] = _k


def voigt_to_full(m) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    return m[np.ix_(_PAIR_INDEX.ravel(), _PAIR_INDEX.ravel())].reshape(3, 3, 3, 3)


def full_to_voigt(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    rows = [t[i, j][tuple(np.array(VOIGT_PAIRS).T)] for i, j in VOIGT_PAIRS]
    return np.array(rows)


def kelvin_to_voigt(m) -> np.ndarray:
    return np.asarray(m, dtype=float) / np.outer(KELVIN_SCALE, KELVIN_SCALE)


def voigt_to_kelvin(m) -> np.ndarray:
    return np.asarray(m, dtype=float) * np.outer(KELVIN_SCALE, KELVIN_SCALE)


def kelvin_to_full(m) -> np.ndarray:
    return voigt_to_full(kelvin_to_voigt(m))


def full_to_kelvin(t) -> np.ndarray:
    return voigt_to_kelvin(full_to_voigt(t))


# upper triangle of the Voigt matrix, row by row
COMPONENTS21 = tuple((r, c) for r in range(6) for c in range(r, 6))


def voigt_from_components21(values) -> np.ndarray:
    values = np.asarray(values, dtype=float).ravel()
    if values.size != 21:
        raise ValueError(f"expected 21 components, got {values.size}")
    m = np.zeros((6, 6))
    for v, (r, c) in zip(values, COMPONENTS21):
        m[r, c] = m[c, r] = v
    return m


def components21_from_voigt(m) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    return np.array([m[r, c] for r, c in COMPONENTS21])
