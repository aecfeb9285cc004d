"""Symmetry class of a finite family of symmetric second-order tensors.

The decision only needs three covariant tests on deviators: ``a x a^2``
(one tensor is orthotropic), ``a x b`` (a pair shares a transversely isotropic
axis) and the commutator vector ``tr(a x b)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

import numpy as np

from .classes import SymmetryClass
from .tensors import EPSILON, as_array, cross, trace

DEFAULT_TOL = 1e-8


def _mat(a) -> np.ndarray:
    m = as_array(a)
    if m.shape != (3, 3):
        raise ValueError("expected a second-order tensor")
    return 0.5 * (m + m.T)


def _sym_last3(t: np.ndarray) -> np.ndarray:
    axes = t.ndim - 3
    lead = tuple(range(axes))
    return sum(t.transpose(lead + tuple(axes + p for p in perm)) for perm in permutations(range(3))) / 6.0


def pair_crosses(U: np.ndarray, V: np.ndarray) -> np.ndarray:
    """All products ``U[i] x V[j]`` as dense symmetric arrays of shape (m, n, 3, 3, 3)."""
    return _sym_last3(np.einsum("apq,ipr,jqs->ijars", EPSILON, U, V))


def commutator_vector(a, b) -> np.ndarray:
    """tr(a x b); it vanishes exactly when a and b commute."""
    return trace(cross(_mat(a), _mat(b))).components


def is_orthotropic_single(a, tol: float = DEFAULT_TOL) -> bool:
    m = _mat(a)
    n = np.linalg.norm(m)
    if n == 0:
        return False
    return cross(m, m @ m).norm() > tol * n**3


@dataclass(frozen=True)
class FamilyReport:
    cls: SymmetryClass
    axis: np.ndarray | None = None  # monoclinic axis when found


def _unit_deviators(family: Sequence, tol: float) -> list[np.ndarray]:
    mats = [_mat(a) for a in family]
    sizes = [np.linalg.norm(m) for m in mats]
    top = max(sizes)
    out = []
    for m, n in zip(mats, sizes):
        if n == 0 or n <= tol * top:
            continue
        dev = m - np.trace(m) / 3.0 * np.eye(3)
        dn = np.linalg.norm(dev)
        if dn > tol * n:
            out.append(dev / dn)
    return out


def analyse_family(family: Sequence, tol: float = DEFAULT_TOL) -> FamilyReport:
    if len(family) == 0:
        raise ValueError("empty family")
    if tol <= 0:
        raise ValueError("tol must be positive")
    units = _unit_deviators(family, tol)
    if not units:
        return FamilyReport(SymmetryClass.ISOTROPIC)
    U = np.array(units)
    m = len(units)
    pairs = pair_crosses(U, U)
    pair_norm = np.sqrt((pairs**2).sum(axis=(2, 3, 4)))
    self_norm = np.sqrt((_sym_last3(np.einsum("apq,ipr,iqs->iars", EPSILON, U, U @ U)) ** 2).sum(axis=(1, 2, 3)))

    for j in range(m):
        if self_norm[j] <= tol and np.all(pair_norm[j] <= tol):
            return FamilyReport(SymmetryClass.TRANSVERSELY_ISOTROPIC)

    omegas = np.einsum("ijkka->ija", pairs)
    omega_norm = np.linalg.norm(omegas, axis=2)
    if np.all(omega_norm <= tol):
        if np.any(self_norm > tol) or np.any(pair_norm > tol):
            return FamilyReport(SymmetryClass.ORTHOTROPIC)
        return FamilyReport(SymmetryClass.TRANSVERSELY_ISOTROPIC)

    i, j = np.unravel_index(np.argmax(omega_norm), omega_norm.shape)
    w = omegas[i, j] / omega_norm[i, j]
    images = U @ w
    if np.all(np.linalg.norm(np.cross(images, w), axis=1) <= tol):
        return FamilyReport(SymmetryClass.MONOCLINIC, axis=w)
    return FamilyReport(SymmetryClass.TRICLINIC)


def classify_family(family: Sequence, tol: float = DEFAULT_TOL) -> SymmetryClass:
    """Symmetry class of ``(a_1, ..., a_n)``, one of the five family classes.

    Each member is rescaled so that only directions matter: members that are
    negligible against the largest one are dropped, members whose deviator is
    negligible against themselves count as isotropic, the remaining deviators
    are normalized to unit Frobenius norm and every vanishing test compares a
    norm with ``tol``.
    """
    return analyse_family(family, tol).cls


def orthotropic_combination(a, b, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Return ``alpha a + beta b`` that is orthotropic (``x x x^2 != 0``).

    Raises ``ValueError`` when the pair is isotropic or transversely isotropic,
    in which case no such combination exists.
    """
    A, B = _mat(a), _mat(b)
    if is_orthotropic_single(A, tol):
        return A
    if is_orthotropic_single(B, tol):
        return B
    if classify_family([A, B], tol) in (SymmetryClass.ISOTROPIC, SymmetryClass.TRANSVERSELY_ISOTROPIC):
        raise ValueError("the pair is at least transversely isotropic; no orthotropic combination exists")
    da = A - np.trace(A) / 3 * np.eye(3)
    db = B - np.trace(B) / 3 * np.eye(3)
    k = np.sum(da * db) / np.sum(db * db)
    a_tilde = da - k * db
    if is_orthotropic_single(a_tilde, tol):
        return A - k * B
    for t in (0.0, 1.0, -1.0, 2.0, -2.0, 0.5, -0.5, 3.0, -3.0):
        d = t * a_tilde + (1 - t) * db
        nd = np.linalg.norm(d)
        if nd == 0:
            continue
        d = d / nd
        p = np.trace(d @ d) ** 3 - 6 * np.trace(d @ d @ d) ** 2
        if abs(p) > tol:
            return t * A + (1 - t - t * k) * B
    raise ValueError("no orthotropic combination found on the scan set")
