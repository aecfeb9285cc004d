"""Covariants of a fourth-order harmonic tensor H.

Conventions: ``H^n = H : H^(n-1)`` with ``(A : B)_ijkl = A_ijmn B_mnkl``,
``(tr13 A)_ij = A_kikj``, ``d2 = tr13 H^2``, ``d3 = tr13 H^3`` and
``c_k = H^(k-2) : d2``.  Juxtaposition of second-order tensors is the matrix
product and ``(.)^s`` the symmetric part.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .notation import kelvin_to_full
from .tensors import (
    EPSILON,
    SymTensor,
    as_array,
    contract,
    cross,
    from_matrix,
    metric,
    symmetrize,
    trace,
    vector,
)


def ddot(t, a) -> np.ndarray:
    """Contract the last two indices of ``t`` with ``a`` (order 2)."""
    return contract(t, a, 2)


def colon(a, b) -> np.ndarray:
    """Double contraction of two fourth-order tensors (last pair with first pair)."""
    return np.einsum("ijmn,mnkl->ijkl", as_array(a), as_array(b))


def tr13(a) -> np.ndarray:
    return np.einsum("kikj->ij", as_array(a))


def eps_dot(m) -> np.ndarray:
    """(eps : m)_i = eps_ijk m_jk, i.e. twice the axial vector of the skew part."""
    return np.einsum("ijk,jk->i", EPSILON, as_array(m))


def symm(m) -> np.ndarray:
    m = as_array(m)
    return 0.5 * (m + m.T)


def _sym2(m) -> SymTensor:
    return SymTensor.from_full(symm(m), check=False)


def harm4_from_params(L1, L2, L3, X1, X2, Y1, Y2, Z1, Z2) -> SymTensor:
    """Harmonic fourth-order tensor from the nine-parameter Kelvin block form."""
    A = np.array([[L2 + L3, -L3, -L2], [-L3, L3 + L1, -L1], [-L2, -L1, L1 + L2]])
    B = np.array([[-X1, Y1 + Y2, -Z2], [-X2, -Y1, Z1 + Z2], [X1 + X2, -Y2, -Z1]])
    C = np.array([[-L1, -Z1, -Y1], [-Z1, -L2, -X1], [-Y1, -X1, -L3]])
    r2 = np.sqrt(2.0)
    kelvin = np.block([[A, r2 * B], [r2 * B.T, 2.0 * C]])
    return SymTensor.from_full(kelvin_to_full(kelvin))


class HarmonicCovariants:
    """Lazy cache of the covariants of one harmonic tensor ``H``.

    Every attribute is computed on first access, so the classifiers only pay
    for what their decision tree actually reaches.
    """

    def __init__(self, H: SymTensor):
        if H.order != 4:
            raise ValueError("expected a fourth-order tensor")
        self.H = H

    @cached_property
    def Hf(self) -> np.ndarray:
        return self.H.full()

    @cached_property
    def H2(self) -> np.ndarray:
        return colon(self.Hf, self.Hf)

    @cached_property
    def H3(self) -> np.ndarray:
        return colon(self.Hf, self.H2)

    @cached_property
    def H4(self) -> np.ndarray:
        return colon(self.Hf, self.H3)

    @cached_property
    def d2(self) -> np.ndarray:
        return symm(tr13(self.H2))

    @cached_property
    def d3(self) -> np.ndarray:
        return symm(tr13(self.H3))

    @cached_property
    def c3(self) -> np.ndarray:
        return ddot(self.Hf, self.d2)

    @cached_property
    def c4(self) -> np.ndarray:
        return ddot(self.Hf, self.c3)

    @cached_property
    def c5(self) -> np.ndarray:
        return ddot(self.Hf, self.c4)

    @cached_property
    def d2sq(self) -> np.ndarray:
        return self.d2 @ self.d2

    @cached_property
    def H2s(self) -> SymTensor:
        return symmetrize(self.H2)

    @cached_property
    def H3s(self) -> SymTensor:
        return symmetrize(self.H3)

    @cached_property
    def HH(self) -> SymTensor:
        """(H . H)^s, order 6."""
        return symmetrize(contract(self.Hf, self.Hf, 1))

    @cached_property
    def v5(self) -> np.ndarray:
        return eps_dot(self.d2 @ self.c3)

    @cached_property
    def v6(self) -> np.ndarray:
        return eps_dot(self.d2 @ self.c4)


# --------------------------------------------------------------------------
# d2, d3, c_k and the Boehler set
# --------------------------------------------------------------------------

def d2(H: SymTensor) -> SymTensor:
    return _sym2(HarmonicCovariants(H).d2)


def d3(H: SymTensor) -> SymTensor:
    return _sym2(HarmonicCovariants(H).d3)


def ck(H: SymTensor, k: int) -> SymTensor:
    if k not in (3, 4, 5):
        raise ValueError("c_k is provided for k = 3, 4, 5")
    return _sym2(getattr(HarmonicCovariants(H), f"c{k}"))


@dataclass(frozen=True)
class BoehlerSet:
    """Second-order covariants d2..d10 and their traces J2..J10."""

    d: dict
    J: dict


def boehler(H: SymTensor) -> BoehlerSet:
    cov = HarmonicCovariants(H)
    D2, Hf = cov.d2, cov.Hf
    D22 = cov.d2sq
    d = {
        2: D2,
        3: cov.d3,
        4: D22,
        5: D2 @ cov.c3,
        6: D22 @ D2,
        7: D22 @ cov.c3,
        8: D22 @ cov.c4,
        9: D22 @ ddot(Hf, D22),
        10: D22 @ ddot(cov.H2, D22),
    }
    J = {k: float(np.trace(m)) for k, m in d.items()}
    return BoehlerSet(d=d, J=J)


def boehler_relation(H: SymTensor) -> float:
    """Residual of 240 J6 + 39 J2^3 + 190 J3^2 - 198 J2 J4 - 540 tr(d3^2)."""
    b = boehler(H)
    J = b.J
    d3m = b.d[3]
    return 240 * J[6] + 39 * J[2] ** 3 + 190 * J[3] ** 2 - 198 * J[2] * J[4] - 540 * float(np.trace(d3m @ d3m))


def cubic_relations(H: SymTensor) -> dict[str, float]:
    """Residuals of the relations satisfied by the Boehler invariants of a cubic H.

    For a generic H these are just polynomial invariants; they all vanish
    when H is cubic.
    """
    J = boehler(H).J
    out = {
        "3J4 - J2^2": 3 * J[4] - J[2] ** 2,
        "30J3^2 - J2^3": 30 * J[3] ** 2 - J[2] ** 3,
        "9J6 - J2^3": 9 * J[6] - J[2] ** 3,
    }
    out.update({f"J{k}": J[k] for k in (5, 7, 8, 9, 10)})
    return out


# --------------------------------------------------------------------------
# the 70-entry minimal covariant basis
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CovariantBasisEntry:
    index: int
    id: str
    degree: int
    order: int
    value: SymTensor


def _basis_table(cov: HarmonicCovariants):
    """Yield (id, degree, thunk) in table order; thunks return arrays or SymTensors."""
    D2, C3, C4, C5, D22 = cov.d2, cov.c3, cov.c4, cov.c5, cov.d2sq
    Hf = cov.Hf
    D3 = cov.d3
    tr = lambda m: float(np.trace(m))
    e = eps_dot
    H1d22 = lambda: symmetrize(contract(Hf, D22, 1))
    # row k of the list is entry #k of the table (q is #0)
    return [
        ("q", 0, lambda: metric()),
        ("I2", 2, lambda: tr(D2)),
        ("I3", 3, lambda: tr(D3)),
        ("I4", 4, lambda: tr(D22)),
        ("I5", 5, lambda: tr(D2 @ D3)),
        ("I6", 6, lambda: tr(D22 @ D2)),
        ("I7", 7, lambda: tr(D22 @ D3)),
        ("I8", 8, lambda: tr(D2 @ D3 @ D3)),
        ("I9", 9, lambda: tr(D3 @ D3 @ D3)),
        ("I10", 10, lambda: tr(D22 @ D3 @ D3)),
        ("v5", 5, lambda: cov.v5),
        ("v6", 6, lambda: cov.v6),
        ("v7a", 7, lambda: e(D22 @ C3)),
        ("v7b", 7, lambda: e(C4 @ C3)),
        ("v8a", 8, lambda: e(D2 @ C3 @ C3)),
        ("v8b", 8, lambda: e(D22 @ C4)),
        ("v9a", 9, lambda: e(D2 @ C4 @ C3)),
        ("v9b", 9, lambda: e(C3 @ D2 @ C4)),
        ("v9c", 9, lambda: e(D2 @ C3 @ C4)),
        ("v10a", 10, lambda: e(D22 @ C3 @ C3)),
        ("v10b", 10, lambda: e(C3 @ C3 @ C4)),
        ("v11a", 11, lambda: e(C3 @ C4 @ C4)),
        ("v11b", 11, lambda: e(D22 @ C3 @ C4)),
        ("v12", 12, lambda: e(D2 @ C3 @ C3 @ C4)),
        ("d2", 2, lambda: D2),
        ("c3", 3, lambda: C3),
        ("c4", 4, lambda: C4),
        ("d2^2", 4, lambda: D22),
        ("c5", 5, lambda: C5),
        ("(d2c3)^s", 5, lambda: symm(D2 @ C3)),
        ("(d2c4)^s", 6, lambda: symm(D2 @ C4)),
        ("c3^2", 6, lambda: C3 @ C3),
        ("(d2^2c3)^s", 7, lambda: symm(D22 @ C3)),
        ("(c4c3)^s", 7, lambda: symm(C4 @ C3)),
        ("(d2c3^2)^s", 8, lambda: symm(D2 @ C3 @ C3)),
        ("c4^2", 8, lambda: C4 @ C4),
        ("(d2^2c5)^s", 9, lambda: symm(D22 @ C5)),
        ("tr(H x d2)", 3, lambda: trace(cross(Hf, D2))),
        ("tr(H x c3)", 4, lambda: trace(cross(Hf, C3))),
        ("d2 x c3", 5, lambda: cross(D2, C3)),
        ("tr(H x d2^2)", 5, lambda: trace(cross(Hf, D22))),
        ("d2 x d2^2", 6, lambda: cross(D2, D22)),
        ("d2 x c4", 6, lambda: cross(D2, C4)),
        ("tr(H x c5)", 6, lambda: trace(cross(Hf, C5))),
        ("d2^2 x c3", 7, lambda: cross(D22, C3)),
        ("c3 x c4", 7, lambda: cross(C3, C4)),
        ("d2 x c5", 7, lambda: cross(D2, C5)),
        ("d2 x c3^2", 8, lambda: cross(D2, C3 @ C3)),
        ("c3 x c5", 8, lambda: cross(C3, C5)),
        ("H", 1, lambda: cov.H),
        ("(H^2)^s", 2, lambda: cov.H2s),
        ("(H^3)^s", 3, lambda: cov.H3s),
        ("(H^4)^s", 4, lambda: symmetrize(cov.H4)),
        ("(H.d2^2)^s", 5, H1d22),
        ("(H^2.d2^2)^s", 6, lambda: symmetrize(contract(cov.H2, D22, 1))),
        ("H x d2", 3, lambda: cross(Hf, D2)),
        ("H x c3", 4, lambda: cross(Hf, C3)),
        ("(H^2)^s x d2", 4, lambda: cross(cov.H2s, D2)),
        ("H x d2^2", 5, lambda: cross(Hf, D22)),
        ("H x c4", 5, lambda: cross(Hf, C4)),
        ("(H^2)^s x c3", 5, lambda: cross(cov.H2s, C3)),
        ("H x c5", 6, lambda: cross(Hf, C5)),
        ("(H.H)^s", 2, lambda: cov.HH),
        ("(H^2.H)^s", 3, lambda: symmetrize(contract(cov.H2, Hf, 1))),
        ("(H^2.H^2)^s", 4, lambda: symmetrize(contract(cov.H2, cov.H2, 1))),
        ("H x (H^2)^s", 3, lambda: cross(Hf, cov.H2s)),
        ("H x (H^3)^s", 4, lambda: cross(Hf, cov.H3s)),
        ("(H^2)^s x (H^3)^s", 5, lambda: cross(cov.H2s, cov.H3s)),
        ("(H.H)^s x H", 3, lambda: cross(cov.HH, Hf)),
        ("(H.H)^s x (H^2)^s", 4, lambda: cross(cov.HH, cov.H2s)),
    ]


def _as_sym(value) -> SymTensor:
    if isinstance(value, SymTensor):
        return value
    if np.isscalar(value) or np.ndim(value) == 0:
        return SymTensor.scalar(float(value))
    value = np.asarray(value, dtype=float)
    if value.ndim == 1:
        return vector(value)
    if value.ndim == 2:
        return from_matrix(symm(value))
    return symmetrize(value)


def eval_basis(H: SymTensor) -> list[CovariantBasisEntry]:
    """Evaluate the 70 entries of the minimal covariant basis (q included as entry 0)."""
    cov = HarmonicCovariants(H)
    out = []
    for index, (ident, degree, thunk) in enumerate(_basis_table(cov)):
        value = _as_sym(thunk())
        out.append(CovariantBasisEntry(index, ident, degree, value.order, value))
    return out


def first_order_covariants(cov: HarmonicCovariants) -> list[np.ndarray]:
    return [as_array(thunk()) for ident, _, thunk in _basis_table(cov) if ident.startswith("v")]


def census(entries) -> dict[tuple[int, int], int]:
    """Multiplicity of each (degree, order) pair."""
    out: dict[tuple[int, int], int] = {}
    for e in entries:
        out[(e.degree, e.order)] = out.get((e.degree, e.order), 0) + 1
    return out


def _rank(rows: list[np.ndarray], tol: float) -> int:
    rows = [r for r in rows if np.linalg.norm(r) > tol]
    if not rows:
        return 0
    m = np.array([r / np.linalg.norm(r) for r in rows])
    s = np.linalg.svd(m, compute_uv=False)
    return int(np.sum(s > tol * s[0]))


def cov_space_dims(H: SymTensor, tol: float = 1e-7) -> tuple[int, int]:
    """Dimensions of the spans of first- and second-order covariants at ``H``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = H.norm()
    Hn = H / n if n > 0 else H
    entries = eval_basis(Hn)
    vecs = [e.value.components for e in entries if e.order == 1]
    seconds = [e.value for e in entries if e.order == 2]
    for i, u in enumerate(vecs):
        for w in vecs[i:]:
            seconds.append(from_matrix(0.5 * (np.outer(u, w) + np.outer(w, u))))
    # compact coordinates weighted so that the Euclidean norm is the Frobenius norm
    weights = np.sqrt([1, 2, 2, 1, 2, 1])
    rows2 = [s.components * weights for s in seconds]
    return _rank(vecs, tol), _rank(rows2, tol)
