"""Elasticity tensors: Voigt and Kelvin views, harmonic decomposition, symmetry class."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classes import ELASTICITY_CLASSES, SymmetryClass
from .h4classify import JointReport, classify_joint
from .notation import full_to_voigt, kelvin_to_voigt, voigt_to_full, voigt_to_kelvin
from .sym2 import DEFAULT_TOL
from .tensors import SymTensor, as_array, rotate_full, symmetrize, trace

Q = np.eye(3)


def _minor_major_residual(t: np.ndarray) -> float:
    return max(
        np.abs(t - t.transpose(1, 0, 2, 3)).max(),
        np.abs(t - t.transpose(0, 1, 3, 2)).max(),
        np.abs(t - t.transpose(2, 3, 0, 1)).max(),
    )


class ElasticityTensor:
    """A fourth-order tensor with minor and major symmetries, stored as its Voigt matrix."""

    __slots__ = ("_voigt",)

    def __init__(self, voigt: np.ndarray):
        m = np.array(voigt, dtype=float)
        m.flags.writeable = False
        self._voigt = m

    @classmethod
    def from_voigt(cls, m, atol: float = 1e-12) -> "ElasticityTensor":
        m = np.asarray(m, dtype=float)
        if m.shape != (6, 6):
            raise ValueError(f"expected a 6x6 matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("matrix has non-finite entries")
        scale = max(1.0, float(np.abs(m).max()))
        if np.abs(m - m.T).max() > atol * scale:
            raise ValueError("Voigt matrix is not symmetric")
        return cls(0.5 * (m + m.T))

    @classmethod
    def from_kelvin(cls, m, atol: float = 1e-12) -> "ElasticityTensor":
        return cls.from_voigt(kelvin_to_voigt(m), atol)

    @classmethod
    def from_full(cls, t, atol: float = 1e-12) -> "ElasticityTensor":
        t = np.asarray(t, dtype=float)
        if t.shape != (3, 3, 3, 3):
            raise ValueError("expected a 3x3x3x3 array")
        scale = max(1.0, float(np.abs(t).max()))
        if _minor_major_residual(t) > atol * scale:
            raise ValueError("tensor lacks the minor or major index symmetries")
        return cls(full_to_voigt(t))

    def to_voigt(self) -> np.ndarray:
        return self._voigt.copy()

    def to_kelvin(self) -> np.ndarray:
        return voigt_to_kelvin(self._voigt)

    def full(self) -> np.ndarray:
        return voigt_to_full(self._voigt)

    def norm(self) -> float:
        """Frobenius norm of the Kelvin matrix, equal to that of the full tensor."""
        return float(np.linalg.norm(self.to_kelvin()))

    def rotate(self, g) -> "ElasticityTensor":
        return ElasticityTensor(full_to_voigt(rotate_full(g, self.full())))

    def __add__(self, other: "ElasticityTensor") -> "ElasticityTensor":
        return ElasticityTensor(self._voigt + other._voigt)

    def __mul__(self, s: float) -> "ElasticityTensor":
        return ElasticityTensor(float(s) * self._voigt)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> "ElasticityTensor":
        return ElasticityTensor(self._voigt / float(s))

    def __repr__(self) -> str:
        return f"ElasticityTensor(voigt={self._voigt.tolist()!r})"


def _as_elasticity(E) -> ElasticityTensor:
    if isinstance(E, ElasticityTensor):
        return E
    arr = np.asarray(E, dtype=float)
    if arr.shape == (6, 6):
        return ElasticityTensor.from_voigt(arr)
    return ElasticityTensor.from_full(arr)


def dilatation(E) -> np.ndarray:
    """d_ij = E_kkij."""
    return np.einsum("kkij->ij", _as_elasticity(E).full())


def voigt_tensor(E) -> np.ndarray:
    """v_ij = E_kikj."""
    return np.einsum("kikj->ij", _as_elasticity(E).full())


def _dev(m: np.ndarray) -> np.ndarray:
    return m - np.trace(m) / 3.0 * Q


def _sym_with_metric(m: np.ndarray) -> np.ndarray:
    """Dense ``q (.) m`` for a symmetric matrix m."""
    return symmetrize(np.multiply.outer(Q, m)).full()


@dataclass(frozen=True)
class HarmonicDecomposition:
    """E = (lam, mu, a, b, H): two scalars, two deviators and a harmonic fourth-order tensor."""

    lam: float
    mu: float
    a: np.ndarray
    b: np.ndarray
    H: SymTensor

    @property
    def d_dev(self) -> np.ndarray:
        """Deviator of the dilatation tensor, ``3a + 4b``."""
        return 3.0 * self.a + 4.0 * self.b

    @property
    def v_dev(self) -> np.ndarray:
        """Deviator of the Voigt tensor, ``2a + 5b``."""
        return 2.0 * self.a + 5.0 * self.b


def decompose(E) -> HarmonicDecomposition:
    E = _as_elasticity(E)
    full = E.full()
    d = np.einsum("kkij->ij", full)
    v = np.einsum("kikj->ij", full)
    trd, trv = np.trace(d), np.trace(v)
    dp, vp = _dev(d), _dev(v)
    lam = (2.0 * trd - trv) / 15.0
    mu = (-trd + 3.0 * trv) / 30.0
    a = (5.0 * dp - 4.0 * vp) / 7.0
    b = (-2.0 * dp + 3.0 * vp) / 7.0
    S = symmetrize(full).full()
    H = S - (2.0 / 7.0) * _sym_with_metric(dp + 2.0 * vp) - (trd + 2.0 * trv) / 15.0 * symmetrize(np.multiply.outer(Q, Q)).full()
    return HarmonicDecomposition(float(lam), float(mu), a, b, symmetrize(H))


def reconstruct(lam, mu=None, a=None, b=None, H=None, atol: float = 1e-10) -> ElasticityTensor:
    """Inverse of :func:`decompose`.

    Accepts either a :class:`HarmonicDecomposition` or the five parts.  ``a``
    and ``b`` must be traceless and ``H`` harmonic (residuals relative to their
    norms, threshold ``atol``).
    """
    if isinstance(lam, HarmonicDecomposition):
        dec = lam
        lam, mu, a, b, H = dec.lam, dec.mu, dec.a, dec.b, dec.H
    a = np.zeros((3, 3)) if a is None else np.asarray(as_array(a), dtype=float)
    b = np.zeros((3, 3)) if b is None else np.asarray(as_array(b), dtype=float)
    mu = 0.0 if mu is None else float(mu)
    for name, m in (("a", a), ("b", b)):
        if m.shape != (3, 3) or np.abs(m - m.T).max() > atol * max(1.0, np.abs(m).max()):
            raise ValueError(f"{name} must be a symmetric 3x3 matrix")
        if abs(np.trace(m)) > atol * max(1.0, np.linalg.norm(m)):
            raise ValueError(f"{name} must be traceless")
    if H is None:
        Hf = np.zeros((3, 3, 3, 3))
    else:
        Hs = H if isinstance(H, SymTensor) else symmetrize(H)
        if Hs.order != 4:
            raise ValueError("H must be of order 4")
        if trace(Hs).norm() > atol * max(1.0, Hs.norm()):
            raise ValueError("H must be harmonic")
        Hf = Hs.full()
    a = 0.5 * (a + a.T)
    b = 0.5 * (b + b.T)
    q = Q
    E = (
        float(lam) * np.einsum("ij,kl->ijkl", q, q)
        + mu * (np.einsum("ik,jl->ijkl", q, q) + np.einsum("il,jk->ijkl", q, q))
        + np.einsum("ij,kl->ijkl", q, a)
        + np.einsum("kl,ij->ijkl", q, a)
        + np.einsum("ik,jl->ijkl", q, b)
        + np.einsum("jl,ik->ijkl", q, b)
        + np.einsum("il,jk->ijkl", q, b)
        + np.einsum("jk,il->ijkl", q, b)
        + Hf
    )
    return ElasticityTensor(full_to_voigt(E))


def explain_elasticity(E, tol: float = DEFAULT_TOL, use_dv: bool = False) -> JointReport:
    """Run the joint cascade on the normalized decomposition of E.

    With ``use_dv`` the deviators of the dilatation and Voigt tensors replace
    the pair (a, b); both choices give the same class.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    E = _as_elasticity(E)
    n = E.norm()
    if n > 0:
        E = E / n
    dec = decompose(E)
    first, second = (dec.d_dev, dec.v_dev) if use_dv else (dec.a, dec.b)
    return classify_joint(dec.H, first, second, tol)


def classify_elasticity(E, tol: float = DEFAULT_TOL, use_dv: bool = False) -> SymmetryClass:
    return explain_elasticity(E, tol, use_dv).cls


def _signed(rng: np.random.Generator) -> float:
    return float(rng.choice([-1.0, 1.0]) * rng.uniform(0.3, 1.5))


def _fixture_deviators(cls: SymmetryClass, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    if cls in (SymmetryClass.ISOTROPIC, SymmetryClass.CUBIC):
        return np.zeros((3, 3)), np.zeros((3, 3))
    if cls in (SymmetryClass.TRANSVERSELY_ISOTROPIC, SymmetryClass.TETRAGONAL, SymmetryClass.TRIGONAL):
        axis = np.diag([1.0, 1.0, -2.0])
        return _signed(rng) * axis, _signed(rng) * axis
    mats = []
    for _ in range(2):
        if cls == SymmetryClass.ORTHOTROPIC:
            m = np.diag([_signed(rng) for _ in range(3)])
        else:
            m = rng.uniform(-1.0, 1.0, (3, 3))
            m = m + m.T
            if cls == SymmetryClass.MONOCLINIC:
                m[0, 2] = m[2, 0] = m[1, 2] = m[2, 1] = 0.0
        mats.append(_dev(m))
    return mats[0], mats[1]


def generate_elasticity(cls, seed=None, rotate: bool = False) -> ElasticityTensor:
    """An elasticity tensor of exactly the class ``cls``.

    H is the harmonic normal form of the class and a, b are drawn deviators
    invariant under the same group, so the symmetry of E is the one of H.  The
    Lame coefficients are positive.  With ``rotate`` the result is conjugated
    by a random rotation drawn from the same seed.
    """
    from .h4classify import generate_normal_form

    cls = SymmetryClass.parse(cls) if isinstance(cls, str) else cls
    if cls not in ELASTICITY_CLASSES:
        raise ValueError(f"{cls} is not a symmetry class of elasticity tensors")
    rng = np.random.default_rng(seed)
    lam, mu = rng.uniform(0.5, 2.0, 2)
    H = generate_normal_form(cls, seed=rng)
    a, b = _fixture_deviators(cls, rng)
    E = reconstruct(lam, mu, a, b, H)
    if rotate:
        from .tensors import random_rotation

        E = E.rotate(random_rotation(rng))
    return E
