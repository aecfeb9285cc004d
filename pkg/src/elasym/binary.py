"""Binary forms, transvectants and the Cartan map to harmonic tensors.

A form of degree d is stored as the complex coefficients ``c[k]`` of
``u^(d-k) v^k``.  The Cartan parametrization used throughout is
``x = (u^2 + v^2)/2``, ``y = (u^2 - v^2)/(2i)``, ``z = i u v``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import numpy as np

from .tensors import (
    SymTensor,
    cross,
    harmonic_part,
    sym_contract,
    to_poly,
    trace,
    trace_power,
)


class BinaryForm:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=complex).ravel()
        if c.size == 0:
            raise ValueError("a binary form needs at least one coefficient")
        c.flags.writeable = False
        self.coeffs = c

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls(np.zeros(degree + 1))

    @classmethod
    def linear_power(cls, a1, a2, n: int) -> "BinaryForm":
        """(a1 u + a2 v)^n."""
        out = np.array([1.0 + 0j])
        for _ in range(n):
            out = np.convolve(out, [a1, a2])
        return cls(out)

    def __call__(self, u, v):
        d = self.degree
        k = np.arange(d + 1)
        return complex(np.sum(self.coeffs * u ** (d - k) * v**k))

    def __add__(self, other):
        self._check(other)
        return BinaryForm(self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check(other)
        return BinaryForm(self.coeffs - other.coeffs)

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            return BinaryForm(np.convolve(self.coeffs, other.coeffs))
        return BinaryForm(complex(other) * self.coeffs)

    __rmul__ = __mul__

    def _check(self, other):
        if self.degree != other.degree:
            raise ValueError("degrees differ")

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def d_u(self) -> "BinaryForm":
        d = self.degree
        if d == 0:
            return BinaryForm([0.0])
        return BinaryForm((d - np.arange(d)) * self.coeffs[:-1])

    def d_v(self) -> "BinaryForm":
        d = self.degree
        if d == 0:
            return BinaryForm([0.0])
        return BinaryForm(np.arange(1, d + 1) * self.coeffs[1:])

    def derivative(self, nu: int, nv: int) -> "BinaryForm":
        f = self
        for _ in range(nu):
            f = f.d_u()
        for _ in range(nv):
            f = f.d_v()
        return f

    def __repr__(self) -> str:
        return f"BinaryForm({self.coeffs.tolist()!r})"


def transvectant(f: BinaryForm, g: BinaryForm, r: int) -> BinaryForm:
    """Index-r transvectant; the zero form of degree n + p - 2r when r exceeds both degrees' minimum."""
    if r < 0:
        raise ValueError("r must be non-negative")
    n, p = f.degree, g.degree
    if r > min(n, p):
        return BinaryForm.zero(max(n + p - 2 * r, 0))
    total = BinaryForm.zero(n + p - 2 * r)
    for i in range(r + 1):
        term = f.derivative(r - i, i) * g.derivative(i, r - i)
        total = total + ((-1) ** i * comb(r, i)) * term
    scale = factorial(n - r) * factorial(p - r) / (factorial(n) * factorial(p))
    return scale * total


def act(gamma, f: BinaryForm) -> BinaryForm:
    """(gamma * f)(xi) = f(gamma^-1 xi) for gamma in SL(2, C)."""
    inv = np.linalg.inv(np.asarray(gamma, dtype=complex))
    d = f.degree
    row_u, row_v = inv[0], inv[1]
    out = BinaryForm.zero(d)
    for k, c in enumerate(f.coeffs):
        if c == 0:
            continue
        term = BinaryForm.linear_power(row_u[0], row_u[1], d - k) * BinaryForm.linear_power(row_v[0], row_v[1], k)
        out = out + c * term
    return out


def s_involution(f: BinaryForm) -> BinaryForm:
    """(S f)(u, v) = conj(f)(-v, u), with conj acting on coefficients."""
    d = f.degree
    k = np.arange(d + 1)
    # conj(c_k) (-v)^(d-k) u^k becomes the coefficient of u^k v^(d-k)
    return BinaryForm((np.conj(f.coeffs) * (-1.0) ** (d - k))[::-1])


def is_real_form(f: BinaryForm, tol: float = 1e-12) -> bool:
    """True when a_(d-k) = (-1)^k conj(a_k) for every k, i.e. S f = f."""
    if f.degree % 2:
        return False
    scale = max(1.0, f.norm())
    return (s_involution(f) - f).norm() <= tol * scale


_CARTAN = (
    np.array([0.5, 0.0, 0.5], dtype=complex),  # x
    np.array([-0.5j, 0.0, 0.5j], dtype=complex),  # y = (u^2 - v^2) / (2i)
    np.array([0.0, 1j, 0.0], dtype=complex),  # z
)


def _power(c: np.ndarray, k: int) -> np.ndarray:
    out = np.array([1.0 + 0j])
    for _ in range(k):
        out = np.convolve(out, c)
    return out


def cartan_pullback(h: SymTensor, check: bool = True, atol: float = 1e-10) -> BinaryForm:
    """The binary form h(phi(u, v)) of degree 2n for a harmonic tensor h of order n.

    The map kills the metric q, so with ``check`` a non-harmonic tensor is
    rejected instead of silently losing its trace part.
    """
    n = h.order
    if check and n >= 2 and trace(h).norm() > atol * max(1.0, h.norm()):
        raise ValueError("tensor is not harmonic")
    out = np.zeros(2 * n + 1, dtype=complex)
    for (i, j, k), coef in to_poly(h).items():
        if coef == 0:
            continue
        term = np.convolve(np.convolve(_power(_CARTAN[0], i), _power(_CARTAN[1], j)), _power(_CARTAN[2], k))
        out += coef * term
    return BinaryForm(out)


def kappa(n: int, p: int, r: int) -> Fraction:
    if r < 0 or n < r + 1 or p < r + 1:
        raise ValueError("kappa needs n, p >= r + 1 and r >= 0")
    num = factorial(n + p - 1) * factorial(n - r - 1) * factorial(p - r - 1)
    den = factorial(n + p - 1 - 2 * r) * factorial(n - 1) * factorial(p - 1)
    return Fraction(num, den * 2 ** (2 * r + 1))


def even_translation_residual(H1: SymTensor, H2: SymTensor, r: int) -> float:
    """|<phi*H1, phi*H2>_{2r} - 2^-r phi*((H1 <r> H2)^s_0)|."""
    lhs = transvectant(cartan_pullback(H1), cartan_pullback(H2), 2 * r)
    rhs = 2.0**-r * cartan_pullback(harmonic_part(sym_contract(H1, H2, r)))
    return (lhs - rhs).norm()


def odd_translation_residual(H1: SymTensor, H2: SymTensor, r: int) -> float:
    """|<phi*H1, phi*H2>_{2r+1} - kappa(n, p, r) phi*((tr^r(H1 x H2))_0)|."""
    lhs = transvectant(cartan_pullback(H1), cartan_pullback(H2), 2 * r + 1)
    k = float(kappa(H1.order, H2.order, r))
    rhs = k * cartan_pullback(harmonic_part(trace_power(cross(H1, H2), r)))
    return (lhs - rhs).norm()


def verify_translation(H1: SymTensor, H2: SymTensor, r: int) -> tuple[float | None, float | None]:
    """Residuals of the even (index 2r) and odd (index 2r+1) translation identities.

    An entry is ``None`` when r is outside the admissible range of that
    identity (``r <= min(n, p)`` for the even one, ``r <= min(n, p) - 1`` for
    the odd one).
    """
    n, p = H1.order, H2.order
    even = even_translation_residual(H1, H2, r) if 0 <= r <= min(n, p) else None
    odd = odd_translation_residual(H1, H2, r) if 0 <= r <= min(n, p) - 1 else None
    return even, odd


def _slc_matrix(x) -> np.ndarray:
    x1, x2, x3 = x
    return np.array([[1j * x3, x1 + 1j * x2], [-x1 + 1j * x2, -1j * x3]])


def su2_to_so3(gamma) -> np.ndarray:
    """Rotation R with gamma M(x) gamma^-1 = M(R x), M(x, y, z) = [[iz, x+iy], [-x+iy, -iz]]."""
    gamma = np.asarray(gamma, dtype=complex)
    inv = np.linalg.inv(gamma)
    R = np.empty((3, 3))
    for col, e in enumerate(np.eye(3)):
        m = gamma @ _slc_matrix(e) @ inv
        R[:, col] = [((m[0, 1] - m[1, 0]) / 2).real, ((m[0, 1] + m[1, 0]) / 2j).real, (m[0, 0] / 1j).real]
    return R


def random_su2(rng: np.random.Generator) -> np.ndarray:
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    alpha, beta = complex(q[0], q[1]), complex(q[2], q[3])
    return np.array([[alpha, -np.conj(beta)], [beta, np.conj(alpha)]])


def discriminant(w: BinaryForm) -> complex:
    """b1^2 - 4 b0 b2 for w = b0 u^2 + b1 uv + b2 v^2; zero exactly on perfect squares."""
    if w.degree != 2:
        raise ValueError("expected a quadratic form")
    b0, b1, b2 = w.coeffs
    return complex(b1 * b1 - 4 * b0 * b2)
