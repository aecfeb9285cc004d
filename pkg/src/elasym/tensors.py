"""Totally symmetric tensors on R^3 and the covariant operations acting on them.

A :class:`SymTensor` of order ``n`` stores one real number per sorted
multi-index ``i1 <= ... <= in``, which is the same as one number per monomial
``x^a y^b z^c`` with ``a + b + c = n``.  Dense ``(3,)*n`` arrays are produced on
demand and all contractions are delegated to numpy.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence, Union

import numpy as np

MAX_ORDER = 9

Exponent = tuple[int, int, int]
Poly = dict[Exponent, float]


# --------------------------------------------------------------------------
# multi-index bookkeeping
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def monomials(n: int) -> tuple[Exponent, ...]:
    """Exponent triples of degree ``n`` in the storage order (x-power descending)."""
    return tuple((a, b, n - a - b) for a in range(n, -1, -1) for b in range(n - a, -1, -1))


def dimension(n: int) -> int:
    """Number of independent components of an order-``n`` symmetric tensor."""
    return (n + 1) * (n + 2) // 2


@lru_cache(maxsize=None)
def _index_maps(n: int):
    """Return (flat -> compact map, multiplicities, flat position of each representative)."""
    lookup = {e: k for k, e in enumerate(monomials(n))}
    if n == 0:
        return np.zeros(1, dtype=np.intp), np.ones(1), np.zeros(1, dtype=np.intp)
    grid = np.indices((3,) * n).reshape(n, -1)
    counts = np.stack([(grid == i).sum(axis=0) for i in range(3)])
    flat_to_compact = np.array([lookup[tuple(c)] for c in counts.T], dtype=np.intp)
    mult = np.bincount(flat_to_compact, minlength=len(lookup)).astype(float)
    rep = np.empty(len(lookup), dtype=np.intp)
    rep[flat_to_compact[::-1]] = np.arange(3**n)[::-1]
    return flat_to_compact, mult, rep


def multinomial(e: Exponent) -> int:
    return factorial(sum(e)) // (factorial(e[0]) * factorial(e[1]) * factorial(e[2]))


# --------------------------------------------------------------------------
# value type
# --------------------------------------------------------------------------

class SymTensor:
    """Immutable totally symmetric tensor of order ``n`` on R^3.

    Parameters
    ----------
    order : int
        Tensor order, ``0 <= order <= 9``.
    components : array_like
        One value per sorted multi-index, in the order of :func:`monomials`.
    """

    __slots__ = ("order", "components")

    def __init__(self, order: int, components):
        if not 0 <= order <= MAX_ORDER:
            raise ValueError(f"order must lie in 0..{MAX_ORDER}, got {order}")
        comp = np.array(components, dtype=float).reshape(-1)
        if comp.size != dimension(order):
            raise ValueError(f"order {order} needs {dimension(order)} components, got {comp.size}")
        comp.flags.writeable = False
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "components", comp)

    def __setattr__(self, name, value):
        raise AttributeError("SymTensor is immutable")

    # construction helpers
    @classmethod
    def zeros(cls, order: int) -> "SymTensor":
        return cls(order, np.zeros(dimension(order)))

    @classmethod
    def scalar(cls, value: float) -> "SymTensor":
        return cls(0, [value])

    @classmethod
    def from_full(cls, array, check: bool = True, atol: float = 1e-12) -> "SymTensor":
        """Wrap a dense array that is already symmetric (checked unless ``check=False``)."""
        array = np.asarray(array, dtype=float)
        n = array.ndim
        flat_to_compact, _, rep = _index_maps(n)
        comp = array.reshape(-1)[rep]
        if check:
            scale = max(1.0, float(np.abs(array).max(initial=0.0)))
            if np.abs(array.reshape(-1) - comp[flat_to_compact]).max(initial=0.0) > atol * scale:
                raise ValueError("array is not totally symmetric")
        return cls(n, comp)

    # views
    def full(self) -> np.ndarray:
        flat_to_compact, _, _ = _index_maps(self.order)
        return self.components[flat_to_compact].reshape((3,) * self.order)

    def norm(self) -> float:
        """Frobenius norm of the expanded tensor."""
        _, mult, _ = _index_maps(self.order)
        return float(np.sqrt(np.dot(mult, self.components**2)))

    def __float__(self) -> float:
        if self.order != 0:
            raise TypeError("only order-0 tensors convert to float")
        return float(self.components[0])

    # linear structure
    def _check(self, other: "SymTensor"):
        if not isinstance(other, SymTensor):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return SymTensor(self.order, self.components + other.components)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return SymTensor(self.order, self.components - other.components)

    def __neg__(self):
        return SymTensor(self.order, -self.components)

    def __mul__(self, s):
        if isinstance(s, SymTensor):
            return NotImplemented
        return SymTensor(self.order, float(s) * self.components)

    __rmul__ = __mul__

    def __truediv__(self, s):
        return SymTensor(self.order, self.components / float(s))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymTensor):
            return NotImplemented
        return self.order == other.order and bool(np.array_equal(self.components, other.components))

    def __hash__(self) -> int:
        return hash((self.order, self.components.tobytes()))

    def __repr__(self) -> str:
        return f"SymTensor(order={self.order}, components={np.array2string(self.components, precision=6)})"


TensorLike = Union[SymTensor, np.ndarray]


def as_array(t: TensorLike) -> np.ndarray:
    return t.full() if isinstance(t, SymTensor) else np.asarray(t, dtype=float)


def from_matrix(m) -> SymTensor:
    """Order-2 tensor from a symmetric 3x3 matrix."""
    m = np.asarray(m, dtype=float)
    if m.shape != (3, 3):
        raise ValueError("expected a 3x3 matrix")
    return SymTensor.from_full(m)


def vector(v) -> SymTensor:
    return SymTensor(1, np.asarray(v, dtype=float))


def metric() -> SymTensor:
    """The Euclidean metric q (components delta_ij)."""
    return from_matrix(np.eye(3))


def metric_power(k: int) -> SymTensor:
    """q^(symmetric power k); q^0 is the scalar 1."""
    out = SymTensor.scalar(1.0)
    for _ in range(k):
        out = sym_product(out, metric())
    return out


def levi_civita() -> np.ndarray:
    eps = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[i, j, k] = 1.0
        eps[i, k, j] = -1.0
    return eps


EPSILON = levi_civita()
EPSILON.flags.writeable = False


# --------------------------------------------------------------------------
# operations
# --------------------------------------------------------------------------

def symmetrize(t: TensorLike) -> SymTensor:
    """Average of a dense tensor over all permutations of its indices."""
    a = as_array(t)
    flat_to_compact, mult, _ = _index_maps(a.ndim)
    comp = np.bincount(flat_to_compact, weights=a.reshape(-1), minlength=mult.size) / mult
    return SymTensor(a.ndim, comp)


def sym_product(s1: TensorLike, s2: TensorLike) -> SymTensor:
    """Symmetric tensor product; on polynomials it is the ordinary product."""
    return symmetrize(np.multiply.outer(as_array(s1), as_array(s2)))


def contract(t1: TensorLike, t2: TensorLike, r: int) -> np.ndarray:
    """Contract the last ``r`` indices of ``t1`` with the first ``r`` of ``t2``."""
    a, b = as_array(t1), as_array(t2)
    if not 0 <= r <= min(a.ndim, b.ndim):
        raise ValueError(f"contraction index {r} out of range for orders {a.ndim}, {b.ndim}")
    return np.tensordot(a, b, axes=(list(range(a.ndim - r, a.ndim)), list(range(r))))


def sym_contract(s1: TensorLike, s2: TensorLike, r: int) -> SymTensor:
    return symmetrize(contract(s1, s2, r))


def cross_full(t1: TensorLike, t2: TensorLike) -> np.ndarray:
    """Unsymmetrized eps_{i j k} T1_{j ...} T2_{k ...} (first index of each operand)."""
    a, b = as_array(t1), as_array(t2)
    if a.ndim < 1 or b.ndim < 1:
        raise ValueError("cross product needs operands of order >= 1")
    left = np.tensordot(EPSILON, a, axes=([1], [0]))  # (i, k, rest1)
    left = np.moveaxis(left, 1, -1)  # (i, rest1, k)
    return np.tensordot(left, b, axes=([left.ndim - 1], [0]))


def cross(s1: TensorLike, s2: TensorLike) -> SymTensor:
    """Generalized cross product, an order p+q-1 symmetric tensor."""
    return symmetrize(cross_full(s1, s2))


def trace(s: TensorLike) -> SymTensor:
    """Contraction of one pair of indices of a symmetric tensor."""
    a = as_array(s)
    if a.ndim < 2:
        raise ValueError("trace needs order >= 2")
    return symmetrize(np.trace(a, axis1=0, axis2=1))


def trace_power(s: TensorLike, k: int) -> SymTensor:
    out = s if isinstance(s, SymTensor) else symmetrize(s)
    for _ in range(k):
        out = trace(out)
    return out


def deviator(a: TensorLike) -> SymTensor:
    m = as_array(a)
    if m.shape != (3, 3):
        raise ValueError("deviator is defined for order-2 tensors")
    m = 0.5 * (m + m.T)
    return SymTensor.from_full(m - np.trace(m) / 3.0 * np.eye(3), check=False)


def _trace_factor(k: int, m: int) -> float:
    """tr(q^k . H) = factor * q^(k-1) . H for harmonic H of order m."""
    n = 2 * k + m
    return 2.0 * k * (2 * k + 2 * m + 1) / (n * (n - 1))


def harmonic_decompose(s: TensorLike) -> list[SymTensor]:
    """Split ``s`` into harmonic pieces ``[H0, H1, ...]`` with ``s = sum q^k . Hk``.

    The iterated traces ``tr^j s`` form an upper-triangular system in the
    unknowns ``Hk``; it is solved from the lowest order upwards.
    """
    s = s if isinstance(s, SymTensor) else symmetrize(s)
    n = s.order
    r = n // 2
    traces = [s]
    for _ in range(r):
        traces.append(trace(traces[-1]))

    def coef(j: int, k: int) -> float:
        m = n - 2 * k
        out = 1.0
        for i in range(j):
            out *= _trace_factor(k - i, m)
        return out

    parts: list[SymTensor | None] = [None] * (r + 1)
    for j in range(r, -1, -1):
        rest = traces[j]
        for k in range(j + 1, r + 1):
            rest = rest - coef(j, k) * sym_product(metric_power(k - j), parts[k])
        parts[j] = rest / coef(j, j)
    return parts


def harmonic_part(s: TensorLike) -> SymTensor:
    """Harmonic projection, the leading piece of :func:`harmonic_decompose`."""
    return harmonic_decompose(s)[0]


def recompose(parts: Sequence[SymTensor]) -> SymTensor:
    out = parts[0]
    for k, h in enumerate(parts[1:], start=1):
        out = out + sym_product(metric_power(k), h)
    return out


def is_rotation(g, atol: float = 1e-10) -> bool:
    g = np.asarray(g, dtype=float)
    return g.shape == (3, 3) and np.allclose(g.T @ g, np.eye(3), atol=atol) and abs(np.linalg.det(g) - 1) < atol


def rotate_full(g, t: np.ndarray) -> np.ndarray:
    """Apply g to every index: T'_{i...} = g_{ia} ... T_{a...}."""
    out = np.asarray(t, dtype=float)
    for _ in range(out.ndim):
        out = np.tensordot(out, g, axes=([0], [1]))
    return out


def rotate(g, s: TensorLike) -> TensorLike:
    g = np.asarray(g, dtype=float)
    if not is_rotation(g):
        raise ValueError("g is not a proper rotation")
    if isinstance(s, SymTensor):
        return SymTensor.from_full(rotate_full(g, s.full()), check=False)
    return rotate_full(g, s)


def random_rotation(seed=None) -> np.ndarray:
    """Haar-uniform rotation matrix, reproducible for a given seed."""
    from scipy.spatial.transform import Rotation

    return Rotation.random(random_state=seed).as_matrix()


# --------------------------------------------------------------------------
# polynomial view
# --------------------------------------------------------------------------

def to_poly(s: SymTensor) -> Poly:
    """Coefficients of the homogeneous polynomial S(x, ..., x)."""
    return {e: multinomial(e) * float(c) for e, c in zip(monomials(s.order), s.components)}


def from_poly(poly: Poly, order: int | None = None) -> SymTensor:
    """Inverse of :func:`to_poly`; missing monomials count as zero."""
    degrees = {sum(e) for e in poly}
    if order is None:
        if len(degrees) != 1:
            raise ValueError("cannot infer a single degree from the coefficients")
        order = degrees.pop()
    elif degrees - {order}:
        raise ValueError(f"coefficients of degree {sorted(degrees - {order})} in a degree-{order} polynomial")
    comp = [poly.get(e, 0.0) / multinomial(e) for e in monomials(order)]
    return SymTensor(order, comp)


def random_sym(order: int, rng: np.random.Generator) -> SymTensor:
    return symmetrize(rng.normal(size=(3,) * order))


def random_harmonic(order: int, rng: np.random.Generator) -> SymTensor:
    return harmonic_part(random_sym(order, rng))


def frobenius(t1: TensorLike, t2: TensorLike) -> float:
    return float(np.sum(as_array(t1) * as_array(t2)))


def norms(items: Iterable[TensorLike]) -> list[float]:
    return [float(np.linalg.norm(as_array(t))) for t in items]
