"""The 297 generators of the invariant algebra of an elasticity tensor.

Every generator is one row of a table: a label, its multi-degree in
``(H, a, b)`` and an expression over a lazily evaluated :class:`Context`.
Juxtaposed second-order tensors (``ab``, ``a2b``) are matrix products; where a
symmetric operand is required the symmetric part is taken (``ab_s``).  The
joint ``(H, b)`` generators reuse the ``(H, a)`` rows with ``a`` replaced by
``b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable

import numpy as np

from .covariants import HarmonicCovariants, _basis_table, eps_dot, symm
from .tensors import SymTensor, as_array, contract, cross, symmetrize


def dd(x, y):
    """Double contraction: last two indices of x with the first two of y."""
    return contract(x, y, 2)


def sand(x, T, y):
    """``x .. T .. y`` for second-order x, y."""
    return contract(contract(x, T, 2), y, 2)


def tdot(x, y):
    """Triple contraction: last three indices of x with the first three of y."""
    return contract(x, y, 3)


def cr(x, y) -> np.ndarray:
    return cross(x, y).full()


def quad(v, m, w) -> float:
    return float(v @ m @ w)


class Context:
    """Covariants of (H, a, b) computed on first use and shared by all rows."""

    def __init__(self, H: SymTensor, a: np.ndarray, b: np.ndarray):
        self.cov = HarmonicCovariants(H)
        self.a = np.asarray(a, dtype=float)
        self.b = np.asarray(b, dtype=float)
        self._table = {name: thunk for name, _, thunk in _basis_table(self.cov)}
        self._cache: dict[str, np.ndarray] = {}

    def basis(self, name: str):
        if name not in self._cache:
            value = self._table[name]()
            self._cache[name] = value if np.isscalar(value) else as_array(value)
        return self._cache[name]

    H = property(lambda self: self.cov.Hf)
    d2 = property(lambda self: self.cov.d2)
    d3 = property(lambda self: self.cov.d3)
    c3 = property(lambda self: self.cov.c3)
    c4 = property(lambda self: self.cov.c4)
    c5 = property(lambda self: self.cov.c5)
    d22 = property(lambda self: self.cov.d2sq)
    v5 = property(lambda self: self.cov.v5)
    H2s = property(lambda self: self.basis("(H^2)^s"))
    H3s = property(lambda self: self.basis("(H^3)^s"))
    H4s = property(lambda self: self.basis("(H^4)^s"))
    HH = property(lambda self: self.basis("(H.H)^s"))
    H2H = property(lambda self: self.basis("(H^2.H)^s"))
    H2H2 = property(lambda self: self.basis("(H^2.H^2)^s"))
    Hd22 = property(lambda self: self.basis("(H.d2^2)^s"))
    H2d22 = property(lambda self: self.basis("(H^2.d2^2)^s"))
    tHd2 = property(lambda self: self.basis("tr(H x d2)"))
    tHc3 = property(lambda self: self.basis("tr(H x c3)"))
    tHd22 = property(lambda self: self.basis("tr(H x d2^2)"))
    tHc5 = property(lambda self: self.basis("tr(H x c5)"))
    Hxd2 = property(lambda self: self.basis("H x d2"))
    Hxc3 = property(lambda self: self.basis("H x c3"))
    Hxd22 = property(lambda self: self.basis("H x d2^2"))
    Hxc4 = property(lambda self: self.basis("H x c4"))
    Hxc5 = property(lambda self: self.basis("H x c5"))
    H2sxd2 = property(lambda self: self.basis("(H^2)^s x d2"))
    H2sxc3 = property(lambda self: self.basis("(H^2)^s x c3"))
    HxH2s = property(lambda self: self.basis("H x (H^2)^s"))
    HxH3s = property(lambda self: self.basis("H x (H^3)^s"))
    HHxH = property(lambda self: self.basis("(H.H)^s x H"))
    v8a = property(lambda self: self.basis("v8a"))
    v9a = property(lambda self: self.basis("v9a"))
    v9b = property(lambda self: self.basis("v9b"))

    @cached_property
    def ab(self) -> np.ndarray:
        return self.a @ self.b

    @cached_property
    def ab_s(self) -> np.ndarray:
        return symm(self.ab)

    @cached_property
    def axb(self) -> np.ndarray:
        return cr(self.a, self.b)


Row = tuple[str, tuple[int, int, int], Callable[[Context], float]]


def _p2(m):
    return m @ m


# Joint invariants of (H, x); multi-degree (deg H, deg x).
HA_TABLE: list[tuple[int, int, Callable[[Context, np.ndarray], float]]] = [
    (2, 1, lambda k, x: np.trace(x @ k.d2)),
    (1, 2, lambda k, x: sand(x, k.H, x)),
    (2, 2, lambda k, x: np.trace(_p2(x) @ k.d2)),
    (3, 1, lambda k, x: np.trace(x @ k.d3)),
    (1, 3, lambda k, x: sand(x, k.H, _p2(x))),
    (2, 2, lambda k, x: sand(x, k.H2s, x)),
    (1, 4, lambda k, x: sand(_p2(x), k.H, _p2(x))),
    (2, 3, lambda k, x: sand(x, k.H2s, _p2(x))),
    (2, 3, lambda k, x: dd(x, sand(x, k.HH, x))),
    (3, 2, lambda k, x: sand(x, k.H3s, x)),
    (3, 2, lambda k, x: np.trace(_p2(x) @ k.d3)),
    (4, 1, lambda k, x: np.trace(x @ k.d22)),
    (4, 1, lambda k, x: sand(x, k.H2s, k.d2)),
    (2, 4, lambda k, x: sand(_p2(x), k.H2s, _p2(x))),
    (2, 4, lambda k, x: dd(_p2(x), sand(x, k.HH, x))),
    (3, 3, lambda k, x: dd(x, sand(x, k.H2H, x))),
    (3, 3, lambda k, x: sand(x, k.H3s, _p2(x))),
    (3, 3, lambda k, x: tdot(k.tHd2, cr(_p2(x), x))),
    (4, 2, lambda k, x: dd(k.d22, _p2(x))),
    (4, 2, lambda k, x: sand(x, k.H4s, x)),
    (4, 2, lambda k, x: dd(_p2(x), k.c4)),
    (5, 1, lambda k, x: dd(x, k.d2 @ k.d3)),
    (5, 1, lambda k, x: sand(x, k.H3s, k.d2)),
    (2, 5, lambda k, x: dd(x, sand(_p2(x), k.HH, _p2(x)))),
    (3, 4, lambda k, x: dd(x, tdot(k.Hxd2, cr(_p2(x), x)))),
    (3, 4, lambda k, x: dd(x, sand(x, k.H2H, _p2(x)))),
    (4, 3, lambda k, x: sand(x, k.H4s, _p2(x))),
    (4, 3, lambda k, x: tdot(k.tHc3, cr(_p2(x), x))),
    (4, 3, lambda k, x: dd(x, sand(x, k.H2H2, x))),
    (5, 2, lambda k, x: sand(x, k.Hd22, x)),
    (5, 2, lambda k, x: dd(k.c5, _p2(x))),
    (5, 2, lambda k, x: dd(k.d2 @ k.c3, _p2(x))),
    (6, 1, lambda k, x: dd(k.d2 @ k.c4, x)),
    (6, 1, lambda k, x: dd(_p2(k.c3), x)),
    (7, 1, lambda k, x: dd(k.d22 @ k.c3, x)),
    (7, 1, lambda k, x: dd(k.c4 @ k.c3, x)),
    (6, 2, lambda k, x: dd(k.d2 @ k.c4, _p2(x))),
    (6, 2, lambda k, x: dd(_p2(k.c3), _p2(x))),
    (6, 2, lambda k, x: sand(x, k.H2d22, x)),
    (5, 3, lambda k, x: tdot(k.tHd22, cr(_p2(x), x))),
    (5, 3, lambda k, x: sand(x, k.Hd22, _p2(x))),
    (4, 4, lambda k, x: dd(x, tdot(k.H2sxd2, cr(_p2(x), x)))),
    (4, 4, lambda k, x: dd(x, sand(x, k.H2H2, _p2(x)))),
    (3, 5, lambda k, x: dd(_p2(x), sand(_p2(x), k.H2H, x))),
    (6, 3, lambda k, x: quad(dd(k.tHd2, x), x, dd(k.tHd2, x))),
    (7, 2, lambda k, x: dd(k.c4 @ k.c3, _p2(x))),
    (7, 2, lambda k, x: dd(k.d22 @ k.c3, _p2(x))),
    (8, 1, lambda k, x: dd(k.d2 @ _p2(k.c3), x)),
    (8, 1, lambda k, x: dd(_p2(k.c4), x)),
    (8, 2, lambda k, x: dd(_p2(k.c4), _p2(x))),
    (9, 1, lambda k, x: dd(k.d22 @ k.c5, x)),
    (10, 1, lambda k, x: quad(k.v5, x, k.v5)),
]

# Joint invariants of (H, a, b); multi-degree (deg H, deg a, deg b).
HAB_TABLE: list[tuple[tuple[int, int, int], Callable[[Context], float]]] = [
    ((1, 1, 1), lambda k: sand(k.a, k.H, k.b)),
    ((1, 1, 2), lambda k: sand(k.a, k.H, _p2(k.b))),
    ((1, 1, 2), lambda k: sand(k.b, k.H, k.ab)),
    ((1, 2, 1), lambda k: sand(k.b, k.H, _p2(k.a))),
    ((1, 2, 1), lambda k: sand(k.a, k.H, k.ab)),
    ((2, 1, 1), lambda k: dd(k.a, k.d2 @ k.b)),
    ((2, 1, 1), lambda k: sand(k.a, k.H2s, k.b)),
    ((1, 1, 3), lambda k: sand(_p2(k.b), k.H, k.ab)),
    ((1, 1, 3), lambda k: sand(k.b, k.H, k.a @ _p2(k.b))),
    ((1, 2, 2), lambda k: sand(_p2(k.a), k.H, _p2(k.b))),
    ((1, 2, 2), lambda k: sand(k.b, k.H, _p2(k.a) @ k.b)),
    ((1, 2, 2), lambda k: sand(k.ab, k.H, k.ab)),
    ((1, 3, 1), lambda k: sand(_p2(k.a), k.H, k.ab)),
    ((1, 3, 1), lambda k: sand(k.a, k.H, _p2(k.a) @ k.b)),
    ((2, 1, 2), lambda k: sand(k.a, k.H2s, _p2(k.b))),
    ((2, 1, 2), lambda k: dd(k.a, sand(k.b, k.HH, k.b))),
    ((2, 2, 1), lambda k: dd(k.b, sand(k.a, k.HH, k.a))),
    ((2, 1, 2), lambda k: dd(k.a, _p2(k.b) @ k.d2)),
    ((2, 2, 1), lambda k: dd(_p2(k.a), k.b @ k.d2)),
    ((2, 2, 1), lambda k: sand(k.b, k.H2s, _p2(k.a))),
    ((2, 2, 1), lambda k: sand(k.a, k.H2s, k.ab)),
    ((3, 1, 1), lambda k: sand(k.a, k.H3s, k.b)),
    ((3, 1, 1), lambda k: dd(k.ab, k.d3)),
    ((2, 1, 2), lambda k: sand(k.b, k.H2s, k.ab)),
    ((3, 1, 1), lambda k: tdot(k.tHd2, k.axb)),
    ((1, 1, 4), lambda k: sand(_p2(k.b), k.H, k.a @ _p2(k.b))),
    ((1, 2, 3), lambda k: sand(k.b, k.H, _p2(k.a) @ _p2(k.b))),
    ((1, 2, 3), lambda k: sand(k.ab, k.H, k.a @ _p2(k.b))),
    ((1, 3, 2), lambda k: sand(k.ab, k.H, _p2(k.a) @ k.b)),
    ((1, 3, 2), lambda k: sand(k.a, k.H, _p2(k.a) @ _p2(k.b))),
    ((1, 4, 1), lambda k: sand(_p2(k.a), k.H, _p2(k.a) @ k.b)),
    # 32
    ((2, 1, 3), lambda k: sand(k.b, k.H2s, k.a @ _p2(k.b))),
    ((2, 1, 3), lambda k: sand(_p2(k.b), k.H2s, k.ab)),
    ((2, 2, 2), lambda k: sand(k.b, k.H2s, _p2(k.a) @ k.b)),
    ((2, 2, 2), lambda k: sand(k.ab, k.H2s, k.ab)),
    ((2, 2, 2), lambda k: sand(_p2(k.a), k.H2s, _p2(k.b))),
    ((2, 3, 1), lambda k: sand(_p2(k.a), k.H2s, k.ab)),
    ((2, 3, 1), lambda k: sand(k.a, k.H2s, _p2(k.a) @ k.b)),
    ((2, 1, 3), lambda k: dd(_p2(k.b), sand(k.a, k.HH, k.b))),
    ((2, 1, 3), lambda k: dd(k.b, sand(k.b, k.HH, k.ab_s))),
    ((2, 2, 2), lambda k: dd(k.b, sand(k.b, k.HH, _p2(k.a)))),
    ((2, 3, 1), lambda k: dd(k.a, sand(k.a, k.HH, k.ab_s))),
    ((2, 3, 1), lambda k: dd(k.a, sand(k.b, k.HH, _p2(k.a)))),
    ((2, 2, 2), lambda k: dd(k.a, sand(k.b, k.HH, k.ab_s))),
    ((2, 2, 2), lambda k: dd(k.a, sand(k.a, k.HH, _p2(k.b)))),
    ((3, 1, 2), lambda k: tdot(k.tHd2, cr(k.a, _p2(k.b)))),
    ((3, 2, 1), lambda k: tdot(k.tHd2, cr(k.a, k.ab_s))),
    ((3, 1, 2), lambda k: tdot(k.tHd2, cr(k.b, k.ab_s))),
    ((3, 2, 1), lambda k: tdot(k.tHd2, cr(_p2(k.a), k.b))),
    ((3, 1, 2), lambda k: sand(k.a, k.H3s, _p2(k.b))),
    ((3, 1, 2), lambda k: sand(k.b, k.H3s, k.ab)),
    ((3, 2, 1), lambda k: sand(k.b, k.H3s, _p2(k.a))),
    ((3, 2, 1), lambda k: sand(k.a, k.H3s, k.ab)),
    ((3, 1, 2), lambda k: dd(k.b, tdot(k.Hxd2, k.axb))),
    ((3, 2, 1), lambda k: dd(k.a, tdot(k.Hxd2, k.axb))),
    ((3, 1, 2), lambda k: dd(k.a, sand(k.b, k.H2H, k.b))),
    ((3, 2, 1), lambda k: dd(k.b, sand(k.a, k.H2H, k.a))),
    ((4, 1, 1), lambda k: dd(k.d22, k.ab)),
    ((4, 1, 1), lambda k: dd(k.c4, k.ab)),
    ((4, 1, 1), lambda k: tdot(k.tHc3, k.axb)),
    ((4, 1, 1), lambda k: sand(k.a, k.H4s, k.b)),
    # 62
    ((2, 1, 4), lambda k: dd(k.b, sand(k.b, k.HH, k.a @ _p2(k.b)))),
    ((2, 1, 4), lambda k: dd(k.a, sand(_p2(k.b), k.HH, _p2(k.b)))),
    ((2, 1, 4), lambda k: dd(k.b, sand(_p2(k.b), k.HH, k.ab_s))),
    ((2, 2, 3), lambda k: dd(k.b, sand(k.b, k.HH, _p2(k.a) @ k.b))),
    ((2, 2, 3), lambda k: dd(k.a, sand(_p2(k.b), k.HH, k.ab_s))),
    ((2, 3, 2), lambda k: dd(k.b, sand(_p2(k.a), k.HH, k.ab_s))),
    ((2, 3, 2), lambda k: dd(k.a, sand(k.b, k.HH, _p2(k.a) @ k.b))),
    ((2, 3, 2), lambda k: dd(k.a, sand(_p2(k.a), k.HH, _p2(k.b)))),
    ((2, 4, 1), lambda k: dd(k.a, sand(_p2(k.a), k.HH, k.ab_s))),
    ((2, 4, 1), lambda k: dd(k.a, sand(k.a, k.HH, _p2(k.a) @ k.b))),
    ((2, 4, 1), lambda k: dd(k.b, sand(_p2(k.a), k.HH, _p2(k.a)))),
    ((2, 3, 2), lambda k: dd(k.a, sand(k.ab_s, k.HH, k.ab_s))),
    ((2, 2, 3), lambda k: dd(k.b, sand(k.ab_s, k.HH, k.ab_s))),
    ((2, 2, 3), lambda k: dd(k.b, sand(_p2(k.a), k.HH, _p2(k.b)))),
    ((3, 1, 3), lambda k: dd(k.b, tdot(k.Hxd2, cr(k.b, k.ab_s)))),
    ((3, 2, 2), lambda k: dd(k.a, tdot(k.Hxd2, cr(k.b, k.ab_s)))),
    ((3, 2, 2), lambda k: dd(k.a, tdot(k.Hxd2, cr(k.a, _p2(k.b))))),
    ((3, 2, 2), lambda k: dd(k.b, tdot(k.Hxd2, cr(_p2(k.a), k.b)))),
    ((3, 3, 1), lambda k: dd(k.a, tdot(k.Hxd2, cr(_p2(k.a), k.b)))),
    ((3, 3, 1), lambda k: dd(k.a, tdot(k.Hxd2, cr(k.a, k.ab_s)))),
    ((3, 3, 1), lambda k: dd(k.b, tdot(k.Hxd2, cr(_p2(k.a), k.a)))),
    ((3, 1, 3), lambda k: dd(k.b, tdot(k.Hxd2, cr(k.a, _p2(k.b))))),
    ((3, 1, 3), lambda k: dd(k.a, tdot(k.Hxd2, cr(_p2(k.b), k.b)))),
    ((3, 2, 2), lambda k: sand(k.ab, k.H3s, k.ab)),
    ((3, 1, 3), lambda k: dd(k.b, sand(k.b, k.H2H, k.ab_s))),
    ((3, 1, 3), lambda k: dd(k.a, sand(k.b, k.H2H, _p2(k.b)))),
    ((3, 2, 2), lambda k: dd(k.a, sand(k.a, k.H2H, _p2(k.b)))),
    ((3, 2, 2), lambda k: dd(k.a, sand(k.b, k.H2H, k.ab_s))),
    # 90
    ((3, 2, 2), lambda k: dd(k.b, sand(k.b, k.H2H, _p2(k.a)))),
    ((3, 3, 1), lambda k: dd(k.a, sand(k.b, k.H2H, _p2(k.a)))),
    ((3, 3, 1), lambda k: dd(k.a, sand(k.a, k.H2H, k.ab_s))),
    ((3, 1, 3), lambda k: sand(k.b, tdot(k.HxH2s, k.axb), k.b)),
    ((3, 2, 2), lambda k: sand(k.a, tdot(k.HxH2s, k.axb), k.b)),
    ((3, 3, 1), lambda k: sand(k.a, tdot(k.HxH2s, k.axb), k.a)),
    ((4, 1, 2), lambda k: tdot(k.tHc3, cr(k.a, _p2(k.b)))),
    ((4, 1, 2), lambda k: tdot(k.tHc3, cr(k.b, k.ab_s))),
    ((4, 2, 1), lambda k: tdot(k.tHc3, cr(k.a, k.ab_s))),
    ((4, 2, 1), lambda k: tdot(k.tHc3, cr(_p2(k.a), k.b))),
    ((4, 1, 2), lambda k: sand(k.b, k.H4s, k.ab)),
    ((4, 2, 1), lambda k: sand(k.a, k.H4s, k.ab)),
    ((4, 2, 1), lambda k: sand(k.b, k.H4s, _p2(k.a))),
    ((4, 1, 2), lambda k: sand(k.a, k.H4s, _p2(k.b))),
    ((4, 1, 2), lambda k: dd(k.b, tdot(k.Hxc3, k.axb))),
    ((4, 2, 1), lambda k: dd(k.a, tdot(k.Hxc3, k.axb))),
    ((4, 1, 2), lambda k: dd(k.b, tdot(k.H2sxd2, k.axb))),
    ((4, 2, 1), lambda k: dd(k.a, tdot(k.H2sxd2, k.axb))),
    ((4, 1, 2), lambda k: dd(k.a, sand(k.b, k.H2H2, k.b))),
    ((4, 2, 1), lambda k: dd(k.a, sand(k.a, k.H2H2, k.b))),
    ((5, 1, 1), lambda k: dd(k.c5, k.ab)),
    ((5, 1, 1), lambda k: dd(symm(k.d2 @ k.c3), k.ab)),
    ((5, 1, 1), lambda k: tdot(cr(k.d2, k.c3), k.axb)),
    ((5, 1, 1), lambda k: tdot(k.tHd22, k.axb)),
    ((5, 1, 1), lambda k: sand(k.a, k.Hd22, k.b)),
    # 115
    ((3, 1, 4), lambda k: dd(k.b, sand(_p2(k.b), k.H2H, k.ab_s))),
    ((3, 2, 3), lambda k: dd(k.b, sand(k.ab_s, k.H2H, k.ab_s))),
    ((3, 4, 1), lambda k: dd(k.b, sand(_p2(k.a), k.H2H, _p2(k.a)))),
    ((3, 3, 2), lambda k: dd(k.b, sand(_p2(k.a), k.H2H, k.ab_s))),
    ((3, 1, 4), lambda k: sand(k.b, tdot(k.HxH2s, cr(k.b, k.ab_s)), k.b)),
    ((3, 2, 3), lambda k: sand(k.a, tdot(k.HxH2s, cr(k.b, k.ab_s)), k.b)),
    ((3, 3, 2), lambda k: sand(k.a, tdot(k.HxH2s, cr(k.a, k.ab_s)), k.b)),
    ((3, 1, 4), lambda k: sand(k.b, dd(tdot(k.HHxH, k.axb), k.b), k.b)),
    ((3, 4, 1), lambda k: sand(k.a, dd(tdot(k.HHxH, k.axb), k.a), k.a)),
    ((3, 3, 2), lambda k: sand(k.a, dd(tdot(k.HHxH, k.axb), k.a), k.b)),
    ((3, 2, 3), lambda k: sand(k.a, dd(tdot(k.HHxH, k.axb), k.b), k.b)),
    ((3, 4, 1), lambda k: sand(k.a, tdot(k.HxH2s, cr(k.a, k.ab_s)), k.a)),
    ((4, 3, 1), lambda k: dd(k.a, tdot(k.H2sxd2, cr(k.a, k.ab_s)))),
    ((4, 3, 1), lambda k: dd(k.a, tdot(k.H2sxd2, cr(_p2(k.a), k.b)))),
    ((4, 2, 2), lambda k: dd(k.b, tdot(k.H2sxd2, cr(_p2(k.a), k.b)))),
    ((4, 1, 3), lambda k: dd(k.a, sand(k.b, k.H2H2, _p2(k.b)))),
    ((4, 3, 1), lambda k: dd(k.a, sand(k.b, k.H2H2, _p2(k.a)))),
    ((4, 3, 1), lambda k: dd(k.a, sand(k.a, k.H2H2, k.ab_s))),
    ((4, 1, 3), lambda k: dd(k.b, sand(k.b, k.H2H2, k.ab_s))),
    ((4, 2, 2), lambda k: dd(k.a, sand(k.b, k.H2H2, k.ab_s))),
    ((4, 2, 2), lambda k: dd(k.b, sand(k.b, k.H2H2, _p2(k.a)))),
    ((4, 2, 2), lambda k: dd(k.a, sand(k.a, k.H2H2, _p2(k.b)))),
    ((4, 1, 3), lambda k: sand(k.b, tdot(k.HxH3s, k.axb), k.b)),
    ((4, 3, 1), lambda k: sand(k.a, tdot(k.HxH3s, k.axb), k.a)),
    ((4, 2, 2), lambda k: sand(k.b, tdot(k.HxH3s, k.axb), k.a)),
    ((4, 3, 1), lambda k: dd(k.a, tdot(k.H2sxd2, cr(k.a, k.ab_s)))),
    ((4, 2, 2), lambda k: dd(k.a, tdot(k.H2sxd2, cr(k.b, k.ab_s)))),
    ((4, 1, 3), lambda k: dd(k.b, tdot(k.H2sxd2, cr(k.a, _p2(k.b))))),
    ((5, 2, 1), lambda k: sand(k.a, k.Hd22, k.ab)),
    ((5, 2, 1), lambda k: sand(k.b, k.Hd22, _p2(k.a))),
    ((5, 1, 2), lambda k: sand(k.b, k.Hd22, k.ab)),
    ((5, 1, 2), lambda k: sand(k.a, k.Hd22, _p2(k.b))),
    # 147
    ((5, 1, 2), lambda k: dd(k.b, tdot(k.Hxd22, k.axb))),
    ((5, 2, 1), lambda k: dd(k.a, tdot(k.Hxc4, k.axb))),
    ((5, 1, 2), lambda k: dd(k.b, tdot(k.Hxc4, k.axb))),
    ((5, 2, 1), lambda k: dd(k.a, tdot(k.H2sxc3, k.axb))),
    ((5, 1, 2), lambda k: dd(k.b, tdot(k.H2sxc3, k.axb))),
    ((5, 2, 1), lambda k: dd(k.a, tdot(k.Hxd22, k.axb))),
    ((5, 2, 1), lambda k: tdot(k.tHd22, cr(_p2(k.a), k.b))),
    ((5, 1, 2), lambda k: tdot(k.tHd22, cr(k.a, _p2(k.b)))),
    ((6, 1, 1), lambda k: dd(symm(k.d2 @ k.c4), k.ab)),
    ((6, 1, 1), lambda k: dd(_p2(k.c3), k.ab)),
    ((6, 1, 1), lambda k: tdot(k.tHc5, k.axb)),
    ((6, 1, 1), lambda k: tdot(cr(k.d2, k.c4), k.axb)),
    ((6, 1, 1), lambda k: sand(k.a, k.H2d22, k.b)),
    ((6, 2, 1), lambda k: quad(k.v5, k.a, tdot(k.H, k.axb))),
    ((6, 1, 2), lambda k: quad(k.v5, k.b, tdot(k.H, k.axb))),
    ((6, 1, 2), lambda k: quad(dd(k.tHd2, k.b), k.a, dd(k.tHd2, k.b))),
    ((6, 2, 1), lambda k: quad(dd(k.tHd2, k.a), k.b, dd(k.tHd2, k.a))),
    ((6, 1, 2), lambda k: dd(k.b, tdot(k.Hxc5, k.axb))),
    ((6, 2, 1), lambda k: dd(k.a, tdot(k.Hxc5, k.axb))),
    ((7, 1, 1), lambda k: dd(k.d2, contract(k.axb, k.v5, 1))),
    ((7, 1, 1), lambda k: tdot(cr(k.c3, k.c4), k.axb)),
    ((7, 1, 1), lambda k: dd(symm(k.c4 @ k.c3), k.ab)),
    ((7, 1, 1), lambda k: dd(symm(k.d22 @ k.c3), k.ab)),
    ((8, 1, 1), lambda k: float(k.v8a @ eps_dot(k.ab))),
    ((8, 1, 1), lambda k: dd(_p2(k.c4), k.ab)),
    ((9, 1, 1), lambda k: float(k.v9a @ eps_dot(k.ab))),
    ((9, 1, 1), lambda k: float(k.v9b @ eps_dot(k.ab))),
    ((9, 1, 1), lambda k: dd(symm(k.d22 @ k.c5), k.ab_s)),
]

H_INVARIANTS = ("I2", "I3", "I4", "I5", "I6", "I7", "I8", "I9", "I10")


def _rows() -> list[Row]:
    rows: list[Row] = [
        ("lambda", (0, 0, 0), None),
        ("mu", (0, 0, 0), None),
        ("tr(a^2)", (0, 2, 0), lambda k: np.trace(_p2(k.a))),
        ("tr(a^3)", (0, 3, 0), lambda k: np.trace(_p2(k.a) @ k.a)),
        ("tr(b^2)", (0, 0, 2), lambda k: np.trace(_p2(k.b))),
        ("tr(b^3)", (0, 0, 3), lambda k: np.trace(_p2(k.b) @ k.b)),
    ]
    for n, name in enumerate(H_INVARIANTS, start=2):
        rows.append((name, (n, 0, 0), lambda k, name=name: k.basis(name)))
    rows += [
        ("tr(ab)", (0, 1, 1), lambda k: np.trace(k.ab)),
        ("tr(a^2b)", (0, 2, 1), lambda k: np.trace(_p2(k.a) @ k.b)),
        ("tr(ab^2)", (0, 1, 2), lambda k: np.trace(k.a @ _p2(k.b))),
        ("tr(a^2b^2)", (0, 2, 2), lambda k: np.trace(_p2(k.a) @ _p2(k.b))),
    ]
    for i, (dh, dx, f) in enumerate(HA_TABLE, start=1):
        rows.append((f"j_a{i}", (dh, dx, 0), lambda k, f=f: f(k, k.a)))
    for i, (dh, dx, f) in enumerate(HA_TABLE, start=1):
        rows.append((f"j_b{i}", (dh, 0, dx), lambda k, f=f: f(k, k.b)))
    for i, (deg, f) in enumerate(HAB_TABLE, start=1):
        rows.append((f"J_i{i}", deg, f))
    return rows


ROWS: tuple[Row, ...] = tuple(_rows())
LABELS: tuple[str, ...] = tuple(r[0] for r in ROWS)
MULTI_DEGREES: dict[str, tuple[int, int, int]] = {r[0]: r[1] for r in ROWS}

if len(ROWS) != 297:  # pragma: no cover - guards the transcription
    raise RuntimeError(f"integrity basis table has {len(ROWS)} rows")


@dataclass(frozen=True)
class IntegrityBasis:
    """Labeled values of the 297 generators, in table order."""

    labels: tuple[str, ...]
    values: np.ndarray

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, label: str) -> float:
        return float(self.values[self.labels.index(label)])

    def as_dict(self) -> dict[str, float]:
        return {k: float(v) for k, v in zip(self.labels, self.values)}


def evaluate_parts(lam: float, mu: float, a, b, H: SymTensor) -> IntegrityBasis:
    """Evaluate the generators on a decomposition ``(lam, mu, a, b, H)``."""
    H = H if isinstance(H, SymTensor) else symmetrize(H)
    k = Context(H, symm(as_array(a)), symm(as_array(b)))
    values = np.empty(len(ROWS))
    values[0], values[1] = lam, mu
    for n, (_, _, f) in enumerate(ROWS[2:], start=2):
        values[n] = float(f(k))
    return IntegrityBasis(LABELS, values)


def integrity_basis(E) -> IntegrityBasis:
    from .elasticity import decompose

    dec = decompose(E)
    return evaluate_parts(dec.lam, dec.mu, dec.a, dec.b, dec.H)
