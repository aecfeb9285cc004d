"""Symmetry class of a fourth-order harmonic tensor, alone or jointly with second-order tensors."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.spatial.transform import Rotation

from .classes import SymmetryClass as S
from .covariants import HarmonicCovariants, ddot, harm4_from_params, symm
from .sym2 import DEFAULT_TOL, analyse_family
from .tensors import SymTensor, as_array, cross, from_poly, random_harmonic, rotate, trace


@dataclass(frozen=True)
class Check:
    """One vanishing test: ``residual <= threshold`` means the quantity counts as zero."""

    name: str
    residual: float
    threshold: float
    outcome: str | None = None  # set for family-classification steps, which are not vanishing tests

    @property
    def vanishes(self) -> bool:
        return self.residual <= self.threshold


@dataclass
class Ledger:
    tol: float
    checks: list[Check] = field(default_factory=list)

    def zero(self, name: str, value) -> bool:
        r = float(np.linalg.norm(as_array(value))) if not np.isscalar(value) else abs(float(value))
        c = Check(name, r, self.tol)
        self.checks.append(c)
        return c.vanishes

    def note(self, name: str, outcome: str):
        self.checks.append(Check(name, 0.0, 0.0, outcome))


@dataclass(frozen=True)
class JointReport:
    cls: S
    checks: tuple[Check, ...]


def _unit(m):
    n = np.linalg.norm(m)
    return m / n if n > 0 else m


def _deviator(m):
    return m - np.trace(m) / 3.0 * np.eye(3)


def _prepare_h(H, tol: float, floor: float = 0.0) -> tuple[SymTensor, float]:
    if not isinstance(H, SymTensor):
        from .tensors import symmetrize

        H = symmetrize(H)
    if H.order != 4:
        raise ValueError("expected a fourth-order tensor")
    n = H.norm()
    if n > 0 and trace(H).norm() > tol * max(n, floor):
        raise ValueError("tensor is not harmonic (trace residual exceeds tol)")
    return H, n


def classify_h4(H, tol: float = DEFAULT_TOL) -> S:
    return explain_h4(H, tol).cls


def explain_h4(H, tol: float = DEFAULT_TOL) -> JointReport:
    """Classify a harmonic H from d2, c3, c4, v5, v6 and the cross products with d2."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    H, n = _prepare_h(H, tol)
    led = Ledger(tol)
    if n == 0:
        led.note("H = 0", "isotropic")
        return JointReport(S.ISOTROPIC, tuple(led.checks))
    cov = HarmonicCovariants(H / n)
    dev = _deviator(cov.d2)
    if led.zero("d2' = 0", dev):
        return JointReport(S.CUBIC, tuple(led.checks))
    t = _unit(dev)
    if led.zero("d2 x d2^2 = 0", cross(t, t @ t)):
        if led.zero("H x d2 = 0", cross(cov.Hf, t)):
            return JointReport(S.TRANSVERSELY_ISOTROPIC, tuple(led.checks))
        if led.zero("tr(H x d2) = 0", trace(cross(cov.Hf, t))):
            return JointReport(S.TETRAGONAL, tuple(led.checks))
        if led.zero("(H:d2) x d2 = 0", cross(ddot(cov.Hf, t), t)):
            return JointReport(S.TRIGONAL, tuple(led.checks))
    v5_zero = led.zero("v5 = 0", cov.v5)
    v6_zero = led.zero("v6 = 0", cov.v6)
    if v5_zero and v6_zero and analyse_family([cov.d2, cov.c3], tol).cls == S.ORTHOTROPIC:
        led.note("(d2, c3)", "orthotropic")
        return JointReport(S.ORTHOTROPIC, tuple(led.checks))
    if analyse_family([cov.d2, cov.c3, cov.c4], tol).cls == S.MONOCLINIC:
        led.note("(d2, c3, c4)", "monoclinic")
        return JointReport(S.MONOCLINIC, tuple(led.checks))
    led.note("(d2, c3, c4)", "triclinic")
    return JointReport(S.TRICLINIC, tuple(led.checks))


# --------------------------------------------------------------------------
# joint classification of (H, a, b)
# --------------------------------------------------------------------------

def classify_joint(H, a, b, tol: float = DEFAULT_TOL) -> JointReport:
    """Class of the triple (H, a, b) with H harmonic and a, b symmetric second-order.

    The three inputs must be on a common normalized scale: a component whose
    Frobenius norm is at most ``tol`` is treated as zero, the others are
    rescaled to unit norm (the class of a tuple does not depend on the scale of
    its members).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    H, nh = _prepare_h(H, tol, floor=1.0)
    A = _deviator(symm(as_array(a)))
    B = _deviator(symm(as_array(b)))
    led = Ledger(tol)
    h_zero = led.zero("H = 0", nh)
    a_zero = led.zero("a = 0", A)
    b_zero = led.zero("b = 0", B)
    A = np.zeros((3, 3)) if a_zero else _unit(A)
    B = np.zeros((3, 3)) if b_zero else _unit(B)
    Hu = SymTensor.zeros(4) if h_zero else H / nh
    cov = HarmonicCovariants(Hu)
    Hf = cov.Hf
    D2 = cov.d2

    def done(c):
        return JointReport(c, tuple(led.checks))

    if a_zero and b_zero:
        if led.zero("d2 = 0", D2):
            return done(S.ISOTROPIC)
        if led.zero("d2' = 0", _deviator(D2)):
            return done(S.CUBIC)

    fam = analyse_family([D2, A, B], tol).cls
    led.note("(d2, a, b)", fam.label)
    if fam == S.TRANSVERSELY_ISOTROPIC:
        axes = []
        for label, m in (("d2", _deviator(D2)), ("a", A), ("b", B)):
            if np.linalg.norm(m) > tol:
                axes.append((label, _unit(m)))
        crosses = [led.zero(f"H x {k} = 0", cross(Hf, t)) for k, t in axes]
        if all(crosses):
            return done(S.TRANSVERSELY_ISOTROPIC)
        traces = [led.zero(f"tr(H x {k}) = 0", trace(cross(Hf, t))) for k, t in axes]
        if all(traces):
            return done(S.TETRAGONAL)
        trig = [led.zero(f"{k} x (H:{k}) = 0", cross(t, ddot(Hf, t))) for k, t in axes]
        if all(trig):
            return done(S.TRIGONAL)

    HA, HB = ddot(Hf, A), ddot(Hf, B)
    f_o = [D2, A, B, cov.c3, cov.c4, HA, HB, ddot(Hf, A @ A), ddot(Hf, B @ B)]
    fo = analyse_family(f_o, tol).cls
    led.note("F_o", fo.label)
    if fo == S.ORTHOTROPIC:
        return done(S.ORTHOTROPIC)
    f_m = f_o + [ddot(Hf, symm(A @ B)), ddot(Hf, symm(A @ D2)), ddot(Hf, symm(B @ D2))]
    fm = analyse_family(f_m, tol).cls
    led.note("F_m", fm.label)
    if fm == S.MONOCLINIC:
        return done(S.MONOCLINIC)
    return done(S.TRICLINIC)


def classify_pair_Ht(H, t, tol: float = DEFAULT_TOL) -> S:
    """Class of the pair (H, t) for a transversely isotropic second-order ``t``.

    Cubic ``H`` goes through the cube-orientation criteria; every other case
    is the joint cascade with ``a = t'`` and ``b = 0``.
    """
    H, nh = _prepare_h(H, tol)
    T = symm(as_array(t))
    dev = _deviator(T)
    if np.linalg.norm(dev) <= tol * np.linalg.norm(T) or np.linalg.norm(cross(_unit(dev), _unit(dev) @ _unit(dev)).full()) > tol:
        raise ValueError("t is not transversely isotropic")
    t = _unit(dev)
    if nh == 0:
        return S.TRANSVERSELY_ISOTROPIC
    Hu = H / nh
    if classify_h4(Hu, tol) == S.CUBIC:
        Hf = Hu.full()
        if np.linalg.norm(trace(cross(Hf, t)).components) <= tol:
            return S.TETRAGONAL
        m = ddot(Hf, t)
        if cross(t, m).norm() <= tol:
            return S.TRIGONAL
        w1 = trace(cross(t, m)).components
        if np.linalg.norm(w1) <= tol:
            return S.ORTHOTROPIC
        w2 = trace(cross(t, m @ m)).components
        if np.linalg.norm(w2) <= tol or np.linalg.norm(np.cross(_unit(w1), _unit(w2))) <= tol:
            return S.MONOCLINIC
        return S.TRICLINIC
    return classify_joint(Hu, t, np.zeros((3, 3)), tol).cls


# --------------------------------------------------------------------------
# normal forms
# --------------------------------------------------------------------------

def axis_rotation(axis, angle: float) -> np.ndarray:
    axis = np.asarray(axis, dtype=float)
    return Rotation.from_rotvec(angle * axis / np.linalg.norm(axis)).as_matrix()


E1, E2, E3 = np.eye(3)
CUBIC_POLY = {(4, 0, 0): 1.0, (0, 4, 0): 1.0, (0, 0, 4): 1.0, (2, 2, 0): -3.0, (2, 0, 2): -3.0, (0, 2, 2): -3.0}
ZONAL_POLY = {(0, 0, 4): 8.0, (2, 0, 2): -24.0, (0, 2, 2): -24.0, (4, 0, 0): 3.0, (2, 2, 0): 6.0, (0, 4, 0): 3.0}

# generators of the group in normal position, and rotations of a minimal
# over-group that must move a generic representative
GROUP_GENERATORS = {
    S.ISOTROPIC: [axis_rotation(E3, 0.7), axis_rotation(E1, 0.9)],
    S.CUBIC: [axis_rotation(E3, np.pi / 2), axis_rotation(E1, np.pi / 2)],
    S.TRANSVERSELY_ISOTROPIC: [axis_rotation(E3, 0.7), axis_rotation(E1, np.pi)],
    S.TETRAGONAL: [axis_rotation(E3, np.pi / 2), axis_rotation(E1, np.pi)],
    S.TRIGONAL: [axis_rotation(E3, 2 * np.pi / 3), axis_rotation(E1, np.pi)],
    S.ORTHOTROPIC: [axis_rotation(E1, np.pi), axis_rotation(E2, np.pi)],
    S.MONOCLINIC: [axis_rotation(E3, np.pi)],
    S.TRICLINIC: [],
}
SUPERGROUP_WITNESSES = {
    S.ISOTROPIC: [],
    S.CUBIC: [axis_rotation(E3, 0.3)],
    S.TRANSVERSELY_ISOTROPIC: [axis_rotation(E1, 0.3)],
    S.TETRAGONAL: [axis_rotation(E3, np.pi / 4), axis_rotation(E1, np.pi / 2)],
    S.TRIGONAL: [axis_rotation(E3, np.pi / 3), axis_rotation(E3, 0.3)],
    S.ORTHOTROPIC: [axis_rotation(E1, np.pi / 2), axis_rotation(E2, np.pi / 2), axis_rotation(E3, np.pi / 2)],
    S.MONOCLINIC: [axis_rotation(E1, np.pi), axis_rotation(E2, np.pi), axis_rotation(E3, np.pi / 2)],
    S.TRICLINIC: [],
}


def _draw(cls: S, params: dict, rng: np.random.Generator) -> SymTensor:
    p = dict(params)

    def get(name, lo=0.3, hi=1.5):
        if name not in p:
            p[name] = float(rng.choice([-1.0, 1.0]) * rng.uniform(lo, hi))
        return p[name]

    if cls == S.ISOTROPIC:
        return SymTensor.zeros(4)
    if cls == S.CUBIC:
        return get("k") * from_poly(CUBIC_POLY)
    if cls == S.TRANSVERSELY_ISOTROPIC:
        return get("k") * from_poly(ZONAL_POLY)
    if cls == S.TETRAGONAL:
        L1 = get("L1")
        return harm4_from_params(L1, L1, get("L3"), 0, 0, 0, 0, 0, 0)
    if cls == S.TRIGONAL:
        L3, X1 = get("L3"), get("X1")
        return harm4_from_params(-4 * L3, -4 * L3, L3, X1, -X1, 0, 0, 0, 0)
    if cls == S.ORTHOTROPIC:
        return harm4_from_params(get("L1"), get("L2"), get("L3"), 0, 0, 0, 0, 0, 0)
    H = random_harmonic(4, rng)
    if cls == S.MONOCLINIC:
        return 0.5 * (H + rotate(axis_rotation(E3, np.pi), H))
    return H


def validate_normal_form(H: SymTensor, cls: S, tol: float = DEFAULT_TOL) -> bool:
    n = H.norm()
    if cls == S.ISOTROPIC:
        return n == 0
    if n == 0:
        return False
    fixed = all((rotate(g, H) - H).norm() <= 1e-12 * n for g in GROUP_GENERATORS[cls])
    moved = all((rotate(g, H) - H).norm() > 1e-6 * n for g in SUPERGROUP_WITNESSES[cls])
    return fixed and moved and classify_h4(H, tol) == cls


def generate_normal_form(cls, params: dict | None = None, seed=None, max_tries: int = 50) -> SymTensor:
    """Representative of ``cls`` with its symmetry elements aligned to the frame.

    The in-plane gauge parameters of the trigonal and tetragonal block forms
    (Y1 and Z2) are pinned to zero so that a two-fold axis lies along e1.
    Parameters not supplied in ``params`` are drawn from ``seed``; a draw that
    fails validation is discarded and redrawn.  Supplied parameters are never
    altered, so a non-generic choice raises ``ValueError``.
    """
    cls = S.parse(cls) if isinstance(cls, str) else cls
    if cls not in GROUP_GENERATORS:
        raise ValueError(f"{cls} is not a symmetry class of fourth-order harmonic tensors")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        H = _draw(cls, params or {}, rng)
        if validate_normal_form(H, cls):
            return H
        if params and cls not in (S.MONOCLINIC, S.TRICLINIC) and _fully_specified(cls, params):
            break
    raise ValueError(f"could not produce a generic {cls} representative")


_PARAM_NAMES = {
    S.CUBIC: {"k"},
    S.TRANSVERSELY_ISOTROPIC: {"k"},
    S.TETRAGONAL: {"L1", "L3"},
    S.TRIGONAL: {"L3", "X1"},
    S.ORTHOTROPIC: {"L1", "L2", "L3"},
}


def _fully_specified(cls: S, params: dict) -> bool:
    return _PARAM_NAMES.get(cls, set()) <= set(params)
