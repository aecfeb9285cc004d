"""Self-check suites run by ``elasym verify``.

Each suite returns rows ``(name, residual, threshold)``; a row passes when the
residual does not exceed its threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .binary import cartan_pullback, is_real_form, kappa, verify_translation
from .classes import ELASTICITY_CLASSES
from .covariants import HarmonicCovariants, boehler_relation, census, eval_basis
from .elasticity import ElasticityTensor, classify_elasticity, decompose, generate_elasticity, reconstruct
from .tensors import (
    harmonic_decompose,
    random_harmonic,
    random_rotation,
    random_sym,
    recompose,
    rotate,
    sym_product,
    trace,
)

EXPECTED_CENSUS = {
    0: 9, 1: 14, 2: 14, 3: 12, 4: 6, 5: 7, 6: 3, 7: 3, 9: 2,
}


@dataclass(frozen=True)
class Row:
    suite: str
    name: str
    residual: float
    threshold: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.threshold)


def _unit_harmonic(order: int, rng):
    H = random_harmonic(order, rng)
    return H / H.norm()


def suite_core(seed: int = 0) -> list[Row]:
    rng = np.random.default_rng(seed)
    rows = []
    worst = 0.0
    for order in range(2, 7):
        s = random_sym(order, rng)
        parts = harmonic_decompose(s)
        worst = max(worst, (recompose(parts) - s).norm() / s.norm())
        worst = max(worst, max(trace(p).norm() for p in parts if p.order >= 2) / s.norm())
    rows.append(Row("core", "harmonic decomposition recomposes, parts traceless", worst, 1e-12))

    worst = 0.0
    for _ in range(20):
        g = random_rotation(rng)
        s1, s2 = random_sym(3, rng), random_sym(2, rng)
        lhs = rotate(g, sym_product(s1, s2))
        rhs = sym_product(rotate(g, s1), rotate(g, s2))
        worst = max(worst, (lhs - rhs).norm() / lhs.norm())
    rows.append(Row("core", "symmetric product is rotation equivariant", worst, 1e-12))

    worst = 0.0
    for _ in range(50):
        m = rng.normal(size=(6, 6))
        E = ElasticityTensor.from_voigt(m + m.T)
        worst = max(worst, np.linalg.norm(reconstruct(decompose(E)).full() - E.full()) / E.norm())
    rows.append(Row("core", "reconstruct(decompose(E)) = E", worst, 1e-12))

    misses = 0
    for cls in ELASTICITY_CLASSES:
        for k in range(3):
            if classify_elasticity(generate_elasticity(cls, seed=seed * 100 + k, rotate=True)) != cls:
                misses += 1
    rows.append(Row("core", "rotated class fixtures classify correctly (misses)", float(misses), 0.0))
    return rows


def suite_covariants(seed: int = 0) -> list[Row]:
    rng = np.random.default_rng(seed)
    rows = []
    H = _unit_harmonic(4, rng)
    hist: dict[int, int] = {}
    for (_, order), count in census(eval_basis(H)).items():
        hist[order] = hist.get(order, 0) + count
    rows.append(Row("covariants", "census by order matches (mismatched orders)",
                    float(sum(hist.get(k, 0) != v for k, v in EXPECTED_CENSUS.items())), 0.0))

    worst = 0.0
    for _ in range(5):
        H = _unit_harmonic(4, rng)
        g = random_rotation(rng)
        base = eval_basis(H)
        moved = eval_basis(rotate(g, H))
        for e, m in zip(base, moved):
            ref = rotate(g, e.value) if e.order > 0 else e.value
            worst = max(worst, (m.value - ref).norm() / max(e.value.norm(), 1e-300))
    rows.append(Row("covariants", "70 entries are rotation equivariant", worst, 1e-8))

    worst_rel = worst_c3 = 0.0
    for _ in range(20):
        H = _unit_harmonic(4, rng)
        worst_rel = max(worst_rel, abs(boehler_relation(H)))
        cov = HarmonicCovariants(H)
        d3 = cov.d3 - np.trace(cov.d3) / 3 * np.eye(3)
        worst_c3 = max(worst_c3, np.linalg.norm(cov.c3 - 2 * d3))
    rows.append(Row("covariants", "240J6 + 39J2^3 + 190J3^2 - 198J2J4 - 540tr(d3^2) = 0", worst_rel, 1e-9))
    rows.append(Row("covariants", "c3 = 2 d3'", worst_c3, 1e-12))
    return rows


def suite_bridge(seed: int = 0) -> list[Row]:
    rng = np.random.default_rng(seed)
    rows = []
    for n in (2, 4):
        for p in (2, 4):
            H1, H2 = _unit_harmonic(n, rng), _unit_harmonic(p, rng)
            for r in range(min(n, p) + 1):
                even, odd = verify_translation(H1, H2, r)
                if even is not None:
                    rows.append(Row("bridge", f"even identity n={n} p={p} r={r}", even, 1e-9))
                if odd is not None:
                    rows.append(Row("bridge", f"odd identity n={n} p={p} r={r}", odd, 1e-9))
    rows.append(Row("bridge", "kappa(4,4,1) = 7/12", abs(float(kappa(4, 4, 1) - Fraction(7, 12))), 0.0))
    bad = sum(not is_real_form(cartan_pullback(_unit_harmonic(n, rng))) for n in (1, 2, 3, 4) for _ in range(5))
    rows.append(Row("bridge", "pullbacks of real harmonic tensors are real forms (failures)", float(bad), 0.0))
    return rows


SUITES = {"core": suite_core, "covariants": suite_covariants, "bridge": suite_bridge}


def run(suite: str = "all", seed: int = 0) -> list[Row]:
    if suite == "all":
        return [row for fn in SUITES.values() for row in fn(seed)]
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return SUITES[suite](seed)
