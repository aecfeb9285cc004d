import numpy as np
import pytest

from elasym.classes import ELASTICITY_CLASSES, SymmetryClass as S
from elasym.covariants import HarmonicCovariants, eval_basis, harm4_from_params
from elasym.h4classify import (
    CUBIC_POLY,
    GROUP_GENERATORS,
    classify_h4,
    classify_pair_Ht,
    explain_h4,
    generate_normal_form,
)
from elasym.tensors import SymTensor, contract, from_poly, random_harmonic, random_rotation, random_sym, rotate

CUBIC = from_poly(CUBIC_POLY)


def axis_tensor(n):
    n = np.asarray(n, dtype=float)
    n = n / np.linalg.norm(n)
    return np.outer(n, n)


class TestExamples:
    def test_zero(self):
        assert classify_h4(SymTensor.zeros(4)) == S.ISOTROPIC

    def test_cubic(self):
        assert classify_h4(CUBIC) == S.CUBIC

    def test_orthotropic_params(self):
        assert classify_h4(harm4_from_params(1, 2, 4, 0, 0, 0, 0, 0, 0)) == S.ORTHOTROPIC

    def test_trigonal_block(self):
        assert classify_h4(harm4_from_params(-4, -4, 1, 1, -1, 0, 0, 0, 0)) == S.TRIGONAL

    def test_non_harmonic_rejected(self, rng):
        with pytest.raises(ValueError):
            classify_h4(random_sym(4, rng))

    def test_explain_records_checks(self):
        rep = explain_h4(CUBIC)
        assert rep.cls == S.CUBIC
        assert rep.checks[-1].name == "d2' = 0" and rep.checks[-1].vanishes


class TestPairs:
    @pytest.mark.parametrize(
        "axis,expected",
        [((0, 0, 1), S.TETRAGONAL), ((1, 1, 1), S.TRIGONAL), ((1, 1, 0), S.ORTHOTROPIC),
         ((1, 2, 0), S.MONOCLINIC), ((1, 1, 2), S.MONOCLINIC), ((1, 2, 3), S.TRICLINIC)],
    )
    def test_cube_orientation(self, axis, expected):
        assert classify_pair_Ht(CUBIC, axis_tensor(axis)) == expected
        g = random_rotation(17)
        t = g @ axis_tensor(axis) @ g.T
        assert classify_pair_Ht(rotate(g, CUBIC), t) == expected

    def test_rejects_non_axial(self):
        with pytest.raises(ValueError):
            classify_pair_Ht(CUBIC, np.diag([1.0, 2, 3]))

    def test_zonal_pair(self):
        H = generate_normal_form(S.TRANSVERSELY_ISOTROPIC, seed=1)
        assert classify_pair_Ht(H, axis_tensor((0, 0, 1))) == S.TRANSVERSELY_ISOTROPIC
        assert classify_pair_Ht(H, axis_tensor((1, 0, 0))) == S.ORTHOTROPIC


class TestNormalForms:
    def test_isotropic_is_zero(self):
        assert generate_normal_form(S.ISOTROPIC, seed=0).norm() == 0

    def test_cubic_is_scaled_polynomial(self):
        H = generate_normal_form(S.CUBIC, params={"k": 2.0})
        assert (H - 2.0 * CUBIC).norm() < 1e-14

    def test_bad_params(self):
        with pytest.raises(ValueError):
            generate_normal_form(S.ORTHOTROPIC, params={"L1": 1.0, "L2": 1.0, "L3": 1.0})

    def test_bad_class(self):
        with pytest.raises(ValueError):
            generate_normal_form(S.ICOSAHEDRAL, seed=0)

    def test_deterministic(self):
        a = generate_normal_form(S.MONOCLINIC, seed=5)
        assert a == generate_normal_form(S.MONOCLINIC, seed=5)

    @pytest.mark.parametrize("cls", ELASTICITY_CLASSES, ids=str)
    def test_generators_fix_form(self, cls):
        for seed in range(5):
            H = generate_normal_form(cls, seed=seed)
            assert classify_h4(H) == cls
            for g in GROUP_GENERATORS[cls]:
                assert (rotate(g, H) - H).norm() <= 1e-12 * max(H.norm(), 1)

    @pytest.mark.parametrize("cls", ELASTICITY_CLASSES, ids=str)
    def test_rotation_invariance(self, cls):
        rng = np.random.default_rng(100)
        H = generate_normal_form(cls, seed=3)
        for _ in range(100):
            assert classify_h4(rotate(random_rotation(rng), H)) == cls


def v5_conditions(H, tol=1e-8):
    """Both vanishing conditions built from v5 that characterize classes at least monoclinic."""
    Hn = H / H.norm()
    cov = HarmonicCovariants(Hn)
    v = cov.v5
    if np.linalg.norm(v) <= tol:
        return True
    v = v / np.linalg.norm(v)
    out = []
    for T in (cov.Hf, cov.H2):
        m = contract(contract(v, T, 1), v, 1)
        out.append(np.linalg.norm(np.cross(v, m @ v)) <= tol)
    return all(out)


class TestVectorCovariants:
    @pytest.mark.parametrize("cls", ELASTICITY_CLASSES[1:], ids=str)
    def test_v5_corollary(self, cls):
        for seed in range(3):
            H = rotate(random_rotation(seed), generate_normal_form(cls, seed=seed))
            assert v5_conditions(H) == (cls != S.TRICLINIC)

    @pytest.mark.parametrize("cls", ELASTICITY_CLASSES[1:6], ids=str)
    def test_vanishing_v5_v6_kills_all_vectors(self, cls):
        tol = 1e-8
        H = rotate(random_rotation(2), generate_normal_form(cls, seed=2))
        H = H / H.norm()
        cov = HarmonicCovariants(H)
        assert np.linalg.norm(cov.v5) <= tol and np.linalg.norm(cov.v6) <= tol
        for e in eval_basis(H):
            if e.order == 1:
                assert e.value.norm() <= 10 * tol

    def test_random_is_triclinic(self, rng):
        for _ in range(20):
            assert classify_h4(random_harmonic(4, rng)) == S.TRICLINIC
