import numpy as np
import pytest
from hypothesis import given

from conftest import seeds
from elasym.classes import ELASTICITY_CLASSES, SymmetryClass as S
from elasym.covariants import (
    HarmonicCovariants,
    boehler,
    boehler_relation,
    census,
    ck,
    cov_space_dims,
    cubic_relations,
    d2,
    d3,
    ddot,
    eval_basis,
    harm4_from_params,
    symm,
)
from elasym.h4classify import CUBIC_POLY, generate_normal_form
from elasym.notation import full_to_kelvin
from elasym.tensors import SymTensor, from_poly, random_harmonic, random_rotation, rotate, trace

# (degree, order) multiplicities of the minimal basis, q included; rows are degrees
_ORDERS = (0, 1, 2, 3, 4, 5, 6, 7, 9)
_ROWS = {
    0: (0, 0, 1, 0, 0, 0, 0, 0, 0),
    1: (0, 0, 0, 0, 1, 0, 0, 0, 0),
    2: (1, 0, 1, 0, 1, 0, 1, 0, 0),
    3: (1, 0, 1, 1, 1, 1, 1, 1, 1),
    4: (1, 0, 2, 1, 1, 2, 1, 1, 1),
    5: (1, 1, 2, 2, 1, 3, 0, 1, 0),
    6: (1, 1, 2, 3, 1, 1, 0, 0, 0),
    7: (1, 2, 2, 3, 0, 0, 0, 0, 0),
    8: (1, 2, 2, 2, 0, 0, 0, 0, 0),
    9: (1, 3, 1, 0, 0, 0, 0, 0, 0),
    10: (1, 2, 0, 0, 0, 0, 0, 0, 0),
    11: (0, 2, 0, 0, 0, 0, 0, 0, 0),
    12: (0, 1, 0, 0, 0, 0, 0, 0, 0),
}
CENSUS = {(d, k): n for d, row in _ROWS.items() for k, n in zip(_ORDERS, row)}
ORDER_TOTALS = {0: 9, 1: 14, 2: 14, 3: 12, 4: 6, 5: 7, 6: 3, 7: 3, 9: 2}


def unit_h(rng):
    H = random_harmonic(4, rng)
    return H / H.norm()


def cubic_h(scale=1.0):
    return scale * from_poly(CUBIC_POLY)


class TestParams:
    def test_param_form_is_harmonic(self, rng):
        H = harm4_from_params(*rng.normal(size=9))
        assert trace(H).norm() < 1e-13

    def test_kelvin_entry_from_x1(self):
        K = full_to_kelvin(harm4_from_params(0, 0, 0, 1.0, 0, 0, 0, 0, 0).full())
        assert K[0, 3] == pytest.approx(-np.sqrt(2.0))


class TestSecondOrder:
    @given(seeds)
    def test_trace_d2_is_norm_squared(self, seed):
        H = random_harmonic(4, np.random.default_rng(seed))
        assert float(trace(d2(H))) == pytest.approx(H.norm() ** 2, rel=1e-12)

    @given(seeds)
    def test_c3_is_twice_d3_deviator(self, seed):
        H = unit_h(np.random.default_rng(seed))
        D3 = d3(H).full()
        assert np.linalg.norm(ck(H, 3).full() - 2 * (D3 - np.trace(D3) / 3 * np.eye(3))) < 1e-12

    def test_zero_input(self):
        H = SymTensor.zeros(4)
        for t in (d2(H), d3(H), ck(H, 3), ck(H, 4), ck(H, 5)):
            assert t.norm() == 0
        assert all(v == 0 for v in boehler(H).J.values())

    def test_ck_range(self, rng):
        with pytest.raises(ValueError):
            ck(unit_h(rng), 6)

    def test_h_colon_d2_squared(self, rng):
        for _ in range(10):
            H = unit_h(rng)
            cov = HarmonicCovariants(H)
            J = boehler(H).J
            D2, C3, C5 = cov.d2, cov.c3, cov.c5
            lhs = 8 * ddot(cov.Hf, cov.d2sq)
            rhs = ((2 / 3) * J[2] * J[3] + 4 * J[5]) * np.eye(3) - 2 * J[3] * D2 + 7 * J[2] * C3 + 10 * C5 - 12 * symm(D2 @ C3)
            assert np.linalg.norm(lhs - rhs) < 1e-12


class TestBoehler:
    def test_traces(self, rng):
        b = boehler(unit_h(rng))
        for k in range(2, 11):
            assert b.J[k] == pytest.approx(np.trace(b.d[k]), abs=1e-15)
        for k in (2, 3, 4, 6):
            assert np.allclose(b.d[k], b.d[k].T, atol=1e-14)

    @given(seeds)
    def test_relation(self, seed):
        assert abs(boehler_relation(unit_h(np.random.default_rng(seed)))) < 1e-9

    @given(seeds)
    def test_invariance(self, seed):
        rng = np.random.default_rng(seed)
        H = unit_h(rng)
        J0 = boehler(H).J
        J1 = boehler(rotate(random_rotation(rng), H)).J
        for k in J0:
            assert J1[k] == pytest.approx(J0[k], rel=1e-10, abs=1e-12)

    @pytest.mark.parametrize("scale", [1.0, -0.7, 2.5])
    def test_cubic_relations(self, scale):
        H = cubic_h(scale)
        H = rotate(random_rotation(3), H)
        J2 = boehler(H).J[2]
        for name, v in cubic_relations(H).items():
            assert abs(v) < 1e-9 * max(1.0, J2**3), name

    def test_isotropic_d2_forces_vanishing(self):
        H = cubic_h()
        b = boehler(H)
        assert np.allclose(b.d[2], b.J[2] / 3 * np.eye(3), atol=1e-13)
        for k in (5, 7, 8, 9, 10):
            assert np.abs(b.d[k]).max() < 1e-12


class TestBasis:
    def test_count_and_census(self, rng):
        entries = eval_basis(unit_h(rng))
        assert len(entries) == 70
        assert entries[0].id == "q"
        got = census(entries)
        for key, count in CENSUS.items():
            assert got.get(key, 0) == count, key
        assert set(got) <= set(CENSUS)
        per_order = {}
        for (_, order), n in got.items():
            per_order[order] = per_order.get(order, 0) + n
        assert per_order == ORDER_TOTALS
        assert sum(n for (d, _), n in got.items() if d == 12) == 1

    def test_zero_input(self):
        for e in eval_basis(SymTensor.zeros(4)):
            if e.degree > 0:
                assert e.value.norm() == 0, e.id

    @given(seeds)
    def test_equivariance(self, seed):
        rng = np.random.default_rng(seed)
        H, g = unit_h(rng), random_rotation(rng)
        for e, m in zip(eval_basis(H), eval_basis(rotate(g, H))):
            ref = rotate(g, e.value) if e.order else e.value
            assert (m.value - ref).norm() <= 1e-8 * max(e.value.norm(), 1e-12), e.id

    def test_homogeneity(self, rng):
        H = unit_h(rng)
        for e, m in zip(eval_basis(H), eval_basis(2.0 * H)):
            assert (m.value - 2.0**e.degree * e.value).norm() <= 1e-12 * max((2.0**e.degree * e.value).norm(), 1e-300)

    def test_transversely_isotropic_has_no_vectors(self):
        H = rotate(random_rotation(4), generate_normal_form(S.TRANSVERSELY_ISOTROPIC, seed=4))
        H = H / H.norm()
        for e in eval_basis(H):
            if e.order == 1:
                assert e.value.norm() < 1e-12, e.id


EXPECTED_DIMS = {
    S.ISOTROPIC: (0, 1), S.CUBIC: (0, 1),
    S.TRANSVERSELY_ISOTROPIC: (0, 2), S.TETRAGONAL: (0, 2), S.TRIGONAL: (0, 2),
    S.ORTHOTROPIC: (0, 3), S.MONOCLINIC: (1, 4), S.TRICLINIC: (3, 6),
}


class TestDimensions:
    @pytest.mark.parametrize("cls", ELASTICITY_CLASSES, ids=str)
    def test_class_dims(self, cls):
        H = generate_normal_form(cls, seed=11)
        H = rotate(random_rotation(11), H)
        dims = cov_space_dims(H)
        assert dims == EXPECTED_DIMS[cls]
        c1, c2 = dims
        assert (c1 == 0) == (c2 <= 3)
        assert (c1 == 1) == (c2 == 4)
        assert (c1 == 3) == (c2 == 6)

    def test_zero_and_cubic(self):
        assert cov_space_dims(SymTensor.zeros(4)) == (0, 1)
        assert cov_space_dims(cubic_h()) == (0, 1)

    def test_bad_tol(self, rng):
        with pytest.raises(ValueError):
            cov_space_dims(unit_h(rng), 0.0)
