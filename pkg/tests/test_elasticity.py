import numpy as np
import pytest
from hypothesis import given

from conftest import seeds
from elasym.classes import ELASTICITY_CLASSES, SymmetryClass as S, is_at_least
from elasym.covariants import harm4_from_params
from elasym.elasticity import (
    ElasticityTensor,
    classify_elasticity,
    decompose,
    dilatation,
    explain_elasticity,
    generate_elasticity,
    reconstruct,
    voigt_tensor,
)
from elasym.h4classify import CUBIC_POLY
from elasym.notation import (
    components21_from_voigt,
    full_to_voigt,
    kelvin_to_voigt,
    voigt_from_components21,
    voigt_to_full,
    voigt_to_kelvin,
)
from elasym.tensors import from_poly, random_harmonic, random_rotation, rotate_full, trace

Q = np.eye(3)


def random_deviator(rng):
    m = rng.normal(size=(3, 3))
    m = m + m.T
    return m - np.trace(m) / 3 * Q


def random_voigt(rng):
    m = rng.normal(size=(6, 6))
    return m + m.T


def iso_voigt(lam, mu):
    m = np.zeros((6, 6))
    m[:3, :3] = lam
    m[np.arange(3), np.arange(3)] = lam + 2 * mu
    m[np.arange(3, 6), np.arange(3, 6)] = mu
    return m


class TestNotation:
    def test_isotropic_pattern(self):
        v = reconstruct(1.0, 1.0).to_voigt()
        assert np.array_equal(v, iso_voigt(1.0, 1.0))
        assert np.array_equal(np.diag(v), [3, 3, 3, 1, 1, 1])

    def test_voigt_roundtrip_exact(self, rng):
        m = random_voigt(rng)
        assert np.array_equal(ElasticityTensor.from_voigt(m).to_voigt(), m)

    def test_kelvin_scaling(self, rng):
        m = random_voigt(rng)
        k = voigt_to_kelvin(m)
        P = np.diag([1, 1, 1, np.sqrt(2), np.sqrt(2), np.sqrt(2)])
        assert np.allclose(k, P @ m @ P, rtol=0, atol=1e-14)
        assert np.allclose(kelvin_to_voigt(k), m, atol=1e-14)
        E = ElasticityTensor.from_voigt(m)
        assert np.linalg.norm(E.to_kelvin()) == pytest.approx(np.linalg.norm(E.full()), rel=1e-13)

    def test_full_roundtrip(self, rng):
        m = random_voigt(rng)
        t = voigt_to_full(m)
        assert np.array_equal(full_to_voigt(t), m)
        for perm in ((1, 0, 2, 3), (0, 1, 3, 2), (2, 3, 0, 1)):
            assert np.array_equal(t, t.transpose(perm))

    def test_components21(self, rng):
        m = random_voigt(rng)
        assert np.array_equal(voigt_from_components21(components21_from_voigt(m)), m)
        with pytest.raises(ValueError):
            voigt_from_components21(range(20))

    def test_kelvin_entry_of_harmonic_block(self):
        H = harm4_from_params(0, 0, 0, 1.0, 0, 0, 0, 0, 0)
        K = reconstruct(0.0, 0.0, H=H).to_kelvin()
        assert K[0, 3] == pytest.approx(-np.sqrt(2.0))

    def test_rejects_bad_input(self):
        m = iso_voigt(1, 1)
        m[0, 1] += 1e-6
        with pytest.raises(ValueError):
            ElasticityTensor.from_voigt(m)
        with pytest.raises(ValueError):
            ElasticityTensor.from_voigt(np.eye(5))
        bad = iso_voigt(1, 1)
        bad[2, 2] = np.nan
        with pytest.raises(ValueError):
            ElasticityTensor.from_voigt(bad)
        t = voigt_to_full(iso_voigt(1, 1))
        t[0, 1, 2, 2] += 1.0
        with pytest.raises(ValueError):
            ElasticityTensor.from_full(t)

    def test_rotation_matches_dense(self, rng):
        E = ElasticityTensor.from_voigt(random_voigt(rng))
        g = random_rotation(rng)
        assert np.allclose(E.rotate(g).full(), rotate_full(g, E.full()), atol=1e-13)


class TestTraces:
    @given(seeds)
    def test_isotropic(self, seed):
        lam, mu = np.random.default_rng(seed).uniform(-2, 2, 2)
        E = reconstruct(lam, mu)
        assert np.allclose(dilatation(E), (3 * lam + 2 * mu) * Q, atol=1e-13)
        assert np.allclose(voigt_tensor(E), (lam + 4 * mu) * Q, atol=1e-13)
        assert np.trace(dilatation(E)) == pytest.approx(9 * lam + 6 * mu, abs=1e-12)
        assert np.trace(voigt_tensor(E)) == pytest.approx(3 * lam + 12 * mu, abs=1e-12)

    def test_zero(self):
        E = ElasticityTensor.from_voigt(np.zeros((6, 6)))
        assert not dilatation(E).any() and not voigt_tensor(E).any()

    def test_deviator_parts(self, rng):
        a, b = random_deviator(rng), random_deviator(rng)
        E = reconstruct(0.0, 0.0, a, None, None)
        assert np.allclose(dilatation(E), 3 * a, atol=1e-13)
        assert np.allclose(voigt_tensor(E), 2 * a, atol=1e-13)
        E = reconstruct(0.0, 0.0, None, b, None)
        assert np.allclose(dilatation(E), 4 * b, atol=1e-13)
        assert np.allclose(voigt_tensor(E), 5 * b, atol=1e-13)


class TestDecomposition:
    def test_isotropic_exact(self):
        dec = decompose(iso_voigt(2.0, 3.0))
        assert (dec.lam, dec.mu) == (2.0, 3.0)
        assert not dec.a.any() and not dec.b.any() and dec.H.norm() == 0

    @given(seeds)
    def test_quintuple_roundtrip(self, seed):
        rng = np.random.default_rng(seed)
        a, b, H = random_deviator(rng), random_deviator(rng), random_harmonic(4, rng)
        dec = decompose(reconstruct(2.0, 3.0, a, b, H))
        assert dec.lam == pytest.approx(2.0, abs=1e-12) and dec.mu == pytest.approx(3.0, abs=1e-12)
        assert np.allclose(dec.a, a, atol=1e-12) and np.allclose(dec.b, b, atol=1e-12)
        assert (dec.H - H).norm() < 1e-12

    def test_cubic_embedded(self):
        H = from_poly(CUBIC_POLY)
        assert (decompose(reconstruct(1.0, 1.0, H=H)).H - H).norm() < 1e-12 * H.norm()

    @given(seeds)
    def test_reconstruct_decompose(self, seed):
        E = ElasticityTensor.from_voigt(random_voigt(np.random.default_rng(seed)))
        dec = decompose(E)
        assert trace(dec.H).norm() < 1e-12 * E.norm()
        assert abs(np.trace(dec.a)) < 1e-12 and abs(np.trace(dec.b)) < 1e-12
        assert np.linalg.norm(reconstruct(dec).full() - E.full()) <= 1e-12 * E.norm()

    def test_dv_accessors(self, rng):
        E = ElasticityTensor.from_voigt(random_voigt(rng))
        dec = decompose(E)
        d, v = dilatation(E), voigt_tensor(E)
        assert np.allclose(dec.d_dev, d - np.trace(d) / 3 * Q, atol=1e-12)
        assert np.allclose(dec.v_dev, v - np.trace(v) / 3 * Q, atol=1e-12)

    def test_linearity(self, rng):
        for _ in range(5):
            p1 = (1.2, -0.4, random_deviator(rng), random_deviator(rng), random_harmonic(4, rng))
            p2 = (0.3, 2.0, random_deviator(rng), random_deviator(rng), random_harmonic(4, rng))
            total = reconstruct(*(x + y for x, y in zip(p1, p2)))
            assert np.allclose(total.full(), (reconstruct(*p1) + reconstruct(*p2)).full(), atol=1e-13)

    def test_reconstruct_errors(self, rng):
        with pytest.raises(ValueError):
            reconstruct(1.0, 1.0, a=Q)
        with pytest.raises(ValueError):
            reconstruct(1.0, 1.0, b=rng.normal(size=(3, 3)))
        from elasym.tensors import random_sym

        with pytest.raises(ValueError):
            reconstruct(1.0, 1.0, H=random_sym(4, rng))


class TestClassification:
    def test_isotropic_and_cubic(self):
        assert classify_elasticity(reconstruct(1.0, 1.0)) == S.ISOTROPIC
        assert classify_elasticity(reconstruct(1.0, 1.0, H=from_poly(CUBIC_POLY))) == S.CUBIC

    def test_orthotropic_conjugated(self, rng):
        H = harm4_from_params(1, 2, 4, 0, 0, 0, 0, 0, 0)
        E = reconstruct(1.0, 1.0, np.diag([1.0, -0.3, -0.7]), np.diag([0.2, 0.5, -0.7]), H)
        for _ in range(100):
            assert classify_elasticity(E.rotate(random_rotation(rng))) == S.ORTHOTROPIC

    @pytest.mark.parametrize("cls", ELASTICITY_CLASSES, ids=str)
    def test_fixtures_and_pair_choice(self, cls):
        for seed in range(10):
            E = generate_elasticity(cls, seed=seed, rotate=True)
            assert classify_elasticity(E) == cls
            assert classify_elasticity(E, use_dv=True) == cls

    @pytest.mark.parametrize("cls", ELASTICITY_CLASSES, ids=str)
    def test_scale_invariance(self, cls):
        E = generate_elasticity(cls, seed=1, rotate=True)
        for s in (1e-6, 1e6):
            assert classify_elasticity(E * s) == cls

    @pytest.mark.parametrize("cls", ELASTICITY_CLASSES, ids=str)
    def test_monotone_when_dropping_deviators(self, cls):
        E = generate_elasticity(cls, seed=4, rotate=True)
        dec = decompose(E)
        coarse = classify_elasticity(reconstruct(dec.lam, dec.mu, H=dec.H))
        assert is_at_least(coarse, cls)

    def test_generic_is_triclinic(self, rng):
        for _ in range(10):
            assert classify_elasticity(ElasticityTensor.from_voigt(random_voigt(rng))) == S.TRICLINIC

    def test_ledger(self):
        rep = explain_elasticity(generate_elasticity(S.TRIGONAL, seed=2, rotate=True))
        assert rep.cls == S.TRIGONAL
        assert any(c.outcome == "transversely-isotropic" for c in rep.checks)

    def test_bad_tol(self):
        with pytest.raises(ValueError):
            classify_elasticity(reconstruct(1.0, 1.0), tol=0)

    def test_generator_determinism(self):
        a = generate_elasticity(S.MONOCLINIC, seed=3, rotate=True)
        assert np.array_equal(a.to_voigt(), generate_elasticity(S.MONOCLINIC, seed=3, rotate=True).to_voigt())
        assert np.array_equal(generate_elasticity(S.ISOTROPIC, seed=0).to_voigt(),
                              reconstruct(*np.random.default_rng(0).uniform(0.5, 2.0, 2)).to_voigt())
