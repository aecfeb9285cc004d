from fractions import Fraction
from math import comb, factorial

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import seeds
from elasym.binary import (
    BinaryForm,
    act,
    cartan_pullback,
    discriminant,
    is_real_form,
    kappa,
    random_su2,
    s_involution,
    su2_to_so3,
    transvectant,
    verify_translation,
)
from elasym.tensors import SymTensor, metric, random_harmonic, random_rotation, rotate, vector


def random_form(d, rng):
    return BinaryForm(rng.normal(size=d + 1) + 1j * rng.normal(size=d + 1))


def unit_h(n, rng):
    H = random_harmonic(n, rng)
    return H / H.norm()


def random_sl2(rng):
    g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    return g / np.sqrt(np.linalg.det(g))


def term_sum_oracle(f, g, r):
    """Transvectant by explicit differentiation of the coefficient arrays."""
    n, p = f.degree, g.degree

    def deriv(c, nu, nv):
        d = c.size - 1
        out = np.zeros((d + 1 - nu - nv) if d >= nu + nv else 1, dtype=complex)
        if d < nu + nv:
            return out
        for k in range(d + 1):
            i, j = d - k, k
            if i >= nu and j >= nv:
                out[k - nv] += c[k] * factorial(i) / factorial(i - nu) * factorial(j) / factorial(j - nv)
        return out

    total = np.zeros(n + p - 2 * r + 1, dtype=complex)
    for i in range(r + 1):
        total += (-1) ** i * comb(r, i) * np.convolve(deriv(f.coeffs, r - i, i), deriv(g.coeffs, i, r - i))
    return total * factorial(n - r) * factorial(p - r) / (factorial(n) * factorial(p))


class TestTransvectant:
    def test_linear_powers(self):
        f = BinaryForm.linear_power(1, 0, 2)  # u^2
        g = BinaryForm.linear_power(0, 1, 2)  # v^2
        assert np.allclose(transvectant(f, g, 1).coeffs, [0, 1, 0])

    @given(seeds, st.integers(1, 4), st.integers(1, 4), st.integers(0, 4))
    def test_bracket_formula(self, seed, n, p, r):
        rng = np.random.default_rng(seed)
        a, b = rng.normal(size=2), rng.normal(size=2)
        lhs = transvectant(BinaryForm.linear_power(*a, n), BinaryForm.linear_power(*b, p), r)
        if r > min(n, p):
            assert lhs.norm() == 0
            return
        ab = a[0] * b[1] - a[1] * b[0]
        rhs = ab**r * BinaryForm.linear_power(*a, n - r) * BinaryForm.linear_power(*b, p - r)
        assert (lhs - rhs).norm() < 1e-12 * max(1.0, rhs.norm())

    @given(seeds, st.integers(1, 8))
    def test_first_transvectant_of_self(self, seed, d):
        f = random_form(d, np.random.default_rng(seed))
        assert transvectant(f, f, 1).norm() < 1e-12 * f.norm() ** 2

    def test_degree8_term_oracle(self, rng):
        f, g = random_form(8, rng), random_form(8, rng)
        assert np.allclose(transvectant(f, g, 2).coeffs, term_sum_oracle(f, g, 2), rtol=1e-12, atol=1e-9)

    @given(seeds, st.integers(1, 5), st.integers(1, 5), st.integers(0, 5))
    def test_sl2_equivariance(self, seed, n, p, r):
        rng = np.random.default_rng(seed)
        f, g, gam = random_form(n, rng), random_form(p, rng), random_sl2(rng)
        lhs = transvectant(act(gam, f), act(gam, g), r)
        rhs = act(gam, transvectant(f, g, r))
        assert (lhs - rhs).norm() <= 1e-9 * max(rhs.norm(), act(gam, f).norm() * act(gam, g).norm())

    def test_negative_index(self, rng):
        with pytest.raises(ValueError):
            transvectant(random_form(2, rng), random_form(2, rng), -1)


class TestCartan:
    def test_metric_maps_to_zero(self):
        assert cartan_pullback(metric(), check=False).norm() < 1e-15
        with pytest.raises(ValueError):
            cartan_pullback(metric())

    def test_z_coordinate(self):
        assert np.allclose(cartan_pullback(vector([0, 0, 1])).coeffs, [0, 1j, 0])

    @given(seeds, st.integers(0, 5))
    def test_real_forms(self, seed, n):
        h = unit_h(n, np.random.default_rng(seed)) if n else SymTensor.scalar(1.3)
        f = cartan_pullback(h)
        assert is_real_form(f)
        k = np.arange(f.degree + 1)
        assert np.allclose(f.coeffs[::-1], (-1.0) ** k * np.conj(f.coeffs), atol=1e-12)
        assert (s_involution(s_involution(f)) - f).norm() < 1e-14

    def test_complex_form_is_not_real(self):
        assert not is_real_form(BinaryForm([1j, 0, 0]))
        assert not is_real_form(BinaryForm([1, 0]))

    @given(seeds, st.integers(1, 4))
    def test_intertwines_rotations(self, seed, n):
        rng = np.random.default_rng(seed)
        gam = random_su2(rng)
        R = su2_to_so3(gam)
        assert np.allclose(R.T @ R, np.eye(3), atol=1e-12) and np.linalg.det(R) == pytest.approx(1.0)
        h = unit_h(n, rng)
        lhs = cartan_pullback(rotate(R, h))
        rhs = act(gam, cartan_pullback(h))
        assert (lhs - rhs).norm() < 1e-12

    def test_injective(self, rng):
        for n in range(1, 5):
            assert cartan_pullback(unit_h(n, rng)).norm() > 1e-3


class TestKappa:
    def test_values(self):
        assert kappa(4, 4, 1) == Fraction(7, 12)
        assert kappa(1, 1, 0) == Fraction(1, 2)
        assert kappa(2, 3, 0) == Fraction(1, 2)

    def test_domain(self):
        with pytest.raises(ValueError):
            kappa(2, 2, 2)
        with pytest.raises(ValueError):
            kappa(3, 3, -1)


class TestTranslation:
    def test_zero(self):
        z = SymTensor.zeros(4)
        assert verify_translation(z, z, 1) == (0.0, 0.0)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("p", [1, 2, 3, 4])
    def test_grid(self, rng, n, p):
        H1, H2 = unit_h(n, rng), unit_h(p, rng)
        for r in range(min(n, p) + 1):
            even, odd = verify_translation(H1, H2, r)
            assert even < 1e-9
            if r <= min(n, p) - 1:
                assert odd < 1e-9
            else:
                assert odd is None

    def test_odd_identity_on_deviators(self, rng):
        _, odd = verify_translation(unit_h(2, rng), unit_h(2, rng), 0)
        assert odd < 1e-9


class TestDiscriminant:
    @given(seeds)
    def test_vanishes_on_squares(self, seed):
        rng = np.random.default_rng(seed)
        e1, e2 = rng.normal(size=2) + 1j * rng.normal(size=2)
        w = BinaryForm.linear_power(-e2, e1, 2)
        assert abs(discriminant(w)) < 1e-12 * max(1.0, w.norm() ** 2)

    def test_generic(self):
        assert discriminant(BinaryForm([1, 0, 1])) == -4
        with pytest.raises(ValueError):
            discriminant(BinaryForm([1, 0, 0, 1]))


def test_form_arithmetic(rng):
    f, g = random_form(3, rng), random_form(3, rng)
    u, v = 0.7 - 0.2j, 1.1 + 0.4j
    assert (f + g)(u, v) == pytest.approx(f(u, v) + g(u, v))
    assert (f * g)(u, v) == pytest.approx(f(u, v) * g(u, v))
    with pytest.raises(ValueError):
        f + random_form(2, rng)
    with pytest.raises(ValueError):
        BinaryForm([])
