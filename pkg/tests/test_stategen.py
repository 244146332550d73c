import numpy as np
import pytest

from oddtangle.stategen import basis_product, ghz, random_pure, w


def test_ghz_amplitudes():
    s = ghz(3)
    assert s.amps[0] == pytest.approx(1.0 / np.sqrt(2.0))
    assert s.amps[7] == pytest.approx(1.0 / np.sqrt(2.0))
    assert np.count_nonzero(s.amps) == 2
    assert s.is_normalized(1e-14)


def test_w_amplitudes():
    s = w(4)
    support = np.flatnonzero(s.amps)
    assert sorted(support) == [1, 2, 4, 8]
    np.testing.assert_allclose(s.amps[support], 0.5)
    assert s.is_normalized(1e-14)


def test_generators_reject_small_n():
    with pytest.raises(ValueError):
        ghz(1)
    with pytest.raises(ValueError):
        w(1)
    with pytest.raises(ValueError):
        random_pure(0, seed=0)


def test_random_pure_deterministic():
    a = random_pure(5, seed=42)
    b = random_pure(5, seed=42)
    np.testing.assert_array_equal(a.amps, b.amps)
    c = random_pure(5, seed=43)
    assert np.max(np.abs(a.amps - c.amps)) > 1e-3


def test_random_pure_normalized():
    for seed in range(10):
        assert random_pure(7, seed=seed).is_normalized(1e-12)


def test_basis_product():
    s = basis_product(3, (1, 0, 1))
    assert s.amps[5] == 1.0
    assert np.count_nonzero(s.amps) == 1
    with pytest.raises(ValueError):
        basis_product(3, (1, 0))
    with pytest.raises(ValueError):
        basis_product(2, (1, 2))
