import numpy as np
import pytest

from oddtangle.convex_roof import (
    MixedState,
    convex_roof_tangle,
    decomposition_from_isometry,
)
from oddtangle.fast_tangle import n_tangle
from oddtangle.stategen import basis_product, ghz, random_pure, w


def _pure_density(state):
    return MixedState.from_ensemble(state.n, [(1.0, state)])


def test_mixed_state_validation():
    with pytest.raises(ValueError):
        MixedState(1, np.array([[1.0, 0.5], [0.0, 0.0]]))  # not Hermitian
    with pytest.raises(ValueError):
        MixedState(1, np.diag([0.7, 0.7]))  # trace != 1
    with pytest.raises(ValueError):
        MixedState(1, np.diag([1.5, -0.5]))  # negative eigenvalue
    with pytest.raises(ValueError):
        MixedState(2, np.eye(2) / 2.0)  # wrong dimension


def test_from_ensemble_and_rank():
    rho = MixedState.from_ensemble(3, [(0.5, ghz(3)), (0.5, w(3))])
    assert rho.rank() == 2
    vals, vecs = rho.eigensystem()
    assert vals.shape == (2,)
    assert abs(np.sum(vals) - 1.0) < 1e-12


def test_decomposition_from_isometry_reconstructs():
    rho = MixedState.from_ensemble(3, [(0.3, ghz(3)), (0.7, w(3))])
    r = rho.rank()
    m = r + 2
    rng = np.random.default_rng(1)
    g = rng.standard_normal((m, r)) + 1j * rng.standard_normal((m, r))
    V, _ = np.linalg.qr(g)
    dec = decomposition_from_isometry(rho, V)
    weights = [p for p, _ in dec.members]
    assert abs(sum(weights) - 1.0) < 1e-10
    np.testing.assert_allclose(dec.reconstruction(3), rho.matrix, atol=1e-10)


def test_isometry_shape_rejected():
    rho = MixedState.from_ensemble(3, [(0.5, ghz(3)), (0.5, w(3))])
    with pytest.raises(ValueError):
        decomposition_from_isometry(rho, np.eye(1, 2))
    with pytest.raises(ValueError):
        decomposition_from_isometry(rho, np.ones((3, 2)))  # not an isometry


def test_roof_rejects_even_n():
    with pytest.raises(ValueError):
        convex_roof_tangle(MixedState(2, np.eye(4) / 4.0))


def test_roof_pure_ghz_is_one():
    result = convex_roof_tangle(_pure_density(ghz(3)), restarts=4, seed=0)
    assert result.value == pytest.approx(1.0, abs=1e-6)
    # every member of any decomposition of a pure state is the state itself
    # (up to phase), so each must carry the full tangle
    for p, psi in result.best.members:
        assert n_tangle(psi).average == pytest.approx(1.0, abs=1e-6)
    assert sum(p for p, _ in result.best.members) == pytest.approx(1.0, abs=1e-10)


def test_roof_pure_w_is_zero():
    result = convex_roof_tangle(_pure_density(w(3)), restarts=2, seed=0)
    assert result.value <= 1e-9


def test_roof_basis_mixture_is_zero():
    # mixture of two product kets: every member of the eigendecomposition
    # is already tangle-free, so the identity start nails it immediately
    rho = MixedState.from_ensemble(
        3, [(0.5, basis_product(3, (0, 0, 0))), (0.5, basis_product(3, (1, 1, 1)))]
    )
    result = convex_roof_tangle(rho, restarts=1, seed=0)
    assert result.value <= 1e-10


def test_roof_ghz_w_half_mixture_vanishes():
    # the equal GHZ/W mixture admits a tangle-free decomposition
    rho = MixedState.from_ensemble(3, [(0.5, ghz(3)), (0.5, w(3))])
    result = convex_roof_tangle(rho, seed=0)
    assert result.value <= 1e-8


def test_roof_is_upper_bounded_by_any_ensemble():
    # the minimizer can never report more than the preparing ensemble's average
    members = [(0.4, random_pure(3, seed=1)), (0.6, random_pure(3, seed=2))]
    rho = MixedState.from_ensemble(3, members)
    prepared = sum(p * n_tangle(s).average for p, s in members)
    result = convex_roof_tangle(rho, restarts=8, seed=0)
    assert result.value <= prepared + 1e-9


def test_roof_never_beats_eigendecomposition_start():
    from oddtangle.qstate import PureState

    rho = MixedState.from_ensemble(3, [(0.7, ghz(3)), (0.3, random_pure(3, seed=5))])
    vals, vecs = rho.eigensystem()
    eig_avg = sum(
        float(p) * n_tangle(PureState(3, vecs[:, j])).average
        for j, p in enumerate(vals)
    )
    result = convex_roof_tangle(rho, restarts=4, seed=0)
    assert result.value <= eig_avg + 1e-9


def test_roof_seed_reproducibility():
    rho = MixedState.from_ensemble(3, [(0.5, ghz(3)), (0.5, w(3))])
    a = convex_roof_tangle(rho, restarts=4, seed=3)
    b = convex_roof_tangle(rho, restarts=4, seed=3)
    assert a.value == b.value
    assert a.restarts_used == b.restarts_used


def test_roof_value_matches_best_decomposition():
    rho = MixedState.from_ensemble(3, [(0.6, ghz(3)), (0.4, w(3))])
    result = convex_roof_tangle(rho, restarts=4, seed=0)
    recomputed = sum(p * n_tangle(s).average for p, s in result.best.members)
    assert result.value == pytest.approx(recomputed, abs=1e-12)
    np.testing.assert_allclose(
        result.best.reconstruction(3), rho.matrix, atol=1e-8
    )


def test_roof_custom_measure():
    rho = _pure_density(ghz(3))
    result = convex_roof_tangle(
        rho, restarts=1, seed=0, measure=lambda s: 2.0 * n_tangle(s).average
    )
    assert result.value == pytest.approx(2.0, abs=1e-6)


def test_m_max_below_rank_rejected():
    rho = MixedState.from_ensemble(3, [(0.5, ghz(3)), (0.5, w(3))])
    with pytest.raises(ValueError):
        convex_roof_tangle(rho, m_max=1)
