"""SLOCC machinery: random local operator chains, the scaling-law check,
local-unitary invariance, and the vanishing-pattern class discriminator."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fast_tangle import n_tangle
from .qstate import LocalOperatorChain, PureState, apply_local_operators
from .residual_forms import residual_tau

DEFAULT_CONDITION_CAP = 20.0


@dataclass(frozen=True)
class SloccVerdict:
    lhs: float
    rhs: float
    rel_error: float
    passed: bool


def _verdict(lhs: float, rhs: float, tol: float) -> SloccVerdict:
    rel = abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)
    return SloccVerdict(lhs=lhs, rhs=rhs, rel_error=rel, passed=rel <= tol)


def random_local_invertible(
    n: int,
    seed: int,
    condition_cap: float = DEFAULT_CONDITION_CAP,
    min_abs_det: float = 0.1,
) -> LocalOperatorChain:
    """n seeded Gaussian 2x2 matrices, resampled until each has |det| >=
    min_abs_det and condition number <= condition_cap."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if condition_cap <= 1.0:
        raise ValueError("condition_cap must exceed 1")
    rng = np.random.default_rng(seed)
    ops = []
    while len(ops) < n:
        m = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        if abs(np.linalg.det(m)) >= min_abs_det and np.linalg.cond(m) <= condition_cap:
            ops.append(m)
    return LocalOperatorChain(ops)


def random_local_unitary(n: int, seed: int) -> LocalOperatorChain:
    """n Haar-ish random 2x2 unitaries (QR of a seeded Gaussian matrix)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    rng = np.random.default_rng(seed)
    ops = []
    for _ in range(n):
        m = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        q, r = np.linalg.qr(m)
        q = q * (np.diag(r) / np.abs(np.diag(r)))
        ops.append(q)
    return LocalOperatorChain(ops)


def verify_slocc_equation(
    state: PureState,
    chain: LocalOperatorChain,
    tol: float = 1e-9,
    normalize: bool = False,
) -> SloccVerdict:
    """Check tau(psi') = tau(psi) * prod_k |det op_k|^2 for psi' = chain(psi).

    The image is deliberately NOT renormalized: the scaling law is a
    statement about the degree-4 homogeneous polynomial.  ``normalize=True``
    instead compares the tangles of both states after normalization (the
    determinant factor then cancels against the norm change).
    """
    if state.n % 2 == 0 or state.n < 3:
        raise ValueError(f"need odd n >= 3, got n={state.n}")
    chain.assert_invertible()
    image = apply_local_operators(state, chain)
    if normalize:
        lhs = residual_tau(image.normalized())
        rhs = residual_tau(state.normalized()) * (
            chain.abs_det_sq_product()
            * (state.squared_norm() / image.squared_norm()) ** 2
        )
    else:
        lhs = residual_tau(image)
        rhs = residual_tau(state) * chain.abs_det_sq_product()
    return _verdict(lhs, rhs, tol)


def verify_lu_invariance(
    state: PureState,
    chain: LocalOperatorChain,
    tol: float = 1e-9,
    unitary_tol: float = 1e-10,
) -> SloccVerdict:
    """Check that local unitaries preserve every per-qubit tangle and the
    average.  Reported lhs/rhs are the averages; rel_error is the worst
    deviation across all per-qubit entries and the average."""
    if not chain.is_unitary(unitary_tol):
        raise ValueError("chain is not unitary within tolerance")
    before = n_tangle(state)
    after = n_tangle(apply_local_operators(state, chain))
    worst = abs(after.average - before.average) / max(
        abs(before.average), abs(after.average), 1.0
    )
    for x, y in zip(before.per_qubit, after.per_qubit):
        worst = max(worst, abs(x - y) / max(abs(x), abs(y), 1.0))
    return SloccVerdict(
        lhs=after.average, rhs=before.average, rel_error=worst, passed=worst <= tol
    )


def slocc_distinguish(tau_a: float, tau_b: float, tol: float = 1e-9) -> str:
    """'different_classes' iff exactly one tangle vanishes; equal vanishing
    or two nonzero values prove nothing and give 'inconclusive'."""
    if tau_a < 0 or tau_b < 0:
        raise ValueError("tangles must be nonnegative")
    a_zero = tau_a <= tol
    b_zero = tau_b <= tol
    return "different_classes" if a_zero != b_zero else "inconclusive"
