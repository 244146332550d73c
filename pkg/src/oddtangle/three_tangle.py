"""Three-qubit specializations: the coefficient 3-tangle, the spin-flip
concurrence, and the single-qubit-cut squared concurrence."""

from __future__ import annotations

import numpy as np

from .qstate import PureState, reduced_density_single

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])


def ckw_tangle(state: PureState) -> float:
    """3-tangle from the amplitude coefficients: 4|d1 - 2 d2 + 4 d3|."""
    if state.n != 3:
        raise ValueError(f"coefficient 3-tangle needs n=3, got n={state.n}")
    a = state.amps
    d1 = (
        a[0] ** 2 * a[7] ** 2
        + a[1] ** 2 * a[6] ** 2
        + a[2] ** 2 * a[5] ** 2
        + a[3] ** 2 * a[4] ** 2
    )
    d2 = (
        a[0] * a[7] * a[3] * a[4]
        + a[0] * a[7] * a[2] * a[5]
        + a[0] * a[7] * a[1] * a[6]
        + a[3] * a[4] * a[2] * a[5]
        + a[3] * a[4] * a[1] * a[6]
        + a[2] * a[5] * a[1] * a[6]
    )
    d3 = a[0] * a[6] * a[5] * a[3] + a[7] * a[1] * a[2] * a[4]
    return float(4.0 * abs(d1 - 2.0 * d2 + 4.0 * d3))


def spin_flip_concurrence(state: PureState, norm_tol: float = 1e-9) -> float:
    """|<psi|psi~>|^2 with psi~ = (sigma_y (x) sigma_y) psi*.

    Note: the usual two-qubit concurrence is |<psi|psi~>| WITHOUT the outer
    square; this function keeps the squared form deliberately (see README)
    and so returns the square of the standard concurrence.
    """
    if state.n != 2:
        raise ValueError(f"spin-flip concurrence needs n=2, got n={state.n}")
    if not state.is_normalized(norm_tol):
        raise ValueError("spin-flip concurrence expects a normalized state")
    flip = np.kron(_SIGMA_Y, _SIGMA_Y)
    psi_tilde = flip @ state.amps.conj()
    return float(abs(np.vdot(state.amps, psi_tilde)) ** 2)


def c_a_bc_squared(state: PureState, cut_qubit: int, norm_tol: float = 1e-9) -> float:
    """Squared concurrence of one qubit against the rest: 4 det(rho_cut)."""
    if state.n != 3:
        raise ValueError(f"single-cut concurrence here needs n=3, got n={state.n}")
    rho = reduced_density_single(state, cut_qubit, norm_tol)
    det = np.real(rho[0, 0] * rho[1, 1] - rho[0, 1] * rho[1, 0])
    if det < 0.0:
        if det < -1e-12:
            raise ValueError(f"reduced density has negative determinant {det:.3e}")
        det = 0.0
    return float(min(4.0 * det, 1.0 + 1e-12))
