## Pure-state three-tangle and the two-qubit concurrences behind the residual-tangle identity
import logging
from typing import Optional, Sequence

import numpy as np
from django.conf import settings

from classification_operations.classification_helper import classify
from classification_operations.data_definitions import VerdictKind
from common.exceptions import InvariantViolationError
from partial_transpose_operations.data_definitions import QubitLabel
from state_operations.data_definitions import DensityMatrix8, PureState3
from state_operations.state_helper import density_from_pure, pure_state

from .data_definitions import PureSubclass, TangleValue

logger = logging.getLogger("django")

SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)

# eigenvalues below this fraction of the matrix scale are rounding noise on a rank-deficient matrix
RELATIVE_ZERO = 1e-12


def hyperdeterminant_terms(psi: PureState3):
    a = pure_state(psi.amplitudes).amplitudes
    a000, a001, a010, a011, a100, a101, a110, a111 = a
    d1 = a000**2 * a111**2 + a001**2 * a110**2 + a010**2 * a101**2 + a100**2 * a011**2
    d2 = (
        a000 * a111 * a011 * a100
        + a000 * a111 * a101 * a010
        + a000 * a111 * a110 * a001
        + a011 * a100 * a101 * a010
        + a011 * a100 * a110 * a001
        + a101 * a010 * a110 * a001
    )
    d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100
    return d1, d2, d3


def three_tangle_pure(psi: PureState3) -> TangleValue:
    d1, d2, d3 = hyperdeterminant_terms(psi)
    return TangleValue(tau=float(4 * abs(d1 - 2 * d2 + 4 * d3)))


def pure_subclass(psi: PureState3, eps: Optional[float] = None, tau_tol: Optional[float] = None) -> PureSubclass:
    tau_tol = settings.TANGLE_TOLERANCE if tau_tol is None else tau_tol
    verdict = classify(density_from_pure(psi), eps=eps)
    if verdict.kind != VerdictKind.GENUINE_ENTANGLED:
        return PureSubclass.NOT_GENUINE
    tau = three_tangle_pure(psi).tau
    return PureSubclass.GHZ_CLASS if tau > tau_tol else PureSubclass.W_CLASS


def reduced_density(psi: PureState3, keep: Sequence) -> np.ndarray:
    """Partial trace of |psi><psi| onto the kept qubits, in A, B, C order"""
    kept = sorted({"ABC".index(QubitLabel.parse(q).value) for q in keep})
    traced = [axis for axis in range(3) if axis not in kept]
    tensor = pure_state(psi.amplitudes).amplitudes.reshape(2, 2, 2)
    m = np.transpose(tensor, kept + traced).reshape(2 ** len(kept), 2 ** len(traced))
    return m @ m.conj().T


def _clip_relative(eigenvalues: np.ndarray, scale: float) -> np.ndarray:
    cutoff = RELATIVE_ZERO * scale
    return np.where(eigenvalues < cutoff, 0.0, eigenvalues)


def two_qubit_concurrence(rho: np.ndarray) -> float:
    """Wootters concurrence of a 4 x 4 two-qubit density matrix"""
    rho = np.asarray(rho, dtype=np.complex128)
    rho = (rho + rho.conj().T) / 2
    flip = np.kron(SIGMA_Y, SIGMA_Y)
    rho_tilde = flip @ rho.conj() @ flip
    w, v = np.linalg.eigh(rho)
    scale = max(float(np.max(np.abs(w))), 1e-300)
    sqrt_rho = (v * np.sqrt(_clip_relative(w, scale))) @ v.conj().T
    r = sqrt_rho @ rho_tilde @ sqrt_rho
    r = (r + r.conj().T) / 2
    singular = np.sqrt(_clip_relative(np.linalg.eigvalsh(r), scale**2))[::-1]
    return float(max(0.0, singular[0] - singular[1] - singular[2] - singular[3]))


def residual_tangle(psi: PureState3) -> float:
    """4 det(rho_A) - C_AB^2 - C_AC^2, which equals the three-tangle for pure states"""
    rho_a = reduced_density(psi, ["A"])
    one_tangle = 4 * float(np.linalg.det(rho_a).real)
    c_ab = two_qubit_concurrence(reduced_density(psi, ["A", "B"]))
    c_ac = two_qubit_concurrence(reduced_density(psi, ["A", "C"]))
    return one_tangle - c_ab**2 - c_ac**2


def pure_state_of(rho: DensityMatrix8, tol: Optional[float] = None) -> PureState3:
    """Recover |psi> from a rank-one density matrix, up to a global phase"""
    tol = settings.STATE_TOLERANCE if tol is None else tol
    purity = float(np.trace(rho.matrix @ rho.matrix).real)
    if purity < 1 - tol:
        raise InvariantViolationError("pure-state", "the three-tangle needs a pure state, purity is {p:.12g}".format(p=purity))
    w, v = np.linalg.eigh(rho.matrix)
    vector = v[:, int(np.argmax(w))]
    return pure_state(vector / np.linalg.norm(vector))
