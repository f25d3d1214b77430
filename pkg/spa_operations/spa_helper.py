## Structural physical approximation of single-qubit partial transposition
from typing import Dict, Tuple

import numpy as np

from common.data_definitions import CANONICAL_SPA_PARAMETER, STATE_DIMENSION
from common.exceptions import ParamOutOfRangeError
from partial_transpose_operations.data_definitions import QubitLabel
from partial_transpose_operations.transpose_helper import partial_transpose, transpose_bits
from state_operations.data_definitions import DensityMatrix8

from .data_definitions import SpaOutput8, SpaParameter

# Upper-triangle entries of the canonical SPA-PT on qubit A, written against the entries t_kl of the input
# (1-based, row-major). Each off-diagonal output entry is t_kl / 5 or conj(t_kl) / 5, diagonal entries are
# 1/10 + t_kk / 5, and the lower triangle follows by Hermitian conjugation.
SPA_A_ELEMENT_TABLE: Dict[Tuple[int, int], Tuple[Tuple[int, int], bool]] = {
    (1, 2): ((1, 2), False),
    (1, 3): ((1, 3), False),
    (1, 4): ((1, 4), False),
    (1, 5): ((1, 5), True),
    (1, 6): ((2, 5), True),
    (1, 7): ((3, 5), True),
    (1, 8): ((4, 5), True),
    (2, 3): ((2, 3), False),
    (2, 4): ((2, 4), False),
    (2, 5): ((1, 6), True),
    (2, 6): ((2, 6), True),
    (2, 7): ((3, 6), True),
    (2, 8): ((4, 6), True),
    (3, 4): ((3, 4), False),
    (3, 5): ((1, 7), True),
    (3, 6): ((2, 7), True),
    (3, 7): ((3, 7), True),
    (3, 8): ((4, 7), True),
    (4, 5): ((1, 8), True),
    (4, 6): ((2, 8), True),
    (4, 7): ((3, 8), True),
    (4, 8): ((4, 8), True),
    (5, 6): ((5, 6), False),
    (5, 7): ((5, 7), False),
    (5, 8): ((5, 8), False),
    (6, 7): ((6, 7), False),
    (6, 8): ((6, 8), False),
    (7, 8): ((7, 8), False),
}


def spa_pt(rho: DensityMatrix8, qubit, p) -> SpaOutput8:
    """(p/8) I + (1 - p) rho^T_q"""
    q = QubitLabel.parse(qubit)
    weight = SpaParameter.coerce(p)
    transposed = partial_transpose(rho, q).matrix
    matrix = (weight.p / STATE_DIMENSION) * np.eye(STATE_DIMENSION, dtype=np.complex128) + (1 - weight.p) * transposed
    return SpaOutput8(matrix=matrix, source_qubit=q, p=weight)


def spa_pt_canonical(rho: DensityMatrix8, qubit) -> SpaOutput8:
    return spa_pt(rho, qubit, CANONICAL_SPA_PARAMETER)


def spa_map(x: np.ndarray, qubit, p) -> np.ndarray:
    """The SPA-PT channel on an arbitrary 8 x 8 operator: (p/8) tr(x) I + (1 - p) x^T_q"""
    q = QubitLabel.parse(qubit)
    weight = SpaParameter.coerce(p)
    return (weight.p / STATE_DIMENSION) * np.trace(x) * np.eye(STATE_DIMENSION, dtype=np.complex128) + (1 - weight.p) * transpose_bits(x, q.mask)


def spa_element_map(rho: DensityMatrix8) -> SpaOutput8:
    """Canonical SPA-PT on qubit A assembled entry by entry from SPA_A_ELEMENT_TABLE"""
    t = rho.matrix
    tilde = np.zeros((STATE_DIMENSION, STATE_DIMENSION), dtype=np.complex128)
    for k in range(STATE_DIMENSION):
        tilde[k, k] = 1 / 10 + t[k, k] / 5
    for (i, j), ((k, l), conjugate) in SPA_A_ELEMENT_TABLE.items():
        source = t[k - 1, l - 1]
        value = (source.conjugate() if conjugate else source) / 5
        tilde[i - 1, j - 1] = value
        tilde[j - 1, i - 1] = value.conjugate()
    return SpaOutput8(matrix=tilde, source_qubit=QubitLabel.A, p=SpaParameter(CANONICAL_SPA_PARAMETER))


def spa_threshold(p=CANONICAL_SPA_PARAMETER) -> float:
    return SpaParameter.coerce(p).threshold


def spa_bipartite_threshold(d: int, lam: float) -> float:
    """Entanglement threshold d^2 lam / (d^4 lam + 1) of the SPA-PT criterion for a d x d system"""
    if d < 2 or int(d) != d:
        raise ParamOutOfRangeError("d", d, "the local dimension is an integer >= 2")
    if not lam > 0:
        raise ParamOutOfRangeError("lambda", lam, "the most negative eigenvalue magnitude must be positive")
    return d**2 * lam / (d**4 * lam + 1)
