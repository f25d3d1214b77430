## Complete positivity and positivity thresholds of the SPA-PT channel
import logging
import math
from typing import Callable, Optional

import numpy as np
from django.conf import settings

from common.data_definitions import STATE_DIMENSION
from linalg_operations.data_definitions import ComplexMatrix
from linalg_operations.eigen_helper import min_eigenvalue
from partial_transpose_operations.data_definitions import QubitLabel
from state_operations.catalog import ghz_vector
from state_operations.data_definitions import PureState3
from state_operations.state_helper import density_from_pure

from .data_definitions import SpaParameter
from .spa_helper import spa_map, spa_pt

logger = logging.getLogger("django")


def choi_matrix(qubit, p) -> ComplexMatrix:
    """
    Unit-trace Choi matrix (I_8 x Lambda_p)(|Phi><Phi|) with |Phi> = 8^(-1/2) sum_b |b>|b>.
    The reference system is the first (most significant) factor of the 64-dimensional space.
    """
    q = QubitLabel.parse(qubit)
    weight = SpaParameter.coerce(p)
    dimension = STATE_DIMENSION
    choi = np.zeros((dimension * dimension, dimension * dimension), dtype=np.complex128)
    for b in range(dimension):
        for b_prime in range(dimension):
            unit = np.zeros((dimension, dimension), dtype=np.complex128)
            unit[b, b_prime] = 1.0
            choi += np.kron(unit, spa_map(unit, q, weight))
    return choi / dimension


def choi_min_eigenvalue(qubit, p, closed_form: bool = False) -> float:
    """
    Minimum eigenvalue of the Choi matrix. The closed form p/64 - (1 - p)/2 follows from the
    spectrum {+1/2, +1/2, +1/2, -1/2, 0, ...} of the partially transposed maximally entangled state.
    """
    weight = SpaParameter.coerce(p)
    if closed_form:
        return weight.p / STATE_DIMENSION**2 - (1 - weight.p) / 2
    return min_eigenvalue(choi_matrix(qubit, weight), backend=settings.CHOI_EIGENSOLVER_BACKEND)


def is_completely_positive(qubit, p, tol: Optional[float] = None) -> bool:
    tol = settings.PPT_TOLERANCE if tol is None else tol
    return choi_min_eigenvalue(qubit, p) >= -tol


def _bisect(passes: Callable[[float], bool], tol: float, label: str) -> float:
    """Smallest p in [0, 1] for which passes(p) holds, assuming monotonicity in p"""
    low, high = 0.0, 1.0
    if passes(low):
        return low
    for iteration in range(settings.CP_BISECTION_ITERATIONS):
        if high - low <= tol:
            break
        middle = (low + high) / 2
        if passes(middle):
            high = middle
        else:
            low = middle
        logger.debug("%s bisection step %s: bracket [%.12f, %.12f]" % (label, iteration, low, high))
    return high


def min_cp_parameter(qubit, tol: float = 1e-6, psd_tol: Optional[float] = None) -> float:
    """Smallest SPA weight for which the channel is completely positive (positive semidefinite Choi matrix)"""
    q = QubitLabel.parse(qubit)
    psd_tol = settings.PPT_TOLERANCE if psd_tol is None else psd_tol
    result = _bisect(lambda p: is_completely_positive(q, p, tol=psd_tol), tol, "Choi matrix of qubit %s" % q.value)
    logger.info("Minimum completely positive SPA weight for qubit %s: %.9f" % (q.value, result))
    return result


def worst_case_input() -> PureState3:
    """Maximal GHZ state: every single-qubit cut has Schmidt product 1/2, the largest a qubit cut allows"""
    return PureState3(amplitudes=ghz_vector(1 / math.sqrt(2), 1 / math.sqrt(2)))


def min_positive_parameter(qubit, tol: float = 1e-6, psd_tol: Optional[float] = None) -> float:
    """Smallest SPA weight for which SPA-PT sends every three-qubit state to a positive semidefinite matrix"""
    q = QubitLabel.parse(qubit)
    psd_tol = settings.PPT_TOLERANCE if psd_tol is None else psd_tol
    rho = density_from_pure(worst_case_input())
    result = _bisect(lambda p: min_eigenvalue(spa_pt(rho, q, p).matrix) >= -psd_tol, tol, "SPA-PT output of qubit %s" % q.value)
    logger.info("Minimum positive SPA weight for qubit %s: %.9f" % (q.value, result))
    return result
