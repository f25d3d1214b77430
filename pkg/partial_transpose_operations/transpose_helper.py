import logging
from typing import Optional

import numpy as np
from django.conf import settings

from common.data_definitions import STATE_DIMENSION
from common.exceptions import InvariantViolationError
from linalg_operations.data_definitions import ComplexMatrix, HermitianSpectrum
from linalg_operations.eigen_helper import hermitian_eigenvalues
from state_operations.data_definitions import DensityMatrix8

from .data_definitions import PartialTransposed8, QubitLabel

logger = logging.getLogger("django")


def _swap_permutations(mask: int):
    """Row and column source indices for the bit-swap rule new[(i & ~m) | (j & m), (j & ~m) | (i & m)] = old[i, j]"""
    indices = np.arange(STATE_DIMENSION)
    rows = indices[:, None]
    cols = indices[None, :]
    # new[r, c] = old[(r & ~m) | (c & m), (c & ~m) | (r & m)], the map is its own inverse
    source_rows = (rows & ~mask) | (cols & mask)
    source_cols = (cols & ~mask) | (rows & mask)
    return source_rows, source_cols


def transpose_bits(m: ComplexMatrix, mask: int) -> ComplexMatrix:
    matrix = np.asarray(m, dtype=np.complex128)
    if matrix.shape != (STATE_DIMENSION, STATE_DIMENSION):
        raise InvariantViolationError("dimension", "partial transposition acts on 8 x 8 matrices, got {shape}".format(shape=matrix.shape))
    source_rows, source_cols = _swap_permutations(mask)
    return matrix[source_rows, source_cols]


def partial_transpose(rho: DensityMatrix8, qubit) -> PartialTransposed8:
    q = QubitLabel.parse(qubit)
    return PartialTransposed8(matrix=transpose_bits(rho.matrix, q.mask), source_qubit=q)


def full_transpose(rho: DensityMatrix8) -> ComplexMatrix:
    return transpose_bits(rho.matrix, 0b111)


def pt_spectrum(rho: DensityMatrix8, qubit, backend: Optional[str] = None) -> HermitianSpectrum:
    return hermitian_eigenvalues(partial_transpose(rho, qubit).matrix, backend=backend)


def pt_min_eigenvalue(rho: DensityMatrix8, qubit, backend: Optional[str] = None) -> float:
    return pt_spectrum(rho, qubit, backend=backend).minimum


def is_ppt_cut(rho: DensityMatrix8, qubit, tol: Optional[float] = None) -> bool:
    """
    PPT within PPT_TOLERANCE. The classifier widens this to THRESHOLD_EPS / (1 - p) on the partial-transpose
    side, so with the default settings a minimum between -5e-9 and -1e-10 is NPT here yet passes the SPA-PT threshold.
    """
    tol = settings.PPT_TOLERANCE if tol is None else tol
    return pt_min_eigenvalue(rho, qubit) >= -tol


def negativity(rho: DensityMatrix8, qubit) -> float:
    """Sum of the magnitudes of the negative eigenvalues of the partial transpose"""
    eigenvalues = pt_spectrum(rho, qubit).as_array()
    return float(np.abs(eigenvalues[eigenvalues < 0]).sum())
