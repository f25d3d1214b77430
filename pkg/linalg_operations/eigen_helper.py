## Hermitian eigenvalues for the small dense matrices of the three-qubit pipeline (8 x 8 states, 64 x 64 Choi matrices)
import logging
import math
from typing import Optional

import numpy as np
from django.conf import settings

from common.exceptions import EigenSolverConvergenceError, InvariantViolationError, NotHermitianError

from .data_definitions import ComplexMatrix, HermitianSpectrum
from .matrix_helper import hermiticity_defect, require_square

logger = logging.getLogger("django")


class JacobiEigenSolver:
    """
    Cyclic Jacobi rotations for complex Hermitian matrices. Each (p, q) rotation first removes the phase of the
    off-diagonal element and then applies the real symmetric rotation that annihilates it. Sweeps stop when the
    off-diagonal Frobenius norm falls below tol (relative to max(1, ||m||_F)).
    Adapted from the classical real-symmetric scheme (Numerical Recipes / Kiusalaas) to the Hermitian case.
    """

    def __init__(self, tol: Optional[float] = None, max_sweeps: Optional[int] = None):
        self.tol = settings.JACOBI_TOLERANCE if tol is None else tol
        self.max_sweeps = settings.JACOBI_MAX_SWEEPS if max_sweeps is None else max_sweeps

    @staticmethod
    def off_diagonal_norm(a: ComplexMatrix) -> float:
        return float(np.linalg.norm(a - np.diag(np.diag(a))))

    def rotate(self, a: ComplexMatrix, p: int, q: int) -> None:
        apq = a[p, q]
        r = abs(apq)
        phase = apq / r
        app = a[p, p].real
        aqq = a[q, q].real
        theta = (aqq - app) / (2.0 * r)
        if theta == 0.0:
            t = 1.0
        else:
            t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
        c = 1.0 / math.sqrt(t * t + 1.0)
        s = t * c
        # U = diag(1, conj(phase)) . [[c, s], [-s, c]] on the (p, q) plane
        u = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]], dtype=np.complex128)
        columns = a[:, [p, q]] @ u
        a[:, p] = columns[:, 0]
        a[:, q] = columns[:, 1]
        rows = u.conj().T @ a[[p, q], :]
        a[p, :] = rows[0, :]
        a[q, :] = rows[1, :]
        a[p, q] = 0.0
        a[q, p] = 0.0
        a[p, p] = app - t * r
        a[q, q] = aqq + t * r

    def eigenvalues(self, m: ComplexMatrix) -> np.ndarray:
        a = np.array(m, dtype=np.complex128, copy=True)
        n = a.shape[0]
        scale = max(1.0, float(np.linalg.norm(a)))
        target = self.tol * scale
        # elements this small cannot keep the sweep from converging, so they are not rotated
        skip = target / max(n, 1)
        off_norm = self.off_diagonal_norm(a)
        sweeps = 0
        while off_norm >= target:
            if sweeps >= self.max_sweeps:
                logger.error("Jacobi eigensolver stopped after %s sweeps, off-diagonal norm %.3e" % (sweeps, off_norm))
                raise EigenSolverConvergenceError(sweeps=sweeps, off_norm=off_norm)
            for p in range(n - 1):
                for q in range(p + 1, n):
                    if abs(a[p, q]) > skip:
                        self.rotate(a, p, q)
            sweeps += 1
            off_norm = self.off_diagonal_norm(a)
        logger.debug("Jacobi eigensolver converged in %s sweeps for a %s x %s matrix" % (sweeps, n, n))
        return np.sort(np.diag(a).real)


def _solve(matrix: ComplexMatrix, backend: str) -> np.ndarray:
    if backend == "jacobi":
        return JacobiEigenSolver().eigenvalues(matrix)
    if backend == "lapack":
        return np.sort(np.linalg.eigvalsh(matrix))
    raise InvariantViolationError("eigensolver-backend", "unknown backend '{backend}'".format(backend=backend))


def hermitian_eigenvalues(m: ComplexMatrix, tol: Optional[float] = None, backend: Optional[str] = None) -> HermitianSpectrum:
    """All eigenvalues of a Hermitian matrix in ascending order"""
    matrix = require_square(m)
    tol = settings.HERMITICITY_TOLERANCE if tol is None else tol
    defect = hermiticity_defect(matrix)
    if defect > tol:
        raise NotHermitianError(defect=defect, tol=tol)
    # the solvers only look at one triangle, so feed them the exactly Hermitian part
    hermitian_part = (matrix + matrix.conj().T) / 2
    eigenvalues = _solve(hermitian_part, backend or settings.EIGENSOLVER_BACKEND)
    return HermitianSpectrum(eigenvalues=tuple(float(x) for x in eigenvalues))


def min_eigenvalue(m: ComplexMatrix, tol: Optional[float] = None, backend: Optional[str] = None) -> float:
    return hermitian_eigenvalues(m, tol=tol, backend=backend).minimum


def is_psd(m: ComplexMatrix, tol: Optional[float] = None, backend: Optional[str] = None) -> bool:
    tol = settings.HERMITICITY_TOLERANCE if tol is None else tol
    return min_eigenvalue(m, tol=tol, backend=backend) >= -tol
