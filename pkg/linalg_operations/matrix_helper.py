from typing import Sequence

import numpy as np

from common.exceptions import InvariantViolationError, NonSquareMatrixError

from .data_definitions import ComplexMatrix


def as_complex_matrix(m) -> ComplexMatrix:
    """Coerce any array-like into a 2-D complex128 matrix with at least one row and column"""
    matrix = np.array(m, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] < 1 or matrix.shape[1] < 1:
        raise InvariantViolationError("matrix-shape", "expected a non-empty 2-D array, got shape {shape}".format(shape=matrix.shape))
    return matrix


def identity(n: int) -> ComplexMatrix:
    return np.eye(n, dtype=np.complex128)


def dagger(m: ComplexMatrix) -> ComplexMatrix:
    """Conjugate transpose, result[i][j] = conjugate(m[j][i])"""
    return np.ascontiguousarray(as_complex_matrix(m).conj().T)


def kron(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    return np.kron(as_complex_matrix(a), as_complex_matrix(b))


def kron_all(factors: Sequence[ComplexMatrix]) -> ComplexMatrix:
    result = as_complex_matrix(factors[0])
    for factor in factors[1:]:
        result = kron(result, factor)
    return result


def require_square(m: ComplexMatrix) -> ComplexMatrix:
    matrix = as_complex_matrix(m)
    rows, cols = matrix.shape
    if rows != cols:
        raise NonSquareMatrixError(matrix.shape)
    return matrix


def hermiticity_defect(m: ComplexMatrix) -> float:
    """max |m - dagger(m)| over all entries"""
    matrix = require_square(m)
    return float(np.max(np.abs(matrix - matrix.conj().T)))


def symmetrize(m: ComplexMatrix) -> ComplexMatrix:
    matrix = require_square(m)
    return (matrix + matrix.conj().T) / 2


def permutation_matrix(perm: Sequence[int]) -> ComplexMatrix:
    """Unitary that moves qubit perm[k] of the input to position k of the output (qubit 0 is most significant)"""
    number_of_qubits = len(perm)
    if sorted(perm) != list(range(number_of_qubits)):
        raise InvariantViolationError("permutation", "{perm} is not a permutation of the qubit positions".format(perm=list(perm)))
    dimension = 2**number_of_qubits
    p = np.zeros((dimension, dimension), dtype=np.complex128)
    for index in range(dimension):
        bits = [(index >> (number_of_qubits - 1 - k)) & 1 for k in range(number_of_qubits)]
        permuted = [bits[perm[k]] for k in range(number_of_qubits)]
        target = 0
        for bit in permuted:
            target = (target << 1) | bit
        p[target, index] = 1.0
    return p
