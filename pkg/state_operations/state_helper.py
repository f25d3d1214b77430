import logging
from dataclasses import asdict
from typing import List, Optional, Sequence, Tuple

import numpy as np
from django.conf import settings

from common.data_definitions import STATE_DIMENSION
from common.exceptions import BadWeightsError, InvariantViolationError, NotHermitianError, NotNormalizedError
from linalg_operations.eigen_helper import min_eigenvalue
from linalg_operations.matrix_helper import hermiticity_defect, permutation_matrix, require_square, symmetrize

from .data_definitions import (
    CatalogStateSpec,
    DensityMatrix8,
    MatrixStateSpec,
    MixturePart,
    MixtureStateSpec,
    PureState3,
    PureStateSpec,
    StateSpec,
)

logger = logging.getLogger("django")


def basis_index(label: str) -> int:
    """'abc' -> 4a + 2b + c"""
    if len(label) != 3 or any(bit not in "01" for bit in label):
        raise InvariantViolationError("basis-label", "'{label}' is not a three-qubit basis label".format(label=label))
    return int(label, 2)


def pure_state(amplitudes: Sequence[complex], tol: Optional[float] = None) -> PureState3:
    tol = settings.STATE_TOLERANCE if tol is None else tol
    vector = np.array(amplitudes, dtype=np.complex128).reshape(-1)
    if vector.shape != (STATE_DIMENSION,):
        raise InvariantViolationError("amplitude-count", "expected 8 amplitudes, got {n}".format(n=vector.size))
    norm_squared = float(np.sum(np.abs(vector) ** 2))
    if abs(norm_squared - 1.0) > tol:
        raise NotNormalizedError(norm_squared)
    return PureState3(amplitudes=vector)


def pure_state_from_terms(terms: Sequence[Tuple[str, complex]], tol: Optional[float] = None) -> PureState3:
    vector = np.zeros(STATE_DIMENSION, dtype=np.complex128)
    for label, amplitude in terms:
        vector[basis_index(label)] += amplitude
    return pure_state(vector, tol=tol)


def density_from_pure(psi: PureState3) -> DensityMatrix8:
    vector = pure_state(psi.amplitudes).amplitudes
    # outer products are Hermitian only up to rounding
    return DensityMatrix8(matrix=symmetrize(np.outer(vector, vector.conj())))


def validate_density(m, tol: Optional[float] = None) -> DensityMatrix8:
    """Symmetrize benign rounding, then enforce Hermiticity, unit trace and positivity"""
    tol = settings.STATE_TOLERANCE if tol is None else tol
    matrix = require_square(m)
    if matrix.shape != (STATE_DIMENSION, STATE_DIMENSION):
        raise InvariantViolationError("dimension", "a three-qubit density matrix is 8 x 8, got {shape}".format(shape=matrix.shape))
    defect = hermiticity_defect(matrix)
    if defect > settings.SYMMETRIZE_TOLERANCE:
        raise NotHermitianError(defect=defect, tol=settings.SYMMETRIZE_TOLERANCE)
    matrix = symmetrize(matrix)
    trace = np.trace(matrix).real
    if abs(trace - 1.0) > tol:
        raise InvariantViolationError("trace", "trace is {trace:.12g}, expected 1".format(trace=trace))
    lowest = min_eigenvalue(matrix, tol=tol)
    if lowest < -tol:
        raise InvariantViolationError("psd", "minimum eigenvalue is {lowest:.3e}".format(lowest=lowest))
    return DensityMatrix8(matrix=matrix)


def convex_mix(parts: Sequence[Tuple[float, DensityMatrix8]], tol: Optional[float] = None) -> DensityMatrix8:
    tol = settings.STATE_TOLERANCE if tol is None else tol
    if not parts:
        raise BadWeightsError("A mixture needs at least one part")
    weights = [float(w) for w, _ in parts]
    if any(w < 0 for w in weights):
        raise BadWeightsError("Mixture weights must be non-negative, got {weights}".format(weights=weights))
    total = sum(weights)
    if abs(total - 1.0) > tol:
        raise BadWeightsError("Mixture weights must sum to 1, got {total:.12g}".format(total=total))
    # sum in a canonical order so that any permutation of the parts gives a bit-identical matrix
    ordered = sorted(((float(w), rho.matrix) for w, rho in parts), key=lambda item: (item[0], item[1].tobytes()))
    matrix = np.zeros((STATE_DIMENSION, STATE_DIMENSION), dtype=np.complex128)
    for weight, part in ordered:
        matrix = matrix + weight * part
    return DensityMatrix8(matrix=matrix)


def maximally_mixed() -> DensityMatrix8:
    return DensityMatrix8(matrix=np.eye(STATE_DIMENSION, dtype=np.complex128) / STATE_DIMENSION)


def single_qubit_state(theta: float, phi: float) -> np.ndarray:
    """cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>"""
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)], dtype=np.complex128)


def product_state(x: np.ndarray, y: np.ndarray, z: np.ndarray) -> PureState3:
    vector = np.kron(np.kron(x, y), z)
    return pure_state(vector / np.linalg.norm(vector))


def bell_state(kind: str = "phi+") -> np.ndarray:
    s = 1 / np.sqrt(2)
    bell_states = {
        "phi+": [s, 0, 0, s],
        "phi-": [s, 0, 0, -s],
        "psi+": [0, s, s, 0],
        "psi-": [0, s, -s, 0],
    }
    if kind not in bell_states:
        raise InvariantViolationError("bell-kind", "unknown Bell state '{kind}'".format(kind=kind))
    return np.array(bell_states[kind], dtype=np.complex128)


def place_bell_pair(single: np.ndarray, bell: np.ndarray, single_qubit: str) -> PureState3:
    """Product of a single-qubit state on single_qubit with a two-qubit state on the remaining pair (kept in A, B, C order)"""
    vector = np.kron(single, bell)  # qubit order: single, pair[0], pair[1]
    if single_qubit == "A":
        order = [0, 1, 2]
    elif single_qubit == "B":
        # output (A, B, C) = (pair[0], single, pair[1])
        order = [1, 0, 2]
    elif single_qubit == "C":
        order = [1, 2, 0]
    else:
        raise InvariantViolationError("qubit-label", "'{q}' is not one of A, B, C".format(q=single_qubit))
    vector = permutation_matrix(order) @ vector
    return pure_state(vector / np.linalg.norm(vector))


def permute_qubits(rho: DensityMatrix8, order: Sequence[int]) -> DensityMatrix8:
    p = permutation_matrix(order)
    return DensityMatrix8(matrix=p @ rho.matrix @ p.conj().T)


def purity(rho: DensityMatrix8) -> float:
    return float(np.trace(rho.matrix @ rho.matrix).real)


def pure_spec(psi: PureState3) -> StateSpec:
    return StateSpec(pure=PureStateSpec(amplitudes=[[float(a.real), float(a.imag)] for a in psi.amplitudes]))


def matrix_spec(m) -> StateSpec:
    matrix = np.array(m, dtype=np.complex128)
    return StateSpec(matrix=MatrixStateSpec(re=matrix.real.tolist(), im=matrix.imag.tolist()))


def mixture_spec(parts: Sequence[Tuple[float, StateSpec]]) -> StateSpec:
    return StateSpec(mix=MixtureStateSpec(parts=[MixturePart(weight=float(w), state=s) for w, s in parts]))


def catalog_spec(name: str, params: Sequence[float] = ()) -> StateSpec:
    return StateSpec(catalog=CatalogStateSpec(name=name, params=[float(x) for x in params]))


def build_density(spec: StateSpec, renormalize_catalog: bool = True) -> DensityMatrix8:
    """Resolve any StateSpec into a validated density matrix"""
    kind = spec.kind
    if kind == "pure":
        amplitudes = [complex(re, im) for re, im in spec.pure.amplitudes]
        return density_from_pure(pure_state(amplitudes))
    if kind == "matrix":
        matrix = np.array(spec.matrix.re, dtype=np.float64) + 1j * np.array(spec.matrix.im, dtype=np.float64)
        return validate_density(matrix)
    if kind == "mix":
        parts: List[Tuple[float, DensityMatrix8]] = [(part.weight, build_density(part.state, renormalize_catalog)) for part in spec.mix.parts]
        return convex_mix(parts)
    if kind == "catalog":
        from .catalog import catalog

        resolved = catalog(spec.catalog.name, spec.catalog.params, renormalize=renormalize_catalog)
        return build_density(resolved, renormalize_catalog)
    raise InvariantViolationError("state-kind", "a state document needs exactly one of pure, matrix, mix, catalog")


def render_state_spec(spec: StateSpec) -> dict:
    """JSON-ready document for a StateSpec, the inverse of state_parser.parse_state_document"""

    def strip_empty(value):
        if isinstance(value, dict):
            return {k: strip_empty(v) for k, v in value.items() if v is not None}
        if isinstance(value, list):
            return [strip_empty(v) for v in value]
        return value

    return strip_empty(asdict(spec))


def random_pure_state(rng: np.random.Generator) -> PureState3:
    """Haar-random pure state from a seeded generator"""
    vector = rng.normal(size=STATE_DIMENSION) + 1j * rng.normal(size=STATE_DIMENSION)
    return pure_state(vector / np.linalg.norm(vector))


def random_density(rng: np.random.Generator, rank: int = STATE_DIMENSION) -> DensityMatrix8:
    """Random mixed state g g^dagger / tr(g g^dagger) with g an 8 x rank Ginibre matrix"""
    g = rng.normal(size=(STATE_DIMENSION, rank)) + 1j * rng.normal(size=(STATE_DIMENSION, rank))
    m = g @ g.conj().T
    m = (m + m.conj().T) / 2
    return DensityMatrix8(matrix=m / np.trace(m).real)
