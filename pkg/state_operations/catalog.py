## Named three-qubit states used throughout the classification examples
import logging
import math
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np
from django.conf import settings

from common.exceptions import NotNormalizedError, ParamOutOfRangeError, UnknownStateError

from .data_definitions import CatalogEntry, StateSpec
from .state_helper import (
    bell_state,
    catalog_spec,
    matrix_spec,
    mixture_spec,
    pure_spec,
    pure_state,
    pure_state_from_terms,
    single_qubit_state,
)

logger = logging.getLogger("django")

SQRT_HALF = 1 / math.sqrt(2)
SQRT_THIRD = 1 / math.sqrt(3)


def _normalized_coefficients(name: str, values: Sequence[float], renormalize: bool) -> List[float]:
    """Amplitude parameters of a named pure state, optionally rescaled onto the unit sphere"""
    coefficients = [float(v) for v in values]
    for index, value in enumerate(coefficients):
        if not -1.0 <= value <= 1.0:
            raise ParamOutOfRangeError("{name}[{index}]".format(name=name, index=index), value, "amplitudes lie in [-1, 1]")
    norm_squared = sum(c * c for c in coefficients)
    deviation = abs(norm_squared - 1.0)
    if deviation <= settings.STATE_TOLERANCE:
        return coefficients
    if renormalize and deviation <= settings.CATALOG_RENORMALIZE_TOLERANCE and norm_squared > 0:
        logger.warning("Renormalizing parameters of catalog state %s, squared norm was %.6f" % (name, norm_squared))
        scale = 1 / math.sqrt(norm_squared)
        return [c * scale for c in coefficients]
    raise NotNormalizedError(norm_squared)


def _probability(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ParamOutOfRangeError(name, value, "probabilities lie in [0, 1]")
    return value


def ghz_vector(alpha: float = SQRT_HALF, beta: float = SQRT_HALF) -> np.ndarray:
    return pure_state_from_terms([("000", alpha), ("111", beta)]).amplitudes


def w_vector(l0: float = SQRT_THIRD, l1: float = SQRT_THIRD, l2: float = SQRT_THIRD) -> np.ndarray:
    return pure_state_from_terms([("001", l0), ("010", l1), ("100", l2)]).amplitudes


def w_tilde_vector() -> np.ndarray:
    return pure_state_from_terms([("110", SQRT_THIRD), ("101", SQRT_THIRD), ("011", SQRT_THIRD)]).amplitudes


def kye_matrix(a: float) -> np.ndarray:
    m = np.diag([4 + a, a, a, a, a, a, a, 4 + a]).astype(np.complex128)
    for i, j, value in ((0, 7, 2), (1, 6, 2), (2, 5, -2), (3, 4, 2)):
        m[i, j] = value
        m[j, i] = value
    return m / (8 + 8 * a)


def _ghz(params: Sequence[float], renormalize: bool) -> StateSpec:
    alpha, beta = _normalized_coefficients("ghz", params, renormalize)
    return pure_spec(pure_state(ghz_vector(alpha, beta)))


def _w(params: Sequence[float], renormalize: bool) -> StateSpec:
    l0, l1, l2 = _normalized_coefficients("w", params, renormalize)
    return pure_spec(pure_state(w_vector(l0, l1, l2)))


def _w_tilde(params: Sequence[float], renormalize: bool) -> StateSpec:
    return pure_spec(pure_state(w_tilde_vector()))


def _g2(params: Sequence[float], renormalize: bool) -> StateSpec:
    s = 1 / math.sqrt(5)
    return pure_spec(pure_state_from_terms([(label, s) for label in ("000", "100", "101", "110", "111")]))


def _g3(params: Sequence[float], renormalize: bool) -> StateSpec:
    l0, l1, l2 = _normalized_coefficients("g3", params, renormalize)
    return pure_spec(pure_state_from_terms([("000", l0), ("100", l1), ("111", l2)]))


def _ghz_w(params: Sequence[float], renormalize: bool) -> StateSpec:
    q = _probability("q", params[0])
    return mixture_spec([(q, pure_spec(pure_state(ghz_vector()))), (1 - q, pure_spec(pure_state(w_vector())))])


def _b1(params: Sequence[float], renormalize: bool) -> StateSpec:
    q = _probability("q", params[0])
    zero, one = np.array([1, 0], dtype=np.complex128), np.array([0, 1], dtype=np.complex128)
    first = pure_state(np.kron(zero, bell_state("phi+")))
    second = pure_state(np.kron(one, bell_state("phi-")))
    return mixture_spec([(q, pure_spec(first)), (1 - q, pure_spec(second))])


def _b2(params: Sequence[float], renormalize: bool) -> StateSpec:
    l0, l1, l2 = _normalized_coefficients("b2", params, renormalize)
    return pure_spec(pure_state_from_terms([("001", l0), ("101", l1), ("111", l2)]))


def _kye(params: Sequence[float], renormalize: bool) -> StateSpec:
    a = float(params[0])
    if a < 2:
        raise ParamOutOfRangeError("a", a, "the Kye matrix is positive semidefinite only for a >= 2")
    return matrix_spec(kye_matrix(a))


def _s2(params: Sequence[float], renormalize: bool) -> StateSpec:
    alpha = _probability("alpha", params[0])
    maximally_mixed = np.eye(8, dtype=np.complex128) / 8
    return mixture_spec([(1 - alpha, pure_spec(pure_state(ghz_vector()))), (alpha, matrix_spec(maximally_mixed))])


def _s3(params: Sequence[float], renormalize: bool) -> StateSpec:
    q = _probability("q", params[0])
    psi = pure_state_from_terms([("001", SQRT_HALF), ("101", SQRT_HALF)])
    return mixture_spec([(q, pure_spec(psi)), (1 - q, pure_spec(pure_state_from_terms([("111", 1.0)])))])


def _rho1(params: Sequence[float], renormalize: bool) -> StateSpec:
    q = _probability("q", params[0])
    return mixture_spec([(q, pure_spec(pure_state_from_terms([("000", 1.0)]))), (1 - q, pure_spec(pure_state(ghz_vector())))])


def _rho2(params: Sequence[float], renormalize: bool) -> StateSpec:
    q1 = _probability("q1", params[0])
    q2 = _probability("q2", params[1])
    q3 = 1 - q1 - q2
    if q3 < -settings.STATE_TOLERANCE:
        raise ParamOutOfRangeError("q1+q2", q1 + q2, "the GHZ and W weights must not exceed 1 together")
    q3 = max(q3, 0.0)
    return mixture_spec(
        [
            (q1, pure_spec(pure_state(ghz_vector()))),
            (q2, pure_spec(pure_state(w_vector()))),
            (q3, pure_spec(pure_state(w_tilde_vector()))),
        ]
    )


def _product(params: Sequence[float], renormalize: bool) -> StateSpec:
    theta_a, phi_a, theta_b, phi_b, theta_c, phi_c = (float(x) for x in params)
    vector = np.kron(np.kron(single_qubit_state(theta_a, phi_a), single_qubit_state(theta_b, phi_b)), single_qubit_state(theta_c, phi_c))
    return pure_spec(pure_state(vector / np.linalg.norm(vector)))


Builder = Callable[[Sequence[float], bool], StateSpec]

CATALOG: Dict[str, Tuple[CatalogEntry, Builder]] = {
    "ghz": (CatalogEntry("ghz", ["alpha", "beta"], [SQRT_HALF, SQRT_HALF], "alpha|000> + beta|111>", True), _ghz),
    "w": (
        CatalogEntry("w", ["l0", "l1", "l2"], [SQRT_THIRD] * 3, "l0|001> + l1|010> + l2|100>", True),
        _w,
    ),
    "w_tilde": (CatalogEntry("w_tilde", [], [], "(|110> + |101> + |011>) / sqrt(3)", True), _w_tilde),
    "g2": (CatalogEntry("g2", [], [], "(|000> + |100> + |101> + |110> + |111>) / sqrt(5)", True), _g2),
    "g3": (
        CatalogEntry("g3", ["l0", "l1", "l2"], [SQRT_THIRD] * 3, "l0|000> + l1|100> + l2|111>", True),
        _g3,
    ),
    "ghz_w": (CatalogEntry("ghz_w", ["q"], [0.5], "q GHZ + (1 - q) W", False), _ghz_w),
    "b1": (CatalogEntry("b1", ["q"], [0.5], "q |0><0| x phi+ + (1 - q) |1><1| x phi-", False), _b1),
    "b2": (
        CatalogEntry("b2", ["l0", "l1", "l2"], [SQRT_THIRD] * 3, "l0|001> + l1|101> + l2|111>", True),
        _b2,
    ),
    "kye": (CatalogEntry("kye", ["a"], [4.0], "Kye matrix with prefactor 1 / (8 + 8a), a >= 2", False), _kye),
    "s2": (CatalogEntry("s2", ["alpha"], [0.9], "(1 - alpha) GHZ + alpha I / 8", False), _s2),
    "s3": (CatalogEntry("s3", ["q"], [0.5], "q |+01><+01| + (1 - q) |111><111|", False), _s3),
    "rho1": (CatalogEntry("rho1", ["q"], [0.5], "q |000><000| + (1 - q) GHZ", False), _rho1),
    "rho2": (
        CatalogEntry("rho2", ["q1", "q2"], [0.5, 0.25], "q1 GHZ + q2 W + (1 - q1 - q2) W-tilde", False),
        _rho2,
    ),
    "product": (
        CatalogEntry(
            "product",
            ["theta_a", "phi_a", "theta_b", "phi_b", "theta_c", "phi_c"],
            [0.0] * 6,
            "product of three Bloch-sphere states cos(theta/2)|0> + exp(i phi) sin(theta/2)|1>",
            True,
        ),
        _product,
    ),
}

CATALOG_ALIASES = {
    "ghz-w": "ghz_w",
    "w-tilde": "w_tilde",
}


def canonical_name(name: str) -> str:
    key = name.strip().lower()
    key = CATALOG_ALIASES.get(key, key)
    if key not in CATALOG:
        raise UnknownStateError(name)
    return key


def catalog_entry(name: str) -> CatalogEntry:
    return CATALOG[canonical_name(name)][0]


def catalog_entries() -> List[CatalogEntry]:
    return [entry for entry, _ in CATALOG.values()]


def catalog(name: str, params: Sequence[float] = (), renormalize: bool = False) -> StateSpec:
    """
    Expand a named state into a fully specified StateSpec (pure amplitudes, raw matrix or mixture).
    Missing trailing parameters take the entry defaults; extra parameters are rejected.
    """
    key = canonical_name(name)
    entry, builder = CATALOG[key]
    values = [float(p) for p in params]
    if len(values) > len(entry.parameters):
        raise ParamOutOfRangeError(
            "params", values, "{name} takes {n} parameter(s): {names}".format(name=key, n=len(entry.parameters), names=", ".join(entry.parameters) or "none")
        )
    values = values + list(entry.defaults[len(values) :])
    for parameter, value in zip(entry.parameters, values):
        if not math.isfinite(value):
            raise ParamOutOfRangeError(parameter, value, "parameters must be finite")
    return builder(values, renormalize)


def catalog_reference(name: str, params: Sequence[float] = ()) -> StateSpec:
    """The unexpanded catalog envelope, as it would appear in a state document"""
    return catalog_spec(canonical_name(name), params)
