## Decision engine: SPA-PT minimum eigenvalues against the p/8 threshold (1/10 for the canonical weight)
import logging
from typing import Optional

from django.conf import settings

from common.data_definitions import CANONICAL_SPA_PARAMETER, MIN_CLASSIFICATION_SPA_PARAMETER
from common.exceptions import ParamOutOfRangeError
from linalg_operations.eigen_helper import min_eigenvalue
from partial_transpose_operations.data_definitions import QubitLabel
from partial_transpose_operations.transpose_helper import is_ppt_cut
from spa_operations.data_definitions import SpaParameter
from spa_operations.spa_helper import spa_pt
from state_operations.data_definitions import DensityMatrix8

from .data_definitions import SpectralSummary, Verdict, VerdictKind

logger = logging.getLogger("django")


def classification_parameter(p=None) -> SpaParameter:
    """SPA weight for classification, the threshold argument needs 4/5 <= p < 1"""
    weight = SpaParameter.coerce(CANONICAL_SPA_PARAMETER if p is None else p)
    if not MIN_CLASSIFICATION_SPA_PARAMETER <= weight.p < 1.0:
        raise ParamOutOfRangeError("p", weight.p, "classification needs 4/5 <= p < 1")
    return weight


def spa_min_eigenvalue(rho: DensityMatrix8, qubit, p=None) -> float:
    return min_eigenvalue(spa_pt(rho, qubit, classification_parameter(p)).matrix)


def spectral_summary(rho: DensityMatrix8, p=None) -> SpectralSummary:
    weight = classification_parameter(p)
    lam_a, lam_b, lam_c = (min_eigenvalue(spa_pt(rho, q, weight).matrix) for q in QubitLabel)
    return SpectralSummary(lam_a=lam_a, lam_b=lam_b, lam_c=lam_c, lam_max=max(lam_a, lam_b, lam_c))


def theorem_check(rho: DensityMatrix8, qubit, eps: Optional[float] = None, p=None) -> bool:
    """Necessary condition for separability across the cut of `qubit`: lambda_min >= p/8 - eps"""
    eps = settings.THRESHOLD_EPS if eps is None else eps
    weight = classification_parameter(p)
    return spa_min_eigenvalue(rho, qubit, weight) >= weight.threshold - eps


def verdict_from_summary(summary: SpectralSummary, eps: Optional[float] = None, p=None) -> Verdict:
    eps = settings.THRESHOLD_EPS if eps is None else eps
    if eps < 0:
        raise ParamOutOfRangeError("eps", eps, "the threshold tolerance must be non-negative")
    threshold = classification_parameter(p).threshold
    values = {q.value: summary.by_qubit(q.value) for q in QubitLabel}
    passing = tuple(q for q, value in values.items() if value >= threshold - eps)

    if not passing:
        kind = VerdictKind.GENUINE_ENTANGLED
        deciding = summary.lam_max
    elif len(passing) == len(values):
        kind = VerdictKind.FULLY_SEPARABLE
        deciding = min(values.values())
    else:
        kind = VerdictKind.BISEPARABLE
        deciding = min(values[q] for q in passing)
    return Verdict(kind=kind, passing_cuts=passing, margin=deciding - threshold, threshold=threshold)


def classify(rho: DensityMatrix8, eps: Optional[float] = None, p=None) -> Verdict:
    summary = spectral_summary(rho, p)
    verdict = verdict_from_summary(summary, eps=eps, p=p)
    logger.debug(
        "SPA-PT minima A=%.12g B=%.12g C=%.12g -> %s" % (summary.lam_a, summary.lam_b, summary.lam_c, verdict.label)
    )
    return verdict


def is_genuine_by_ppt(rho: DensityMatrix8, tol: Optional[float] = None) -> bool:
    """
    True when every single-qubit cut has a negative partial transpose beyond the classifier's tolerance band,
    so the answer matches `classify(rho).kind == GENUINE_ENTANGLED` at the default eps
    """
    if tol is None:
        # the eps band on the SPA-PT side, mapped back through the affine law
        tol = settings.THRESHOLD_EPS / (1 - CANONICAL_SPA_PARAMETER)
    return not any(is_ppt_cut(rho, q, tol=tol) for q in QubitLabel)
