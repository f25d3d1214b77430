## Assembles classification reports and renders them as JSON, a console table or CSV
import io
import json
import logging
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence

import arrow
import pandas as pd
from django.conf import settings

from common.data_definitions import CUT_NAMES
from common.utils import EnhancedJSONEncoder, format_float
from partial_transpose_operations.data_definitions import QubitLabel
from partial_transpose_operations.transpose_helper import negativity, pt_spectrum
from state_operations.data_definitions import DensityMatrix8, StateSpec
from state_operations.state_helper import render_state_spec
from tangle_operations.tangle_helper import pure_state_of, pure_subclass, three_tangle_pure

from .classification_helper import classification_parameter, spa_min_eigenvalue, spectral_summary, verdict_from_summary
from .data_definitions import SpectralSummary, Verdict, VerdictKind

logger = logging.getLogger("django")


@dataclass
class VerdictReport:
    kind: str
    label: str
    passing_cuts: List[str]
    cut: Optional[str]
    margin: float
    threshold: float
    caveat: str


@dataclass
class CutReport:
    qubit: str
    cut: str
    pt_spectrum: List[float]
    negativity: float
    spa_min_eigenvalue: float
    passes_threshold: bool


@dataclass
class TangleReport:
    tau: float
    subclass: str


@dataclass
class TimingReport:
    started_at: str
    finished_at: str
    elapsed_seconds: float


@dataclass
class Report:
    state: dict
    p: float
    eps: float
    cuts: List[CutReport]
    summary: Optional[SpectralSummary] = None
    verdict: Optional[VerdictReport] = None
    tangle: Optional[TangleReport] = None
    timing: Optional[TimingReport] = None


def verdict_report(verdict: Verdict) -> VerdictReport:
    return VerdictReport(
        kind=verdict.kind.value,
        label=verdict.label,
        passing_cuts=list(verdict.passing_cuts),
        cut=verdict.cut,
        margin=verdict.margin,
        threshold=verdict.threshold,
        caveat=verdict.caveat,
    )


def build_report(
    spec: StateSpec,
    rho: DensityMatrix8,
    qubits: Optional[Sequence] = None,
    p=None,
    eps: Optional[float] = None,
    include_tangle: bool = False,
) -> Report:
    """
    Run the full pipeline on one state. With `qubits` restricted to a single cut only that cut is
    evaluated and the report carries no verdict, the verdict needs all three cuts.
    """
    started = arrow.utcnow()
    eps = settings.THRESHOLD_EPS if eps is None else eps
    weight = classification_parameter(p)
    selected = [QubitLabel.parse(q) for q in qubits] if qubits else list(QubitLabel)

    cuts = []
    for q in selected:
        minimum = spa_min_eigenvalue(rho, q, weight)
        cuts.append(
            CutReport(
                qubit=q.value,
                cut=q.cut,
                pt_spectrum=[float(x) for x in pt_spectrum(rho, q).as_array()],
                negativity=negativity(rho, q),
                spa_min_eigenvalue=minimum,
                passes_threshold=minimum >= weight.threshold - eps,
            )
        )

    report = Report(state=render_state_spec(spec), p=weight.p, eps=eps, cuts=cuts)
    if len(selected) == len(QubitLabel):
        summary = spectral_summary(rho, weight)
        report.summary = summary
        report.verdict = verdict_report(verdict_from_summary(summary, eps=eps, p=weight))

    if include_tangle:
        psi = pure_state_of(rho)
        report.tangle = TangleReport(tau=three_tangle_pure(psi).tau, subclass=pure_subclass(psi, eps=eps).value)

    finished = arrow.utcnow()
    report.timing = TimingReport(
        started_at=started.isoformat(),
        finished_at=finished.isoformat(),
        elapsed_seconds=(finished - started).total_seconds(),
    )
    logger.info("Classified a %s state in %.3f s" % (spec.kind, report.timing.elapsed_seconds))
    return report


def render_json(report: Report) -> str:
    return json.dumps(asdict(report), cls=EnhancedJSONEncoder, indent=2)


def render_pretty(report: Report) -> str:
    out = io.StringIO()
    out.write("SPA weight p = {p}, threshold p/8 = {t}\n\n".format(p=format_float(report.p), t=format_float(report.p / 8)))
    out.write("{:<6} {:>22} {:>16} {:>8}\n".format("cut", "SPA-PT min eigenvalue", "negativity", "passes"))
    for cut in report.cuts:
        out.write(
            "{:<6} {:>22} {:>16} {:>8}\n".format(cut.cut, format_float(cut.spa_min_eigenvalue), format_float(cut.negativity), "yes" if cut.passes_threshold else "no")
        )
    if report.verdict:
        out.write("\nverdict: {label}\nmargin:  {margin}\n".format(label=report.verdict.label, margin=format_float(report.verdict.margin)))
        out.write("note:    {caveat}\n".format(caveat=report.verdict.caveat))
    if report.tangle:
        out.write("three-tangle: {tau} ({subclass})\n".format(tau=format_float(report.tangle.tau), subclass=report.tangle.subclass))
    return out.getvalue()


def render_csv(rows: List[dict], columns: Optional[List[str]] = None) -> str:
    """CSV with a fixed column order, '.' decimals, LF line endings and CSV_SIGNIFICANT_DIGITS digits"""
    df = pd.DataFrame(rows, columns=columns)
    return df.to_csv(index=False, float_format="%.{d}g".format(d=settings.CSV_SIGNIFICANT_DIGITS), lineterminator="\n")


def summary_row(summary: SpectralSummary, verdict: Verdict) -> dict:
    return {
        "lam_a": summary.lam_a,
        "lam_b": summary.lam_b,
        "lam_c": summary.lam_c,
        "lam_max": summary.lam_max,
        "verdict": verdict.kind.value,
        "cut": verdict_cuts(verdict),
    }


def verdict_cuts(verdict: Verdict) -> str:
    if verdict.kind != VerdictKind.BISEPARABLE:
        return ""
    return "+".join(CUT_NAMES[q] for q in verdict.passing_cuts)
