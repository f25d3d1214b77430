import enum
from dataclasses import dataclass
from typing import Optional, Tuple

from common.data_definitions import CUT_NAMES, NECESSARY_CONDITION_CAVEAT


@dataclass(frozen=True)
class SpectralSummary:
    """Minimum eigenvalues of the SPA-PT outputs on qubits A, B and C, and their maximum"""

    lam_a: float
    lam_b: float
    lam_c: float
    lam_max: float

    def by_qubit(self, qubit: str) -> float:
        return {"A": self.lam_a, "B": self.lam_b, "C": self.lam_c}[qubit]


class VerdictKind(str, enum.Enum):
    GENUINE_ENTANGLED = "GenuineEntangled"
    BISEPARABLE = "Biseparable"
    FULLY_SEPARABLE = "FullySeparable"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    # qubits whose SPA-PT minimum reached the threshold, in A, B, C order
    passing_cuts: Tuple[str, ...]
    margin: float
    threshold: float
    caveat: str = NECESSARY_CONDITION_CAVEAT

    @property
    def cut(self) -> Optional[str]:
        """Cut name such as A-BC when exactly one cut passes"""
        if self.kind == VerdictKind.BISEPARABLE and len(self.passing_cuts) == 1:
            return CUT_NAMES[self.passing_cuts[0]]
        return None

    @property
    def label(self) -> str:
        if self.kind == VerdictKind.GENUINE_ENTANGLED:
            return "genuine entangled"
        if self.kind == VerdictKind.FULLY_SEPARABLE:
            return "fully separable (necessary-condition based)"
        if self.cut:
            return "biseparable in {cut} cut".format(cut=self.cut)
        # two passing cuts: not a named class, report the cuts that passed
        return "biseparable, passes {cuts} cuts".format(cuts=" and ".join(CUT_NAMES[q] for q in self.passing_cuts))
