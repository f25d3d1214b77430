import math
from dataclasses import dataclass

from common.exceptions import ParamOutOfRangeError
from linalg_operations.data_definitions import ComplexMatrix
from partial_transpose_operations.data_definitions import QubitLabel


@dataclass(frozen=True)
class SpaParameter:
    """Weight p of the depolarizing part of the SPA-PT map"""

    p: float

    def __post_init__(self):
        if not (math.isfinite(self.p) and 0.0 <= self.p <= 1.0):
            raise ParamOutOfRangeError("p", self.p, "the SPA weight lies in [0, 1]")

    @property
    def threshold(self) -> float:
        """Lower bound on the minimum output eigenvalue for a cut with positive partial transpose"""
        return self.p / 8

    @classmethod
    def coerce(cls, value) -> "SpaParameter":
        if isinstance(value, SpaParameter):
            return value
        return cls(p=float(value))


@dataclass(frozen=True, eq=False)
class SpaOutput8:
    matrix: ComplexMatrix
    source_qubit: QubitLabel
    p: SpaParameter
