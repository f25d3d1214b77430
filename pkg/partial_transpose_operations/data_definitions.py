import enum
from dataclasses import dataclass

from common.data_definitions import CUT_NAMES, QUBIT_BIT_MASKS
from common.exceptions import InvariantViolationError
from linalg_operations.data_definitions import ComplexMatrix


class QubitLabel(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"

    @property
    def mask(self) -> int:
        """Bit of the basis index 4a + 2b + c that belongs to this qubit"""
        return QUBIT_BIT_MASKS[self.value]

    @property
    def cut(self) -> str:
        return CUT_NAMES[self.value]

    @classmethod
    def parse(cls, value) -> "QubitLabel":
        if isinstance(value, QubitLabel):
            return value
        try:
            return cls(str(value).strip().upper())
        except ValueError as err:
            raise InvariantViolationError("qubit-label", "'{value}' is not one of A, B, C".format(value=value)) from err


@dataclass(frozen=True, eq=False)
class PartialTransposed8:
    """Partial transpose of a density matrix on one qubit. Hermitian with unit trace but not necessarily positive"""

    matrix: ComplexMatrix
    source_qubit: QubitLabel
