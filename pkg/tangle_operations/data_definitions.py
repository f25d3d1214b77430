import enum
from dataclasses import dataclass

from common.exceptions import InvariantViolationError


@dataclass(frozen=True)
class TangleValue:
    tau: float

    def __post_init__(self):
        if not -1e-12 <= self.tau <= 1 + 1e-12:
            raise InvariantViolationError("tangle-range", "three-tangle {tau} outside [0, 1]".format(tau=self.tau))


class PureSubclass(str, enum.Enum):
    GHZ_CLASS = "GHZ-class"
    W_CLASS = "W-class"
    NOT_GENUINE = "not-genuine"
