from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from linalg_operations.data_definitions import ComplexMatrix


@dataclass(frozen=True, eq=False)
class PureState3:
    """Eight amplitudes of a three-qubit pure state, amplitudes[4a + 2b + c] is the coefficient of |abc>"""

    amplitudes: np.ndarray


@dataclass(frozen=True, eq=False)
class DensityMatrix8:
    """A validated three-qubit density operator: Hermitian, unit trace and positive semidefinite"""

    matrix: ComplexMatrix


# The JSON state document, one dataclass per envelope. Exactly one field of StateSpec is set.


@dataclass
class PureStateSpec:
    # each amplitude as [re, im]
    amplitudes: List[List[float]]


@dataclass
class MatrixStateSpec:
    re: List[List[float]]
    im: List[List[float]]


@dataclass
class MixturePart:
    weight: float
    state: "StateSpec"


@dataclass
class MixtureStateSpec:
    parts: List[MixturePart]


@dataclass
class CatalogStateSpec:
    name: str
    params: List[float] = field(default_factory=list)


@dataclass
class StateSpec:
    pure: Optional[PureStateSpec] = None
    matrix: Optional[MatrixStateSpec] = None
    mix: Optional[MixtureStateSpec] = None
    catalog: Optional[CatalogStateSpec] = None

    @property
    def kind(self) -> str:
        for kind in ("pure", "matrix", "mix", "catalog"):
            if getattr(self, kind) is not None:
                return kind
        return "empty"


@dataclass(frozen=True)
class CatalogEntry:
    """Documentation for one named state: parameter names, defaults and whether the state is pure"""

    name: str
    parameters: List[str]
    defaults: List[float]
    description: str
    is_pure: bool
