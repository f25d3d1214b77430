from dataclasses import dataclass
from typing import Tuple

import numpy as np
import numpy.typing as npt

# Dense complex matrices are numpy arrays of complex128, rows x cols, row-major
ComplexMatrix = npt.NDArray[np.complex128]


@dataclass(frozen=True)
class HermitianSpectrum:
    """Ascending eigenvalues of a Hermitian matrix, only the sorted list is part of the contract"""

    eigenvalues: Tuple[float, ...]

    @property
    def minimum(self) -> float:
        return self.eigenvalues[0]

    @property
    def maximum(self) -> float:
        return self.eigenvalues[-1]

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def as_array(self) -> npt.NDArray[np.float64]:
        return np.array(self.eigenvalues, dtype=np.float64)
