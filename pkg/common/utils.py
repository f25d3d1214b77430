import enum
import json
from dataclasses import asdict, is_dataclass

import numpy as np

from common.exceptions import InputError


class EnhancedJSONEncoder(json.JSONEncoder):
    def default(self, o):
        if is_dataclass(o):
            return asdict(o)
        if isinstance(o, enum.Enum):
            return o.value
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, np.generic):
            return o.item()
        if isinstance(o, complex):
            return [o.real, o.imag]
        return super().default(o)


def format_float(value: float, significant_digits: int = 12) -> str:
    """Shortest representation of a float within the given number of significant digits"""
    formatted = "{value:.{digits}g}".format(value=float(value), digits=significant_digits)
    if formatted == "-0":
        return "0"
    return formatted


def exit_code_for(error: Exception) -> int:
    """Command-line exit status for a failure: 2 for bad input, 1 for anything numerical"""
    return 2 if isinstance(error, InputError) else 1
