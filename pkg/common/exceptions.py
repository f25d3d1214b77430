class SpaTripartiteError(Exception):
    """Base class for every error raised by the entanglement toolkit"""


class InputError(SpaTripartiteError):
    """Errors caused by the caller's input, the command line maps these to exit code 2"""


class NumericalError(SpaTripartiteError):
    """Errors caused by a numerical failure, the command line maps these to exit code 1"""


class NonSquareMatrixError(InputError):
    def __init__(self, shape):
        self.shape = tuple(shape)
        super().__init__("Matrix must be square, got shape {shape}".format(shape=self.shape))


class NotHermitianError(InputError):
    def __init__(self, defect: float, tol: float):
        self.defect = defect
        self.tol = tol
        super().__init__("Matrix is not Hermitian: defect {defect:.3e} exceeds tolerance {tol:.1e}".format(defect=defect, tol=tol))


class NotNormalizedError(InputError):
    def __init__(self, norm_squared: float):
        self.norm_squared = norm_squared
        super().__init__("State is not normalized: squared norm is {n:.12g}".format(n=norm_squared))


class BadWeightsError(InputError):
    def __init__(self, message: str):
        super().__init__(message)


class UnknownStateError(InputError):
    def __init__(self, name: str):
        self.name = name
        super().__init__("Unknown catalog state '{name}'".format(name=name))


class ParamOutOfRangeError(InputError):
    def __init__(self, name: str, value, message: str = ""):
        self.name = name
        self.value = value
        detail = ": {message}".format(message=message) if message else ""
        super().__init__("Parameter {name}={value} is out of range{detail}".format(name=name, value=value, detail=detail))


class SchemaError(InputError):
    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__("{path}: {message}".format(path=path, message=message))


class InvariantViolationError(InputError):
    def __init__(self, which: str, message: str = ""):
        self.which = which
        detail = ": {message}".format(message=message) if message else ""
        super().__init__("Invariant '{which}' violated{detail}".format(which=which, detail=detail))


class EigenSolverConvergenceError(NumericalError):
    def __init__(self, sweeps: int, off_norm: float):
        self.sweeps = sweeps
        self.off_norm = off_norm
        super().__init__("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off:.3e})".format(sweeps=sweeps, off=off_norm))
