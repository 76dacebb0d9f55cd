"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An operation was called with structurally invalid parameters."""


class DataFormatError(ValueError):
    """An input file does not follow the expected format."""


class CalibrationError(RuntimeError):
    """Device calibration could not produce physically meaningful constants."""
