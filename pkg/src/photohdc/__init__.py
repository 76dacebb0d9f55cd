"""Functional simulator and analytical PPA explorer for an electro-photonic
hyperdimensional-computing accelerator."""

__version__ = "0.1.0"

from . import datasets, dse, hdc, ppa, sim
from .errors import CalibrationError, DataFormatError, ParameterError
from .estimator import HdcClassifier, HdcEncoder
