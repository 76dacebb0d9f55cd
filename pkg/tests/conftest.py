import numpy as np
import pytest

from photohdc.ppa import default_device_params
from photohdc.ppa.calibrate import calibrate_device


@pytest.fixture(scope="session")
def device():
    return default_device_params()


@pytest.fixture(scope="session")
def calibrated(device):
    cal, _ = calibrate_device(device)
    return cal


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
