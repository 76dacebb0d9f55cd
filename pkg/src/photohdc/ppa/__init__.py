from .device import (
    ConverterRef,
    DeviceAreas,
    DeviceParams,
    converter_energy,
    default_device_params,
    load_device_params,
    optical_path_loss_db,
    required_pd_optical_power,
    save_device_params,
)
from .power import PowerBreakdown, laser_power, total_power
from .area import AreaBreakdown, sram_kb_per_unit, total_area
from .report import DEFAULT_QUERIES, PpaReport, ppa_report
from .calibrate import CalibrationResult, calibrate_device
