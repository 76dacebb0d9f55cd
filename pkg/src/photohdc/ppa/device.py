"""Physical-constants registry and converter energy scaling.

All physical constants flow through a DeviceParams document; nothing is
inlined elsewhere. The shipped defaults live in data/device_params_default.json
and are the single calibration point for absolute power numbers.
"""

from __future__ import annotations

import importlib.resources
import json
import math
from dataclasses import asdict, dataclass, replace

from ..errors import ParameterError

ELEMENTARY_CHARGE = 1.602176634e-19  # coulomb


@dataclass(frozen=True)
class ConverterRef:
    """Published reference converter: bit width and energy per conversion."""

    bits: int
    energy_pj: float
    node_nm: int = 28


@dataclass(frozen=True)
class DeviceAreas:
    """Per-device areas in mm^2 (22 nm-scaled for the CMOS blocks)."""

    dac_mm2: float
    adc_mm2: float
    mzm_mm2: float
    pd_mm2: float
    sram_mm2_per_kb: float
    adder_mm2: float


@dataclass(frozen=True)
class DeviceParams:
    kappa: float
    q: float
    delta_f: float
    responsivity: float
    laser_wallplug_eff: float
    coupling_loss_db: float
    mzm_insertion_loss_db: float
    splitter_loss_db: float
    wg_loss_straight_db_per_cm: float
    wg_loss_bend_db_per_bend_cm_equiv: float
    bend_radius_um: float
    pd_pitch_um: float
    mzm_mod_energy_fj_per_bit: float
    mzm_tuning_mw: float
    tia_energy_fj_per_bit: float
    dac_ref: ConverterRef
    adc_ref: ConverterRef
    sram_energy_pj_per_32b_access: float
    adder_energy_pj_per_op: float
    areas: DeviceAreas
    signal_velocity_cm_per_ns: float

    def __post_init__(self):
        for name in ("coupling_loss_db", "mzm_insertion_loss_db",
                     "splitter_loss_db", "wg_loss_straight_db_per_cm",
                     "wg_loss_bend_db_per_bend_cm_equiv"):
            if getattr(self, name) < 0:
                raise ParameterError(f"{name} must be >= 0 dB")
        if not (0.0 < self.laser_wallplug_eff <= 1.0):
            raise ParameterError("laser_wallplug_eff must lie in (0, 1]")
        for name, value in asdict(self.areas).items():
            if value <= 0:
                raise ParameterError(f"areas.{name} must be > 0")
        for name in ("kappa", "q", "delta_f", "responsivity", "pd_pitch_um",
                     "signal_velocity_cm_per_ns"):
            if getattr(self, name) <= 0:
                raise ParameterError(f"{name} must be > 0")
        for name in ("sram_energy_pj_per_32b_access", "adder_energy_pj_per_op",
                     "mzm_mod_energy_fj_per_bit", "mzm_tuning_mw",
                     "tia_energy_fj_per_bit", "bend_radius_um"):
            if getattr(self, name) < 0:
                raise ParameterError(f"{name} must be >= 0")

    def with_values(self, **kwargs) -> "DeviceParams":
        return replace(self, **kwargs)

    def to_json(self) -> str:
        doc = {"schema_version": 1}
        doc.update(asdict(self))
        return json.dumps(doc, indent=2, sort_keys=True)


def device_from_dict(doc: dict) -> DeviceParams:
    doc = dict(doc)
    doc.pop("schema_version", None)
    try:
        dac_ref = ConverterRef(**doc.pop("dac_ref"))
        adc_ref = ConverterRef(**doc.pop("adc_ref"))
        areas = DeviceAreas(**doc.pop("areas"))
        return DeviceParams(dac_ref=dac_ref, adc_ref=adc_ref, areas=areas, **doc)
    except TypeError as exc:
        raise ParameterError(f"malformed device parameters: {exc}") from None


def load_device_params(path) -> DeviceParams:
    with open(path) as fh:
        return device_from_dict(json.load(fh))


def save_device_params(device: DeviceParams, path):
    with open(path, "w") as fh:
        fh.write(device.to_json())
        fh.write("\n")


def default_device_params() -> DeviceParams:
    ref = importlib.resources.files("photohdc.data") / "device_params_default.json"
    return device_from_dict(json.loads(ref.read_text()))


def converter_energy(ref: ConverterRef, target_bits: int,
                     node_scale: float = 1.0) -> float:
    """Energy per conversion in joules at a different effective bit count.

    Converter energy scales roughly with 2^ENOB, so a reference conversion
    energy is shifted by 2^(target - ref) and an optional technology-node
    scale factor.
    """
    if target_bits < 1:
        raise ParameterError("target_bits must be >= 1")
    return ref.energy_pj * 1e-12 * 2.0 ** (target_bits - ref.bits) * node_scale


def required_pd_optical_power(bits: int, device: DeviceParams) -> float:
    """Optical signal power one photodiode needs for b-bit detection.

    Shot-noise-limited detection at b bits requires an SNR of 2^b; kappa
    folds in all other noise contributions as an opaque multiplier.
    """
    if bits < 1:
        raise ParameterError("bits must be >= 1")
    snr_shot = 2.0 ** bits
    return (device.kappa * snr_shot) ** 2 * device.q * device.delta_f / 4.0


def area_scale_28_to_22() -> float:
    """Fixed-voltage linear-dimension area ratio from 28 nm to 22 nm."""
    return (22.0 / 28.0) ** 2


def optical_path_loss_db(rows: int, device: DeviceParams,
                         include_distribution: bool = True) -> float:
    """Loss along one column's optical path in dB.

    Coupling and MZM insertion always apply; the distribution network adds
    one excess splitter loss per cascade stage plus waveguide loss over the
    column length (rows at the photodiode pitch) and two bends per stage.
    """
    loss = device.coupling_loss_db + device.mzm_insertion_loss_db
    if include_distribution and rows > 1:
        stages = math.ceil(math.log2(rows))
        loss += stages * device.splitter_loss_db
        length_cm = rows * device.pd_pitch_um * 1e-4
        loss += device.wg_loss_straight_db_per_cm * length_cm
        bend_arc_cm = (math.pi / 2.0) * device.bend_radius_um * 1e-4
        loss += 2 * stages * bend_arc_cm * device.wg_loss_bend_db_per_bend_cm_equiv
    return loss
