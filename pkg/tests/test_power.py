import pytest

from photohdc.datasets import builtin
from photohdc.errors import ParameterError
from photohdc.ppa import (
    ConverterRef,
    converter_energy,
    laser_power,
    required_pd_optical_power,
    total_power,
)
from photohdc.reference import RECORD_TRAIN_CONFIG, TRAD_TRAIN_CONFIG
from photohdc.sim import AcceleratorConfig, ScheduleStats, WorkloadSpec, \
    schedule_inference, schedule_training


def _wl(name, scheme):
    return WorkloadSpec.from_descriptor(builtin(name), scheme)


def test_required_pd_power_hand_value(device):
    # (3 * 2^4)^2 * q * 5 GHz / 4
    got = required_pd_optical_power(4, device)
    assert got == pytest.approx(2304 * 1.602176634e-19 * 5e9 / 4, rel=1e-12)
    assert got == pytest.approx(4.61e-7, rel=0.01)


def test_required_pd_power_bit_scaling(device):
    assert required_pd_optical_power(5, device) == \
        pytest.approx(4 * required_pd_optical_power(4, device))


def test_required_pd_power_kappa_quadratic(device):
    doubled = device.with_values(kappa=2 * device.kappa)
    assert required_pd_optical_power(4, doubled) == \
        pytest.approx(4 * required_pd_optical_power(4, device))


def test_converter_energy_examples():
    dac = ConverterRef(bits=14, energy_pj=2.0)
    adc = ConverterRef(bits=10, energy_pj=1.0)
    assert converter_energy(dac, 14) == pytest.approx(2.0e-12)
    assert converter_energy(adc, 4) == pytest.approx(1.0e-12 / 64)
    assert converter_energy(dac, 5) == pytest.approx(2.0e-12 / 512)
    with pytest.raises(ParameterError):
        converter_energy(dac, 0)


def test_laser_no_splitter_for_single_row(device):
    cfg1 = AcceleratorConfig(rows=1, cols=8, f_ghz=5.0)
    # with one row the path carries only coupling and modulator losses
    base_db = device.coupling_loss_db + device.mzm_insertion_loss_db
    expected = (required_pd_optical_power(4, device) * 1
                * 10 ** (base_db / 10) / device.laser_wallplug_eff * 8)
    assert laser_power(cfg1, device) == pytest.approx(expected)


def test_laser_linear_in_cols(device):
    a = laser_power(AcceleratorConfig(rows=64, cols=32, f_ghz=5.0), device)
    b = laser_power(AcceleratorConfig(rows=64, cols=64, f_ghz=5.0), device)
    assert b == pytest.approx(2 * a)


def test_laser_bit_ratio_exactly_four(device):
    a = laser_power(AcceleratorConfig(rows=64, cols=64, bits=4), device)
    b = laser_power(AcceleratorConfig(rows=64, cols=64, bits=5), device)
    assert b / a == pytest.approx(4.0, rel=1e-12)


def test_distribution_losses_are_minor_fraction(calibrated):
    # splitting and waveguide losses move total power by only a few percent
    iso = _wl("ISOLET", "traditional")
    cfg = TRAD_TRAIN_CONFIG
    stats = schedule_training(iso, cfg)
    total = total_power(stats, cfg, calibrated, "train").total_w
    with_losses = laser_power(cfg, calibrated, include_distribution_losses=True)
    without = laser_power(cfg, calibrated, include_distribution_losses=False)
    assert (with_losses - without) / total < 0.05
    assert with_losses / total < 0.15  # laser stays non-dominant


def test_zero_cycle_schedule_static_only(device):
    cfg = AcceleratorConfig(rows=8, cols=8, units=2, f_ghz=5.0)
    stats = ScheduleStats(total_cycles=0, tile_updates=0, dac_conversions=0,
                          adc_conversions=0, mzm_modulations=0,
                          sram_reads_bits=0, sram_writes_bits=0, adder_ops=0,
                          wall_latency_s=0.0)
    pb = total_power(stats, cfg, device, "train")
    assert pb.dac_w == pb.adc_w == pb.sram_w == pb.adder_w == 0.0
    assert pb.mzm_tuning_w == pytest.approx(11.3e-3 * 8 * 2)
    assert pb.laser_w > 0
    assert pb.total_w == pytest.approx(pb.mzm_tuning_w + pb.laser_w)


def test_tuning_dominates_traditional_training(calibrated):
    iso = _wl("ISOLET", "traditional")
    stats = schedule_training(iso, TRAD_TRAIN_CONFIG)
    pb = total_power(stats, TRAD_TRAIN_CONFIG, calibrated, "train")
    assert pb.mzm_tuning_w / pb.total_w > 0.5


def test_sram_dominates_record_training(calibrated):
    iso = _wl("ISOLET", "record")
    stats = schedule_training(iso, RECORD_TRAIN_CONFIG)
    pb = total_power(stats, RECORD_TRAIN_CONFIG, calibrated, "train")
    parts = pb.as_dict()
    parts.pop("total_w")
    assert max(parts, key=parts.get) == "sram_w"


def test_power_strictly_increasing_sublinear_in_rows(calibrated):
    iso = _wl("ISOLET", "traditional")

    def p(rows):
        cfg = AcceleratorConfig(rows=rows, cols=76, units=1, f_ghz=5.0)
        return total_power(schedule_training(iso, cfg), cfg, calibrated,
                           "train").total_w

    values = [p(r) for r in (16, 32, 64, 128)]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert all(b < 2.2 * a for a, b in zip(values, values[1:]))


def test_rows_cheaper_than_cols(calibrated):
    iso = _wl("ISOLET", "traditional")

    def p(rows, cols):
        cfg = AcceleratorConfig(rows=rows, cols=cols, units=1, f_ghz=5.0)
        return total_power(schedule_training(iso, cfg), cfg, calibrated,
                           "train").total_w

    for r, c in ((32, 32), (64, 64), (32, 64)):
        assert p(2 * r, c) < p(r, 2 * c)


def test_inference_power_exceeds_training(calibrated):
    iso = _wl("ISOLET", "traditional")
    cfg = AcceleratorConfig(rows=64, cols=64, units=2, f_ghz=5.0)
    pt = total_power(schedule_training(iso, cfg), cfg, calibrated, "train")
    pi = total_power(schedule_inference(iso, cfg, 10**6), cfg, calibrated,
                     "infer")
    assert pi.total_w > pt.total_w
    # the gap comes from the per-row readout chain
    assert pi.adc_w > pt.adc_w
    assert pi.tia_w > pt.tia_w


def test_bad_mode_rejected(device):
    stats = ScheduleStats(0, 0, 0, 0, 0, 0, 0, 0, 0.0)
    with pytest.raises(ParameterError):
        total_power(stats, AcceleratorConfig(rows=2, cols=2), device, "bogus")


def test_edp_improves_with_unit_size(calibrated):
    # while the workload keeps a larger unit busy, latency falls faster
    # than power rises
    iso = _wl("ISOLET", "traditional")

    def edp(rows, cols):
        cfg = AcceleratorConfig(rows=rows, cols=cols, units=1, f_ghz=5.0,
                                pds_per_dac=8)
        stats = schedule_training(iso, cfg)
        power = total_power(stats, cfg, calibrated, "train").total_w
        return power * stats.wall_latency_s ** 2

    assert edp(128, 76) < edp(64, 38) < edp(32, 19)
