import math

import pytest

from airpa import ConfigError, Scenario, distance, load_scenario, pathloss_gain
from airpa.scenario import dbm_to_watts, scenario_from_dict


class TestDistance:
    def test_identical_points(self):
        assert distance((0, 0, 0), (0, 0, 0)) == 0.0

    def test_bs_irs(self):
        # hand arithmetic: 200^2 + 35^2 = 41225
        assert distance((0, 0, 0), (200, 0, 35)) == pytest.approx(203.0394, abs=5e-5)

    def test_bs_user(self):
        # hand arithmetic: 100^2 + 50^2 = 12500
        assert distance((0, 0, 0), (100, 50, 0)) == pytest.approx(111.8034, abs=5e-5)


class TestPathloss:
    def test_reference_distance(self):
        assert pathloss_gain(1.0, 2.3) == pytest.approx(1e-3, rel=1e-12)
        assert pathloss_gain(1.0, 0.7) == pytest.approx(1e-3, rel=1e-12)

    def test_hand_value(self):
        assert pathloss_gain(100.0, 2.5) == pytest.approx(1e-8, rel=1e-12)

    def test_ratio_eliminates_reference(self):
        ratio = pathloss_gain(200.0, 2.3) / pathloss_gain(100.0, 2.3)
        assert ratio == pytest.approx(2.0 ** -2.3, rel=1e-12)

    def test_rejects_inside_reference(self):
        with pytest.raises(ConfigError):
            pathloss_gain(0.5, 2.3)

    def test_monotone_in_distance_and_exponent(self):
        ds = [1.0, 2.0, 5.0, 20.0, 100.0, 1000.0]
        gains = [pathloss_gain(d, 2.3) for d in ds]
        assert all(a > b for a, b in zip(gains, gains[1:]))
        alphas = [1.0, 1.5, 2.0, 2.5, 3.0]
        gains = [pathloss_gain(50.0, a) for a in alphas]
        assert all(a > b for a, b in zip(gains, gains[1:]))


class TestScenarioInvariants:
    def test_defaults_valid(self):
        s = Scenario()
        assert s.num_bs_antennas >= 1 and s.num_irs_elements >= 1
        assert s.total_power > 0

    @pytest.mark.parametrize("kwargs", [
        dict(num_bs_antennas=0),
        dict(num_irs_elements=0),
        dict(total_power=0.0),
        dict(total_power=-1.0),
        dict(irs_noise_power=0.0),
        dict(user_noise_power=-1e-13),
        dict(irs_position=(0.0, 0.0, 0.0)),       # coincides with the BS
        dict(bs_position=(100.0, 50.0, 0.0)),     # coincides with the user
    ])
    def test_rejects_invalid(self, kwargs):
        with pytest.raises(ConfigError):
            Scenario(**kwargs)

    def test_hash_stable_and_sensitive(self):
        assert Scenario().scenario_hash() == Scenario().scenario_hash()
        assert Scenario().scenario_hash() != Scenario(num_irs_elements=8).scenario_hash()


class TestConfigLoading:
    def test_yaml_roundtrip(self, tmp_path):
        cfg = tmp_path / "scen.yaml"
        cfg.write_text(
            "num_bs_antennas: 2\n"
            "num_irs_elements: 32\n"
            "total_power: 0.5\n"
            "irs_position: [150, 0, 20]\n",
            encoding="utf-8",
        )
        s = load_scenario(cfg)
        assert s.num_bs_antennas == 2
        assert s.num_irs_elements == 32
        assert s.total_power == 0.5
        assert s.irs_position == (150.0, 0.0, 20.0)

    def test_json_is_valid_yaml(self, tmp_path):
        cfg = tmp_path / "scen.json"
        cfg.write_text('{"num_irs_elements": 8}', encoding="utf-8")
        assert load_scenario(cfg).num_irs_elements == 8

    def test_dbm_alternates(self):
        s = scenario_from_dict({"total_power_dbm": 30.0,
                                "irs_noise_power_dbm": -100.0,
                                "user_noise_power_dbm": -100.0})
        assert s.total_power == pytest.approx(1.0, rel=1e-12)
        assert s.irs_noise_power == pytest.approx(1e-13, rel=1e-12)

    def test_dbm_conversion(self):
        assert dbm_to_watts(0.0) == pytest.approx(1e-3, rel=1e-12)
        assert dbm_to_watts(30.0) == pytest.approx(1.0, rel=1e-12)

    def test_both_forms_rejected(self):
        with pytest.raises(ConfigError):
            scenario_from_dict({"total_power": 1.0, "total_power_dbm": 30.0})

    def test_unknown_key_rejected(self):
        with pytest.raises(ConfigError):
            scenario_from_dict({"num_antennas": 4})

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_scenario(tmp_path / "nope.yaml")

    def test_malformed_yaml(self, tmp_path):
        cfg = tmp_path / "bad.yaml"
        cfg.write_text("num_irs_elements: [unclosed", encoding="utf-8")
        with pytest.raises(ConfigError):
            load_scenario(cfg)
