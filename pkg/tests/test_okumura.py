"""Okumura 模型测试"""
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.core.curve_loader import get_embedded_curves
from src.core.free_space import free_space_loss
from src.core.okumura import amu, bts_height_gain, ms_height_gain, okumura_loss
from src.exceptions import ValidityRangeError
from src.models import Environment, RadioLink


def _link(**changes):
    base = RadioLink(frequency_mhz=900.0, distance_km=1.0, bts_height_m=100.0, ms_height_m=3.0)
    return base.with_(**changes)


class TestAmu:

    def test_exact_at_every_node(self, curves):
        for i, f in enumerate(curves.frequencies_mhz):
            for j, d in enumerate(curves.distances_km):
                assert amu(curves, f, d) == curves.amu_db[i][j]

    def test_log_midpoint_is_mean(self, curves):
        d = math.sqrt(10.0 * 20.0)
        expected = (curves.node_value(900.0, 10.0) + curves.node_value(900.0, 20.0)) / 2
        assert amu(curves, 900.0, d) == pytest.approx(expected, abs=1e-9)

    def test_log_midpoint_in_frequency(self, curves):
        f = math.sqrt(600.0 * 900.0)
        expected = (curves.node_value(600.0, 5.0) + curves.node_value(900.0, 5.0)) / 2
        assert amu(curves, f, 5.0) == pytest.approx(expected, abs=1e-9)

    def test_grows_with_distance(self, curves):
        assert amu(curves, 900.0, 50.0) > amu(curves, 900.0, 5.0)

    @given(st.floats(min_value=150.0, max_value=1920.0), st.floats(min_value=1.0, max_value=100.0))
    def test_bounded_by_cell_corners(self, f, d):
        curves = get_embedded_curves()
        i = min(int(np.searchsorted(curves.frequency_grid, f, side="right")) - 1,
                len(curves.frequencies_mhz) - 2)
        j = min(int(np.searchsorted(curves.distance_grid, d, side="right")) - 1,
                len(curves.distances_km) - 2)
        corners = curves.amu_matrix[i:i + 2, j:j + 2]
        value = amu(curves, f, d)
        assert corners.min() - 1e-9 <= value <= corners.max() + 1e-9

    @pytest.mark.parametrize("f, d", [(100.0, 10.0), (2000.0, 10.0), (900.0, 0.5), (900.0, 150.0)])
    def test_strict_range(self, curves, f, d):
        with pytest.raises(ValidityRangeError):
            amu(curves, f, d)

    def test_permissive_clamps_and_flags(self, curves):
        flags = []
        value = amu(curves, 900.0, 0.5, permissive=True, flags=flags)
        assert value == curves.node_value(900.0, 1.0)
        assert flags == ["okumura.distance_km:clamped"]


class TestHeightGains:

    @pytest.mark.parametrize("h, expected", [(100.0, -6.02), (30.48, -16.34), (50.0, -12.04)])
    def test_bts_gain(self, h, expected):
        assert bts_height_gain(h) == pytest.approx(expected, abs=0.01)

    @pytest.mark.parametrize("h", [30.0, 100.5, 20.0])
    def test_bts_gain_strict_window(self, h):
        with pytest.raises(ValidityRangeError) as exc:
            bts_height_gain(h)
        assert exc.value.field == "bts_height_m"
        assert exc.value.flag == "--bts-height-m"

    def test_bts_gain_permissive_reference_height(self):
        flags = []
        assert bts_height_gain(200.0, permissive=True, flags=flags) == 0.0
        assert flags == ["okumura.bts_height_m:out-of-range"]

    def test_bts_gain_above_1000m_rejected_even_permissive(self):
        with pytest.raises(ValidityRangeError):
            bts_height_gain(1500.0, permissive=True, flags=[])

    @pytest.mark.parametrize("h, expected", [(3.0, 0.0), (1.5, -3.01), (5.0, 4.44)])
    def test_ms_gain(self, h, expected):
        assert ms_height_gain(h) == pytest.approx(expected, abs=0.01)

    def test_ms_gain_continuous_at_3m(self):
        assert ms_height_gain(3.0) == 0.0
        assert ms_height_gain(3.0 + 1e-9) == pytest.approx(0.0, abs=1e-7)

    def test_ms_gain_strict_upper_bound(self):
        with pytest.raises(ValidityRangeError):
            ms_height_gain(10.0)

    def test_ms_gain_permissive_uses_upper_branch(self):
        flags = []
        assert ms_height_gain(12.0, permissive=True, flags=flags) == pytest.approx(20 * math.log10(4.0))
        assert flags == ["okumura.ms_height_m:out-of-range"]


class TestOkumuraLoss:

    def test_composed_fixture_value(self, flat_curves):
        loss = okumura_loss(_link(), Environment.SUBURBAN, flat_curves)
        assert loss.value_db == pytest.approx(131.55, abs=0.01)
        assert loss.flags == ()

    def test_default_table_urban(self, curves):
        # 91.53 + 20.8 + 6.02
        assert okumura_loss(_link(), Environment.URBAN, curves).value_db == pytest.approx(118.35, abs=0.01)

    def test_ms_height_3_to_5_lowers_loss(self, curves):
        low = okumura_loss(_link(), Environment.URBAN, curves).value_db
        high = okumura_loss(_link(ms_height_m=5.0), Environment.URBAN, curves).value_db
        assert low - high == pytest.approx(20 * math.log10(5 / 3), abs=1e-9)

    def test_environment_order(self, curves):
        values = {env: okumura_loss(_link(), env, curves).value_db for env in Environment}
        assert values[Environment.URBAN] >= values[Environment.SUBURBAN] >= values[Environment.OPEN]

    def test_excess_over_free_space_is_level_independent(self, curves):
        link = _link(distance_km=7.0, bts_height_m=45.0, ms_height_m=2.0)
        excess = okumura_loss(link, Environment.URBAN, curves).value_db - free_space_loss(link).value_db
        expected = (amu(curves, 900.0, 7.0) - bts_height_gain(45.0) - ms_height_gain(2.0))
        assert excess == pytest.approx(expected, abs=1e-9)

    def test_strictly_increasing_in_distance(self, curves):
        distances = np.geomspace(1.0, 100.0, 200)
        values = [okumura_loss(_link(distance_km=float(d)), Environment.URBAN, curves).value_db
                  for d in distances]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_non_increasing_in_heights(self, curves):
        bts = [okumura_loss(_link(bts_height_m=float(h)), Environment.URBAN, curves).value_db
               for h in np.linspace(31.0, 99.0, 60)]
        ms = [okumura_loss(_link(ms_height_m=float(h)), Environment.URBAN, curves).value_db
              for h in np.linspace(0.5, 9.9, 60)]
        assert all(b <= a for a, b in zip(bts, bts[1:]))
        assert all(b <= a for a, b in zip(ms, ms[1:]))

    def test_range_error_names_distance(self, curves):
        with pytest.raises(ValidityRangeError) as exc:
            okumura_loss(_link(distance_km=0.5), Environment.URBAN, curves)
        assert exc.value.field == "distance_km"
        assert "[1, 100] km" in str(exc.value)
        assert "--distance-km" in str(exc.value)

    def test_permissive_collects_all_flags(self, curves):
        link = _link(distance_km=0.5, bts_height_m=150.0)
        loss = okumura_loss(link, Environment.URBAN, curves, permissive=True)
        assert loss.flags == ("okumura.distance_km:clamped", "okumura.bts_height_m:out-of-range")
        assert loss.flagged
