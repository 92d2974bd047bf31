"""Hata 模型测试"""
import math

import pytest

from src.core.hata import SCOPE, distance_slope, hata_loss, mobile_correction
from src.exceptions import ValidityRangeError


class TestMobileCorrection:

    def test_large_city_above_300mhz(self):
        assert mobile_correction(3.0, 900.0) == pytest.approx(2.69, abs=0.01)

    def test_large_city_below_300mhz(self):
        assert mobile_correction(1.5, 200.0) == pytest.approx(-0.004, abs=0.001)

    def test_branch_at_300mhz_uses_upper_formula(self):
        assert mobile_correction(3.0, 300.0) == mobile_correction(3.0, 900.0)

    def test_branches_discontinuous(self):
        assert mobile_correction(3.0, 299.999) == pytest.approx(2.56, abs=0.01)
        assert mobile_correction(3.0, 300.0) - mobile_correction(3.0, 299.999) > 0.1

    @pytest.mark.parametrize("h", [0.5, 12.0])
    def test_ms_height_window(self, h):
        with pytest.raises(ValidityRangeError) as exc:
            mobile_correction(h, 900.0)
        assert exc.value.flag == "--ms-height-m"


class TestHataLoss:

    def test_1km_oracle(self, hata_link):
        assert hata_loss(hata_link).value_db == pytest.approx(123.73, abs=0.01)

    def test_2km_oracle(self, hata_link):
        assert hata_loss(hata_link.with_(distance_km=2.0)).value_db == pytest.approx(134.33, abs=0.01)

    def test_10km_adds_one_decade_slope(self, hata_link):
        near = hata_loss(hata_link).value_db
        far = hata_loss(hata_link.with_(distance_km=10.0)).value_db
        assert far - near == pytest.approx(distance_slope(30.0), abs=1e-9)
        assert far == pytest.approx(158.95, abs=0.01)

    def test_slope(self):
        assert distance_slope(30.0) == pytest.approx(44.9 - 6.55 * math.log10(30.0))

    def test_strictly_increasing_in_distance(self, hata_link):
        values = [hata_loss(hata_link.with_(distance_km=1.0 + 0.25 * i)).value_db for i in range(80)]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_non_increasing_in_heights(self, hata_link):
        bts = [hata_loss(hata_link.with_(bts_height_m=30.0 + 2.0 * i)).value_db for i in range(80)]
        ms = [hata_loss(hata_link.with_(ms_height_m=1.0 + 0.1 * i)).value_db for i in range(90)]
        assert all(b <= a for a, b in zip(bts, bts[1:]))
        assert all(b <= a for a, b in zip(ms, ms[1:]))

    @pytest.mark.parametrize("changes, field", [
        ({"frequency_mhz": 2000.0}, "frequency_mhz"),
        ({"bts_height_m": 25.0}, "bts_height_m"),
        ({"distance_km": 0.5}, "distance_km"),
    ])
    def test_strict_scope(self, hata_link, changes, field):
        with pytest.raises(ValidityRangeError) as exc:
            hata_loss(hata_link.with_(**changes))
        assert exc.value.field == field
        assert exc.value.model == "hata"

    def test_permissive_computes_and_flags(self, hata_link):
        strict = hata_loss(hata_link.with_(distance_km=1.0))
        loss = hata_loss(hata_link.with_(distance_km=0.5), permissive=True)
        assert loss.flags == ("hata.distance_km:out-of-range",)
        assert loss.value_db == pytest.approx(strict.value_db - distance_slope(30.0) * math.log10(2.0))

    def test_no_upper_distance_limit(self, hata_link):
        assert hata_loss(hata_link.with_(distance_km=50.0)).flags == ()

    def test_scope(self):
        assert SCOPE.city_size == "large"
        assert SCOPE.frequency.contains(150.0) and SCOPE.frequency.contains(1500.0)
        assert SCOPE.planning_max_distance_km == 20.0
