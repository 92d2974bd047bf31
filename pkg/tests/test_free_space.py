"""自由空间与对数距离模型测试"""
import math

import pytest
from hypothesis import given, strategies as st

from src.core.free_space import (
    default_reference_loss,
    free_space_loss,
    log_distance_loss,
    wavelength_m,
)
from src.exceptions import DomainError
from src.models import LogDistanceParams, PathLossDb, PathLossModel, RadioLink

frequencies = st.floats(min_value=30.0, max_value=6000.0)
distances = st.floats(min_value=0.01, max_value=500.0)


def _link(frequency_mhz=900.0, distance_km=1.0):
    return RadioLink(frequency_mhz=frequency_mhz, distance_km=distance_km,
                     bts_height_m=30.0, ms_height_m=3.0)


class TestFreeSpace:

    def test_900mhz_1km(self):
        loss = free_space_loss(_link())
        assert loss.value_db == pytest.approx(91.53, abs=0.01)
        assert loss.model is PathLossModel.FREE_SPACE
        assert loss.flags == ()

    def test_wavelength(self):
        assert wavelength_m(900.0) == pytest.approx(0.3331, abs=1e-4)

    @given(frequencies, distances)
    def test_distance_doubling_adds_6_0206_db(self, f, d):
        near = free_space_loss(_link(f, d)).value_db
        far = free_space_loss(_link(f, 2 * d)).value_db
        assert far - near == pytest.approx(20 * math.log10(2), abs=1e-9)

    @given(frequencies, distances)
    def test_frequency_doubling_adds_6_0206_db(self, f, d):
        low = free_space_loss(_link(f, d)).value_db
        high = free_space_loss(_link(2 * f, d)).value_db
        assert high - low == pytest.approx(20 * math.log10(2), abs=1e-9)

    @pytest.mark.parametrize("field", ["frequency_mhz", "distance_km", "bts_height_m", "ms_height_m"])
    @pytest.mark.parametrize("value", [0.0, -1.0, math.nan, math.inf])
    def test_invalid_link_rejected(self, field, value):
        kwargs = dict(frequency_mhz=900.0, distance_km=1.0, bts_height_m=30.0, ms_height_m=3.0)
        kwargs[field] = value
        with pytest.raises(DomainError) as exc:
            RadioLink(**kwargs)
        assert exc.value.field == field


class TestLogDistance:

    @given(frequencies, st.floats(min_value=1.0, max_value=500.0))
    def test_exponent_two_equals_free_space(self, f, d):
        link = _link(f, d)
        params = LogDistanceParams(exponent=2.0, reference_distance_km=1.0)
        loss = log_distance_loss(link, params, default_reference_loss(link, params))
        assert loss.value_db == pytest.approx(free_space_loss(link).value_db, abs=1e-9)
        assert loss.model is PathLossModel.LOG_DISTANCE

    def test_exponent_scales_slope(self):
        params = LogDistanceParams(exponent=3.5, reference_distance_km=1.0)
        reference = PathLossDb(100.0, PathLossModel.FREE_SPACE)
        loss = log_distance_loss(_link(distance_km=10.0), params, reference)
        assert loss.value_db == pytest.approx(135.0, abs=1e-9)

    def test_reference_distance_gives_reference_loss(self):
        params = LogDistanceParams.microcell(exponent=4.0)
        link = _link(distance_km=0.1)
        reference = default_reference_loss(link, params)
        assert reference.value_db == pytest.approx(71.53, abs=0.01)
        assert log_distance_loss(link, params, reference).value_db == reference.value_db

    def test_distance_below_reference_rejected(self):
        params = LogDistanceParams()
        link = _link(distance_km=0.5)
        with pytest.raises(DomainError) as exc:
            log_distance_loss(link, params, default_reference_loss(link, params))
        assert exc.value.field == "distance_km"

    @pytest.mark.parametrize("name, exponent", [
        ("free_space", 2.0), ("urban", 3.0), ("lossy", 4.0), ("indoor", 5.0), ("tunnel", 1.8),
    ])
    def test_environment_exponents(self, name, exponent):
        params = LogDistanceParams.for_environment(name)
        assert params.exponent == exponent
        assert params.reference_distance_km == 1.0

    def test_unknown_environment(self):
        with pytest.raises(DomainError):
            LogDistanceParams.for_environment("underwater")

    def test_non_positive_exponent_rejected(self):
        with pytest.raises(DomainError):
            LogDistanceParams(exponent=0.0)
