"""参数扫描测试"""
from dataclasses import replace

import pytest

from src.core.evaluator import ModelContext, evaluate
from src.core.presets import AXIS_RANGES, FIGURE_PRESETS, REFERENCE_SCENARIO, figure_preset
from src.core.sweep_runner import SweepRunner, run_sweep
from src.exceptions import SweepRangeError, SweepSpecError
from src.models import (
    CANONICAL_MODELS,
    PathLossModel,
    RadioLink,
    Spacing,
    SweepAxis,
    SweepSpec,
)

HATA_BASE = RadioLink(frequency_mhz=900.0, distance_km=1.0, bts_height_m=30.0, ms_height_m=3.0)


def _spec(**changes):
    spec = SweepSpec(vary=SweepAxis.DISTANCE, start=1.0, stop=10.0, steps=2,
                     base=HATA_BASE, models=(PathLossModel.HATA,))
    return replace(spec, **changes)


class TestSweepSpec:

    def test_linear_axis_endpoints_exact(self):
        axis = _spec(start=1.0, stop=20.0, steps=77).axis_values()
        assert len(axis) == 77
        assert axis[0] == 1.0 and axis[-1] == 20.0

    def test_log_axis(self):
        axis = _spec(start=1.0, stop=100.0, steps=3, spacing=Spacing.LOG).axis_values()
        assert axis == pytest.approx([1.0, 10.0, 100.0])
        assert axis[-1] == 100.0

    @pytest.mark.parametrize("changes", [
        {"start": 10.0, "stop": 1.0},
        {"start": 0.0},
        {"steps": 1},
        {"models": ()},
        {"models": (PathLossModel.FREE_SPACE,)},
        {"models": (PathLossModel.HATA, PathLossModel.HATA)},
        {"vary": SweepAxis.BTS_HEIGHT, "start": 31.0, "stop": 99.0, "spacing": Spacing.LOG},
    ])
    def test_invalid_spec(self, curves, changes):
        spec = _spec(**changes)
        assert spec.validate()[0] is False
        with pytest.raises(SweepSpecError):
            run_sweep(spec, curves)

    def test_ordered_models_are_canonical(self):
        spec = _spec(models=(PathLossModel.LEE, PathLossModel.OKUMURA))
        assert spec.ordered_models == (PathLossModel.OKUMURA, PathLossModel.LEE)

    def test_link_at(self):
        assert _spec(vary=SweepAxis.MS_HEIGHT).link_at(5.0) == HATA_BASE.with_(ms_height_m=5.0)


class TestRunSweep:

    def test_hata_distance_oracle(self, curves):
        result = run_sweep(_spec(), curves)
        assert result.axis == (1.0, 10.0)
        assert result.values(PathLossModel.HATA) == pytest.approx([123.73, 158.95], abs=0.01)
        assert result.flags == ((), ())

    @pytest.mark.parametrize("spacing", [Spacing.LINEAR, Spacing.LOG])
    def test_refinement_keeps_endpoints(self, curves, spacing):
        base = HATA_BASE.with_(bts_height_m=50.0)
        coarse = run_sweep(_spec(steps=2, spacing=spacing, base=base, models=CANONICAL_MODELS), curves)
        fine = run_sweep(_spec(steps=37, spacing=spacing, base=base, models=CANONICAL_MODELS), curves)
        assert (fine.axis[0], fine.axis[-1]) == coarse.axis
        for model in CANONICAL_MODELS:
            assert coarse.series[model][0] == fine.series[model][0]
            assert coarse.series[model][-1] == fine.series[model][-1]

    @pytest.mark.parametrize("model", [PathLossModel.OKUMURA, PathLossModel.HATA, PathLossModel.LEE])
    def test_single_model_equals_pointwise(self, curves, model):
        spec = _spec(steps=9, models=(model,), base=HATA_BASE.with_(bts_height_m=50.0))
        result = run_sweep(spec, curves)
        context = ModelContext(curves=curves, env=spec.env, lee_overrides=spec.lee_overrides)
        expected = [evaluate(model, spec.link_at(x), context) for x in result.axis]
        assert list(result.series[model]) == expected

    def test_parallel_equals_sequential(self, curves):
        spec = figure_preset("paper-fig12").spec
        sequential = SweepRunner(max_workers=1).run(spec, curves)
        parallel = SweepRunner(max_workers=5).run(spec, curves)
        assert parallel == sequential

    def test_max_workers_capped(self):
        assert SweepRunner(max_workers=64)._max_workers == SweepRunner.MAX_WORKERS

    def test_progress_callback(self, curves):
        calls = []
        SweepRunner(max_workers=3, progress=lambda done, total: calls.append((done, total))).run(
            _spec(start=1.0, stop=10.0, steps=7), curves)
        assert len(calls) == 7
        assert calls[-1] == (7, 7)

    def test_strict_sweep_lists_every_violation(self, curves):
        spec = _spec(start=0.25, stop=1.0, steps=4,
                     models=(PathLossModel.OKUMURA, PathLossModel.HATA),
                     base=HATA_BASE.with_(bts_height_m=50.0))
        with pytest.raises(SweepRangeError) as exc:
            run_sweep(spec, curves)
        violations = exc.value.violations
        assert len(violations) == 6
        assert {model for model, _, _ in violations} == {"okumura", "hata"}
        assert sorted({x for _, x, _ in violations}) == [0.25, 0.5, 0.75]

    def test_permissive_sweep_flags_points(self, curves):
        spec = _spec(start=0.5, stop=1.0, steps=2, permissive=True)
        result = run_sweep(spec, curves)
        assert result.flags == (("hata.distance_km:out-of-range",), ())
        assert result.series[PathLossModel.HATA][0].flagged


class TestFigureProperties:
    """图表预设下各模型随参数的变化趋势"""

    @pytest.mark.parametrize("name", ["paper-fig10", "paper-fig11"])
    def test_non_increasing_in_heights(self, curves, name):
        result = run_sweep(FIGURE_PRESETS[name].spec, curves)
        assert len(result.axis) >= 50
        for model in CANONICAL_MODELS:
            values = result.values(model)
            assert all(b <= a for a, b in zip(values, values[1:])), model

    def test_strictly_increasing_in_distance(self, curves):
        result = run_sweep(FIGURE_PRESETS["paper-fig12"].spec, curves)
        assert len(result.axis) >= 50
        for model in CANONICAL_MODELS:
            values = result.values(model)
            assert all(b > a for a, b in zip(values, values[1:])), model

    def test_single_model_presets(self):
        for number in range(1, 10):
            preset = FIGURE_PRESETS[f"paper-fig{number}"]
            assert len(preset.spec.models) == 1
            assert preset.claimed_order is None
            assert preset.spec.base == REFERENCE_SCENARIO

    def test_comparison_presets_use_axis_ranges(self):
        for name in ("paper-fig10", "paper-fig11", "paper-fig12"):
            spec = FIGURE_PRESETS[name].spec
            assert (spec.start, spec.stop, spec.steps) == AXIS_RANGES[spec.vary]
            assert spec.models == CANONICAL_MODELS

    def test_preset_override(self):
        preset = figure_preset("paper-fig12", steps=5)
        assert preset.spec.steps == 5
        assert FIGURE_PRESETS["paper-fig12"].spec.steps == 77
