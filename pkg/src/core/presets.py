"""场景与图表复现预设

各图的固定参数和坐标范围取值如下:
f = 900 MHz，高度扫描时 d = 5 km，距离扫描时 h_te = 30.48 m、h_re = 3 m（Lee 标称值）。
扫描范围取三个模型严格有效范围的交集。Okumura 在比较图中使用开阔地 G_AREA。
"""
from dataclasses import dataclass, replace
from typing import Dict, Optional, Tuple

from ..models.radio_link import Environment, PathLossModel, RadioLink
from ..models.sweep import CANONICAL_MODELS, SweepAxis, SweepSpec

REFERENCE_SCENARIO = RadioLink(frequency_mhz=900.0, distance_km=5.0,
                               bts_height_m=30.48, ms_height_m=3.0)
NOMINAL_SCENARIO = REFERENCE_SCENARIO.with_(distance_km=1.6)

LINK_PRESETS: Dict[str, RadioLink] = {
    "paper": REFERENCE_SCENARIO,
    "nominal": NOMINAL_SCENARIO,
}

COMPARISON_ENVIRONMENT = Environment.OPEN

# (起点, 终点, 点数)
AXIS_RANGES: Dict[SweepAxis, Tuple[float, float, int]] = {
    SweepAxis.BTS_HEIGHT: (31.0, 99.0, 69),
    SweepAxis.MS_HEIGHT: (1.0, 9.9, 90),
    SweepAxis.DISTANCE: (1.0, 20.0, 77),
}


@dataclass(frozen=True)
class FigurePreset:
    """图表复现预设

    Attributes:
        name: 预设名
        title: 图题
        spec: 扫描描述
        claimed_order: 待检验的损耗排序（大到小），单模型图为 None
    """
    name: str
    title: str
    spec: SweepSpec
    claimed_order: Optional[Tuple[PathLossModel, ...]] = None


def _spec(vary: SweepAxis, models: Tuple[PathLossModel, ...]) -> SweepSpec:
    start, stop, steps = AXIS_RANGES[vary]
    return SweepSpec(vary=vary, start=start, stop=stop, steps=steps,
                     base=REFERENCE_SCENARIO, models=models, env=COMPARISON_ENVIRONMENT)


_AXIS_TITLES = {
    SweepAxis.BTS_HEIGHT: "BTS antenna height",
    SweepAxis.MS_HEIGHT: "MS antenna height",
    SweepAxis.DISTANCE: "T-R separation",
}


def _build_presets() -> Dict[str, FigurePreset]:
    presets: Dict[str, FigurePreset] = {}
    number = 1
    for model in CANONICAL_MODELS:
        for vary in (SweepAxis.BTS_HEIGHT, SweepAxis.MS_HEIGHT, SweepAxis.DISTANCE):
            name = f"paper-fig{number}"
            presets[name] = FigurePreset(
                name=name,
                title=f"{model.value}: path loss vs {_AXIS_TITLES[vary]}",
                spec=_spec(vary, (model,)),
            )
            number += 1

    hata, lee, okumura = PathLossModel.HATA, PathLossModel.LEE, PathLossModel.OKUMURA
    claims = {
        SweepAxis.BTS_HEIGHT: (hata, lee, okumura),
        SweepAxis.MS_HEIGHT: (lee, hata, okumura),
        SweepAxis.DISTANCE: (lee, hata, okumura),
    }
    for vary in (SweepAxis.BTS_HEIGHT, SweepAxis.MS_HEIGHT, SweepAxis.DISTANCE):
        name = f"paper-fig{number}"
        presets[name] = FigurePreset(
            name=name,
            title=f"comparison: path loss vs {_AXIS_TITLES[vary]}",
            spec=_spec(vary, CANONICAL_MODELS),
            claimed_order=claims[vary],
        )
        number += 1
    return presets


FIGURE_PRESETS: Dict[str, FigurePreset] = _build_presets()


def figure_preset(name: str, **overrides) -> FigurePreset:
    """获取图表预设，可覆盖 SweepSpec 字段

    Raises:
        KeyError: 未知预设名
    """
    preset = FIGURE_PRESETS[name]
    if overrides:
        preset = replace(preset, spec=replace(preset.spec, **overrides))
    return preset
