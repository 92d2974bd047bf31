"""参数扫描数据模型"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

import numpy as np

from .lee_parameters import LeeOverrides
from .radio_link import Environment, PathLossDb, PathLossModel, RadioLink

# 比较时的规范模型顺序
CANONICAL_MODELS: Tuple[PathLossModel, ...] = (
    PathLossModel.OKUMURA,
    PathLossModel.HATA,
    PathLossModel.LEE,
)


class SweepAxis(Enum):
    """扫描变量"""
    BTS_HEIGHT = "bts_height"
    MS_HEIGHT = "ms_height"
    DISTANCE = "distance"

    @property
    def link_field(self) -> str:
        """对应 RadioLink 的字段名（带单位）"""
        return {
            SweepAxis.BTS_HEIGHT: "bts_height_m",
            SweepAxis.MS_HEIGHT: "ms_height_m",
            SweepAxis.DISTANCE: "distance_km",
        }[self]


class Spacing(Enum):
    """扫描点间隔方式"""
    LINEAR = "linear"
    LOG = "log"


@dataclass(frozen=True)
class SweepSpec:
    """扫描描述

    Attributes:
        vary: 扫描变量
        start: 起点（扫描变量的单位）
        stop: 终点
        steps: 采样点数 (>= 2)
        base: 固定参数所在的链路
        models: 参与的模型
        env: Okumura 环境类别
        lee_overrides: Lee 场景覆盖值
        spacing: 间隔方式（对数间隔仅用于距离）
        permissive: 宽松模式
    """
    vary: SweepAxis
    start: float
    stop: float
    steps: int
    base: RadioLink
    models: Tuple[PathLossModel, ...] = CANONICAL_MODELS
    env: Environment = Environment.URBAN
    lee_overrides: LeeOverrides = field(default_factory=LeeOverrides)
    spacing: Spacing = Spacing.LINEAR
    permissive: bool = False

    def validate(self) -> Tuple[bool, str]:
        """验证扫描描述

        Returns:
            (是否有效, 错误信息)
        """
        if not self.start < self.stop:
            return False, f"起点必须小于终点: from={self.start:g}, to={self.stop:g}"
        if self.start <= 0:
            return False, f"起点必须为正数: from={self.start:g}"
        if self.steps < 2:
            return False, f"采样点数至少为 2: steps={self.steps}"
        if not self.models:
            return False, "至少选择一个模型"
        for model in self.models:
            if model not in CANONICAL_MODELS:
                return False, f"扫描不支持模型 {model.value}"
        if len(set(self.models)) != len(self.models):
            return False, "模型重复"
        if self.spacing is Spacing.LOG and self.vary is not SweepAxis.DISTANCE:
            return False, "对数间隔仅适用于距离扫描"
        return True, ""

    @property
    def ordered_models(self) -> Tuple[PathLossModel, ...]:
        """按规范顺序排列的模型"""
        return tuple(m for m in CANONICAL_MODELS if m in self.models)

    def axis_values(self) -> List[float]:
        """生成扫描点（两端点精确等于 start/stop）"""
        if self.spacing is Spacing.LOG:
            values = np.geomspace(self.start, self.stop, self.steps)
        else:
            values = np.linspace(self.start, self.stop, self.steps)
        values[0] = self.start
        values[-1] = self.stop
        return [float(v) for v in values]

    def link_at(self, x: float) -> RadioLink:
        return self.base.with_(**{self.vary.link_field: x})


@dataclass(frozen=True)
class SweepResult:
    """扫描结果

    Attributes:
        spec: 扫描描述
        axis: 扫描点
        series: 各模型的损耗序列，与 axis 对齐
        flags: 各点的宽松模式标记（已加模型前缀）
    """
    spec: SweepSpec
    axis: Tuple[float, ...]
    series: Dict[PathLossModel, Tuple[PathLossDb, ...]]
    flags: Tuple[Tuple[str, ...], ...]

    @property
    def models(self) -> Tuple[PathLossModel, ...]:
        return tuple(m for m in CANONICAL_MODELS if m in self.series)

    def values(self, model: PathLossModel) -> List[float]:
        return [loss.value_db for loss in self.series[model]]


@dataclass(frozen=True)
class Crossover:
    """两条曲线在相邻扫描点之间交换大小"""
    upper_before: PathLossModel
    upper_after: PathLossModel
    start: float
    end: float

    def describe(self) -> str:
        return (f"{self.upper_before.value}/{self.upper_after.value} "
                f"在 [{self.start:g}, {self.end:g}] 之间交叉")


@dataclass(frozen=True)
class OrderingReport:
    """各扫描点上的模型排序报告

    Attributes:
        vary: 扫描变量
        axis: 扫描点
        models: 参与比较的模型
        rankings: 每个点的排序字符串，如 "hata>lee>okumura"，并列用 "="
        ties: 每个点上并列的模型对
        crossovers: 全部交叉区间
    """
    vary: SweepAxis
    axis: Tuple[float, ...]
    models: Tuple[PathLossModel, ...]
    rankings: Tuple[str, ...]
    ties: Tuple[Tuple[Tuple[PathLossModel, PathLossModel], ...], ...]
    crossovers: Tuple[Crossover, ...]
    values: Dict[PathLossModel, Tuple[float, ...]] = field(default_factory=dict, compare=False)

    @property
    def consistent(self) -> bool:
        """整个扫描范围内排序是否唯一"""
        return len(set(self.rankings)) == 1

    @property
    def dominant_ordering(self) -> str:
        """出现次数最多的排序（次数相同时取先出现者）"""
        counts: Dict[str, int] = {}
        for ranking in self.rankings:
            counts[ranking] = counts.get(ranking, 0) + 1
        return max(counts, key=lambda r: (counts[r], -self.rankings.index(r)))

    @property
    def dominant_fraction(self) -> float:
        dominant = self.dominant_ordering
        return sum(1 for r in self.rankings if r == dominant) / len(self.rankings)

    def chain_fraction(self, order: Tuple[PathLossModel, ...], tol_db: float = 1e-9) -> float:
        """order[0] >= order[1] >= ... 成立的点所占比例"""
        hits = 0
        for i in range(len(self.axis)):
            column = [self.values[m][i] for m in order]
            if all(a >= b - tol_db for a, b in zip(column, column[1:])):
                hits += 1
        return hits / len(self.axis)

    def max_fraction(self, model: PathLossModel, tol_db: float = 1e-9) -> float:
        """model 损耗最大（允许并列）的点所占比例"""
        return self._extreme_fraction(model, tol_db, largest=True)

    def min_fraction(self, model: PathLossModel, tol_db: float = 1e-9) -> float:
        """model 损耗最小（允许并列）的点所占比例"""
        return self._extreme_fraction(model, tol_db, largest=False)

    def _extreme_fraction(self, model: PathLossModel, tol_db: float, largest: bool) -> float:
        hits = 0
        for i in range(len(self.axis)):
            own = self.values[model][i]
            others = [self.values[m][i] for m in self.models if m is not model]
            if largest and all(own >= o - tol_db for o in others):
                hits += 1
            elif not largest and all(own <= o + tol_db for o in others):
                hits += 1
        return hits / len(self.axis)


def format_order(order: Tuple[PathLossModel, ...]) -> str:
    return " ≥ ".join(m.value for m in order)


def parse_order(text: str) -> Tuple[PathLossModel, ...]:
    """解析 "lee,hata,okumura" 形式的排序"""
    return tuple(PathLossModel(part.strip()) for part in text.split(",") if part.strip())
