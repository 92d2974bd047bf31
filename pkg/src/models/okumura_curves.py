"""Okumura 经验曲线表数据类"""
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Tuple

import numpy as np

from .radio_link import Environment


@dataclass(frozen=True)
class OkumuraCurves:
    """数字化的 Okumura 曲线

    Attributes:
        frequencies_mhz: 频率网格 (MHz)，严格递增
        distances_km: 距离网格 (km)，严格递增
        amu_db: 中值衰减 A_mu(f, d) (dB)，行对应频率、列对应距离
        garea_db: 各环境类别的环境增益 G_AREA (dB)
        source: 数据来源描述（仅用于日志）
    """
    frequencies_mhz: Tuple[float, ...]
    distances_km: Tuple[float, ...]
    amu_db: Tuple[Tuple[float, ...], ...]
    garea_db: Dict[Environment, float]
    source: str = field(default="<memory>", compare=False)

    def validate(self) -> Tuple[bool, str, str]:
        """验证曲线表是否满足约束

        Returns:
            (是否有效, 违反的约束名, 错误信息)
        """
        for name, grid in (("frequencies_mhz", self.frequencies_mhz),
                           ("distances_km", self.distances_km)):
            if len(grid) < 2:
                return False, "grid-size", f"{name} 至少需要 2 个网格点，实际 {len(grid)}"
            if not all(math.isfinite(v) and v > 0 for v in grid):
                return False, "grid-positive", f"{name} 必须全为有限正数"
            for lo, hi in zip(grid, grid[1:]):
                if not hi > lo:
                    return False, "grid-ascending", f"{name} 必须严格递增: {lo:g} -> {hi:g}"

        if len(self.amu_db) != len(self.frequencies_mhz):
            return False, "matrix-shape", (
                f"A_mu 行数 {len(self.amu_db)} 与频率网格长度 {len(self.frequencies_mhz)} 不符"
            )
        for f, row in zip(self.frequencies_mhz, self.amu_db):
            if len(row) != len(self.distances_km):
                return False, "matrix-shape", (
                    f"f={f:g} MHz 行有 {len(row)} 个值，距离网格长度 {len(self.distances_km)}"
                )
            for d, value in zip(self.distances_km, row):
                if not math.isfinite(value) or value < 0:
                    return False, "amu-nonnegative", f"A_mu({f:g} MHz, {d:g} km)={value} 必须为有限非负数"
            for (d0, v0), (d1, v1) in zip(zip(self.distances_km, row),
                                          zip(self.distances_km[1:], row[1:])):
                if v1 < v0:
                    return False, "amu-monotonic", (
                        f"f={f:g} MHz 时 A_mu 随距离减小: {d0:g} km {v0:g} dB -> {d1:g} km {v1:g} dB"
                    )

        for env in Environment:
            if env not in self.garea_db:
                return False, "garea-complete", f"缺少环境 {env.value} 的 G_AREA"
            if not math.isfinite(self.garea_db[env]):
                return False, "garea-finite", f"G_AREA[{env.value}] 必须为有限值"

        return True, "", ""

    @cached_property
    def frequency_grid(self) -> np.ndarray:
        return np.asarray(self.frequencies_mhz, dtype=float)

    @cached_property
    def distance_grid(self) -> np.ndarray:
        return np.asarray(self.distances_km, dtype=float)

    @cached_property
    def amu_matrix(self) -> np.ndarray:
        return np.asarray(self.amu_db, dtype=float)

    def garea(self, env: Environment) -> float:
        return self.garea_db[env]

    def node_value(self, frequency_mhz: float, distance_km: float) -> float:
        """返回网格节点上存储的原始值"""
        i = self.frequencies_mhz.index(frequency_mhz)
        j = self.distances_km.index(distance_km)
        return self.amu_db[i][j]
