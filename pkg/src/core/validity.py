"""模型有效范围检查"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..exceptions import ValidityRangeError

logger = logging.getLogger(__name__)

# 参数名 -> 命令行选项
FIELD_FLAGS = {
    "frequency_mhz": "--freq-mhz",
    "distance_km": "--distance-km",
    "bts_height_m": "--bts-height-m",
    "ms_height_m": "--ms-height-m",
}


@dataclass(frozen=True)
class Window:
    """有效区间

    Attributes:
        lo: 下界
        hi: 上界
        unit: 单位
        lo_open: 下界是否为开区间
        hi_open: 上界是否为开区间
    """
    lo: float
    hi: float
    unit: str
    lo_open: bool = False
    hi_open: bool = False

    def contains(self, value: float) -> bool:
        above = value > self.lo if self.lo_open else value >= self.lo
        below = value < self.hi if self.hi_open else value <= self.hi
        return above and below

    def clamp(self, value: float) -> float:
        return min(max(value, self.lo), self.hi)

    def describe(self) -> str:
        left = "(" if self.lo_open else "["
        if math.isinf(self.hi):
            return f"{left}{self.lo:g}, ∞) {self.unit}"
        right = ")" if self.hi_open else "]"
        return f"{left}{self.lo:g}, {self.hi:g}{right} {self.unit}"


def validate_range(value: float, window: Window) -> Tuple[bool, str]:
    """验证参数是否在有效区间内

    Args:
        value: 参数值
        window: 有效区间

    Returns:
        (是否有效, 错误信息)
    """
    if window.contains(value):
        return True, ""
    return False, f"{value:g} 不在 {window.describe()} 内"


def enforce_range(model: str, field: str, value: float, window: Window,
                  permissive: bool, flags: Optional[List[str]],
                  marker: str = "out-of-range") -> bool:
    """严格模式下越界即抛出异常，宽松模式下记录标记

    Args:
        model: 模型名
        field: 参数名
        value: 参数值
        window: 有效区间
        permissive: 是否宽松模式
        flags: 标记收集列表
        marker: 宽松模式标记后缀

    Returns:
        参数是否在区间内

    Raises:
        ValidityRangeError: 严格模式下参数越界
    """
    valid, _ = validate_range(value, window)
    if valid:
        return True
    if not permissive:
        raise ValidityRangeError(model, field, value, window.describe(),
                                 FIELD_FLAGS.get(field, ""))
    flag = f"{model}.{field}:{marker}"
    logger.warning(f"{model}: {field}={value:g} 超出 {window.describe()}，宽松模式标记 {flag}")
    if flags is not None and flag not in flags:
        flags.append(flag)
    return False
