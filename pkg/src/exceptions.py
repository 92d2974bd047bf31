"""自定义异常类"""
from typing import List, Sequence, Tuple


class PropagationError(Exception):
    """基础异常类"""
    pass


class DomainError(PropagationError):
    """参数定义域错误（非正数、非有限值等）"""
    def __init__(self, field: str, value: object, reason: str):
        self.field = field
        self.value = value
        self.reason = reason
        super().__init__(f"无效的参数 {field}={value}: {reason}")


class ValidityRangeError(PropagationError):
    """严格模式下参数超出模型有效范围"""
    def __init__(self, model: str, field: str, value: float,
                 valid: str, flag: str = ""):
        self.model = model
        self.field = field
        self.value = value
        self.valid = valid
        self.flag = flag
        hint = f"（{flag}）" if flag else ""
        super().__init__(
            f"{field}={value:g} 超出 {model} 模型有效范围 {valid}{hint}；"
            f"可使用 --permissive 放宽检查"
        )


class CurveParseError(PropagationError):
    """曲线文件解析错误"""
    def __init__(self, line_no: int, reason: str):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"曲线文件第 {line_no} 行解析失败: {reason}")


class CurveValidationError(PropagationError):
    """曲线表不满足约束"""
    def __init__(self, invariant: str, detail: str):
        self.invariant = invariant
        self.detail = detail
        super().__init__(f"曲线表违反约束 [{invariant}]: {detail}")


class SweepSpecError(PropagationError):
    """扫描参数描述错误"""
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"无效的扫描设置: {reason}")


class SweepRangeError(PropagationError):
    """扫描中出现的全部越界点

    violations 为 (模型, 扫描值, 错误信息) 列表，在全部点评估完成后一次性抛出。
    """
    def __init__(self, violations: Sequence[Tuple[str, float, str]]):
        self.violations: List[Tuple[str, float, str]] = list(violations)
        lines = [f"  {model} @ {x:g}: {msg}" for model, x, msg in self.violations]
        super().__init__(
            f"扫描中有 {len(self.violations)} 个点超出有效范围:\n" + "\n".join(lines)
        )


class NoCoverageError(PropagationError):
    """最小距离处的损耗已超过链路预算"""
    def __init__(self, model: str, min_distance_km: float,
                 loss_db: float, max_loss_db: float):
        self.model = model
        self.min_distance_km = min_distance_km
        self.loss_db = loss_db
        self.max_loss_db = max_loss_db
        super().__init__(
            f"{model} 无覆盖: d={min_distance_km:g} km 处损耗 {loss_db:.2f} dB "
            f"已超过预算 {max_loss_db:.2f} dB（--max-loss-db）"
        )


class OutputError(PropagationError):
    """输出错误"""
    def __init__(self, output_path: str, reason: str):
        self.output_path = output_path
        self.reason = reason
        super().__init__(f"输出失败 {output_path}: {reason}")
