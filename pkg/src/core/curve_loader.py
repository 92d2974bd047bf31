"""Okumura 曲线文件的读取、校验与序列化

文件格式 (UTF-8 CSV):
    amu,<d_1>,<d_2>,...          距离 (km)，递增
    <f_MHz>,<A_mu>,...           每个频率一行，频率递增
    garea,<class>,<value_db>     每个环境类别一行
以 # 开头的行为注释。
"""
import csv
import logging
import os
from typing import Dict, List, Optional, Tuple

from ..exceptions import CurveParseError, CurveValidationError
from ..models.okumura_curves import OkumuraCurves
from ..models.radio_link import Environment

logger = logging.getLogger(__name__)

CURVES_ENV_VAR = "PROPLAB_CURVES"
DEFAULT_CURVES_PATH = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    "data", "okumura_default.csv",
)

# 内置曲线表缓存（单例）
_EMBEDDED_CURVES: Optional[OkumuraCurves] = None


def _parse_number(text: str, line_no: int, what: str) -> float:
    try:
        return float(text.strip())
    except ValueError:
        raise CurveParseError(line_no, f"{what} 不是合法数字: {text!r}（小数点须为 '.'）")


def load_curves(source: str, source_name: str = "<string>") -> OkumuraCurves:
    """解析曲线文件内容

    Args:
        source: 文件内容
        source_name: 来源名称（用于日志）

    Returns:
        校验通过的曲线表

    Raises:
        CurveParseError: 格式错误（带行号）
        CurveValidationError: 违反曲线表约束
    """
    distances: Optional[Tuple[float, ...]] = None
    frequencies: List[float] = []
    rows: List[Tuple[float, ...]] = []
    garea: Dict[Environment, float] = {}

    for line_no, cells in enumerate(csv.reader(source.splitlines()), start=1):
        cells = [c.strip() for c in cells]
        if not cells or not any(cells) or cells[0].startswith("#"):
            continue

        key = cells[0].lower()
        if distances is None:
            if key != "amu":
                raise CurveParseError(line_no, "第一条数据行必须以 'amu' 开头")
            distances = tuple(_parse_number(c, line_no, "距离") for c in cells[1:] if c)
            continue

        if key == "amu":
            raise CurveParseError(line_no, "重复的 'amu' 行")
        if key == "garea":
            if len(cells) != 3:
                raise CurveParseError(line_no, "garea 行格式应为 garea,<class>,<value_db>")
            try:
                env = Environment(cells[1].lower())
            except ValueError:
                supported = ", ".join(e.value for e in Environment)
                raise CurveParseError(line_no, f"未知环境类别 {cells[1]!r}，支持: {supported}")
            if env in garea:
                raise CurveParseError(line_no, f"环境 {env.value} 的 G_AREA 重复")
            garea[env] = _parse_number(cells[2], line_no, "G_AREA")
            continue

        frequencies.append(_parse_number(cells[0], line_no, "频率"))
        rows.append(tuple(_parse_number(c, line_no, "A_mu") for c in cells[1:]))

    if distances is None:
        raise CurveParseError(0, "缺少 'amu' 表头行")

    curves = OkumuraCurves(
        frequencies_mhz=tuple(frequencies),
        distances_km=distances,
        amu_db=tuple(rows),
        garea_db=garea,
        source=source_name,
    )
    ensure_valid(curves)
    logger.info(f"已加载曲线表 {source_name}: {len(frequencies)} 个频率 × {len(distances)} 个距离")
    return curves


def validate_curves(curves: OkumuraCurves) -> Tuple[bool, str]:
    """校验曲线表

    Returns:
        (是否有效, 错误信息)
    """
    valid, invariant, detail = curves.validate()
    if not valid:
        return False, f"[{invariant}] {detail}"
    return True, ""


def ensure_valid(curves: OkumuraCurves) -> None:
    """校验曲线表

    Raises:
        CurveValidationError: 违反约束
    """
    valid, invariant, detail = curves.validate()
    if not valid:
        raise CurveValidationError(invariant, detail)


def load_curves_file(path: str) -> OkumuraCurves:
    """读取曲线文件

    Raises:
        CurveParseError: 文件不是合法 UTF-8，或格式错误
        CurveValidationError: 违反曲线表约束
        OSError: 文件无法读取
    """
    with open(path, "rb") as f:
        data = f.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line_no = data.count(b"\n", 0, e.start) + 1
        raise CurveParseError(line_no, f"不是合法的 UTF-8 编码（字节偏移 {e.start}）")
    return load_curves(text, source_name=path)


def serialize_curves(curves: OkumuraCurves) -> str:
    """将曲线表序列化为曲线文件格式（与 load_curves 互逆）"""
    lines = [
        "# Okumura A_mu(f, d) dB; rows: frequency MHz, columns: distance km",
        ",".join(["amu"] + [repr(float(d)) for d in curves.distances_km]),
    ]
    for f, row in zip(curves.frequencies_mhz, curves.amu_db):
        lines.append(",".join([repr(float(f))] + [repr(float(v)) for v in row]))
    for env in Environment:
        if env in curves.garea_db:
            lines.append(f"garea,{env.value},{float(curves.garea_db[env])!r}")
    return "\n".join(lines) + "\n"


def get_embedded_curves() -> OkumuraCurves:
    """获取内置曲线表（单例）"""
    global _EMBEDDED_CURVES
    if _EMBEDDED_CURVES is None:
        _EMBEDDED_CURVES = load_curves_file(DEFAULT_CURVES_PATH)
    return _EMBEDDED_CURVES


def get_default_curves(path: Optional[str] = None) -> OkumuraCurves:
    """按优先级获取曲线表: 显式路径 > 环境变量 PROPLAB_CURVES > 内置表

    Args:
        path: 显式指定的曲线文件

    Returns:
        曲线表
    """
    if path:
        return load_curves_file(path)
    override = os.environ.get(CURVES_ENV_VAR)
    if override:
        logger.info(f"使用环境变量 {CURVES_ENV_VAR} 指定的曲线文件: {override}")
        return load_curves_file(override)
    return get_embedded_curves()
