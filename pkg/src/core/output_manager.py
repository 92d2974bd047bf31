"""输出管理模块：CSV / JSON 序列化与文件写入"""
import csv
import io
import json
import logging
import os
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..exceptions import OutputError
from ..models.output_record import SCHEMA_VERSION, OutputRecord
from ..models.sweep import SweepResult

logger = logging.getLogger(__name__)

# CSV 中损耗保留两位小数，扫描变量保留三位
LOSS_DECIMALS = 2
AXIS_DECIMALS = 3

SCENARIO_COLUMNS = ("frequency_mhz", "distance_km", "bts_height_m", "ms_height_m")


def _csv_text(rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def format_loss(value_db: float) -> str:
    return f"{value_db:.{LOSS_DECIMALS}f}"


def sweep_to_csv(result: SweepResult) -> str:
    """扫描结果转 CSV：表头 <扫描变量>,<模型>...，每个扫描点一行"""
    models = result.models
    rows: List[List[str]] = [[result.spec.vary.link_field] + [m.value for m in models]]
    for i, x in enumerate(result.axis):
        rows.append([f"{x:.{AXIS_DECIMALS}f}"]
                    + [format_loss(result.series[m][i].value_db) for m in models])
    return _csv_text(rows)


def records_to_csv(records: Sequence[OutputRecord]) -> str:
    """输出记录转 CSV（单点计算 / 覆盖半径）"""
    with_radius = any(r.radius_km is not None for r in records)
    header = ["model"] + list(SCENARIO_COLUMNS) + ["value_db"]
    if with_radius:
        header.append("radius_km")
    header.append("flags")
    rows: List[List[str]] = [header]
    for record in records:
        row = [record.model]
        row += [repr(record.scenario[c]) if c in record.scenario else "" for c in SCENARIO_COLUMNS]
        row.append(format_loss(record.value_db))
        if with_radius:
            row.append("" if record.radius_km is None else f"{record.radius_km:.{AXIS_DECIMALS}f}")
        row.append(";".join(record.flags))
        rows.append(row)
    return _csv_text(rows)


def records_to_json(records: Sequence[OutputRecord],
                    extra: Optional[Dict[str, Any]] = None) -> str:
    """输出记录转 JSON：顶层对象含 schema_version 与 records 数组（保留完整精度）"""
    document: Dict[str, Any] = {"schema_version": SCHEMA_VERSION}
    if extra:
        document.update(extra)
    document["records"] = [r.to_dict() for r in records]
    return json.dumps(document, ensure_ascii=False, indent=2) + "\n"


def records_from_json(text: str) -> Tuple[int, List[OutputRecord]]:
    """解析 records_to_json 的输出

    Returns:
        (schema_version, 记录列表)
    """
    document = json.loads(text)
    return document["schema_version"], [OutputRecord.from_dict(r) for r in document["records"]]


def validate_output_dir(output_dir: str) -> Tuple[bool, str]:
    """验证输出目录

    Args:
        output_dir: 输出目录路径

    Returns:
        (是否有效, 错误信息)
    """
    if not output_dir:
        return False, "输出目录不能为空"

    # 如果目录不存在，尝试创建
    if not os.path.exists(output_dir):
        try:
            os.makedirs(output_dir, exist_ok=True)
        except PermissionError:
            return False, "没有权限创建输出目录"
        except OSError as e:
            return False, f"无法创建输出目录: {e}"

    if not os.path.isdir(output_dir):
        return False, "输出路径不是目录"

    if not os.access(output_dir, os.W_OK):
        return False, "没有写入权限"

    return True, ""


def write_output(text: str, output_path: str) -> None:
    """写入输出文件，必要时创建目录

    Raises:
        OutputError: 目录无效或写入失败
    """
    output_dir = os.path.dirname(os.path.abspath(output_path))
    valid, error = validate_output_dir(output_dir)
    if not valid:
        raise OutputError(output_path, error)
    try:
        with open(output_path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as e:
        raise OutputError(output_path, str(e))
    logger.info(f"已写入 {output_path}")
