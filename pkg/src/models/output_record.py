"""输出记录数据模型"""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

SCHEMA_VERSION = 1


@dataclass
class OutputRecord:
    """一条自描述的输出记录

    scenario 回显全部输入参数，用其重新执行 compute 可得到相同的 value_db。
    """
    scenario: Dict[str, Any]
    model: str
    value_db: float
    flags: Tuple[str, ...] = ()
    radius_km: Optional[float] = None
    schema_version: int = SCHEMA_VERSION
    extra: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """转换为 JSON 可序列化字典"""
        data: Dict[str, Any] = {
            "schema_version": self.schema_version,
            "model": self.model,
            "scenario": dict(self.scenario),
            "value_db": self.value_db,
            "flags": list(self.flags),
        }
        if self.radius_km is not None:
            data["radius_km"] = self.radius_km
        data.update(self.extra)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "OutputRecord":
        known = {"schema_version", "model", "scenario", "value_db", "flags", "radius_km"}
        return cls(
            scenario=dict(data["scenario"]),
            model=data["model"],
            value_db=data["value_db"],
            flags=tuple(data.get("flags", ())),
            radius_km=data.get("radius_km"),
            schema_version=data.get("schema_version", SCHEMA_VERSION),
            extra={k: v for k, v in data.items() if k not in known},
        )
