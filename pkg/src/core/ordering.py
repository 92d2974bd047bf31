"""跨模型损耗排序比较"""
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from ..exceptions import SweepSpecError
from ..models.radio_link import PathLossModel
from ..models.sweep import Crossover, OrderingReport, SweepResult, format_order

# 差值不超过该值视为并列 (dB)
TIE_TOLERANCE_DB = 1e-9


def _rank_point(values: Dict[PathLossModel, float], models: Tuple[PathLossModel, ...],
                tol_db: float) -> str:
    """单点排序字符串，损耗从大到小，并列用 '='"""
    ordered = sorted(models, key=lambda m: (-values[m], models.index(m)))
    parts = [ordered[0].value]
    for prev, cur in zip(ordered, ordered[1:]):
        parts.append("=" if abs(values[prev] - values[cur]) <= tol_db else ">")
        parts.append(cur.value)
    return "".join(parts)


def compare_orderings(result: SweepResult, tol_db: float = TIE_TOLERANCE_DB) -> OrderingReport:
    """比较各扫描点上的模型损耗排序

    Args:
        result: 扫描结果
        tol_db: 并列容差

    Returns:
        排序报告（各点排序、并列、交叉区间）

    Raises:
        SweepSpecError: 参与比较的模型少于 2 个
    """
    models = result.models
    if len(models) < 2:
        raise SweepSpecError(f"排序比较至少需要 2 个模型，当前为 {len(models)} 个")
    values = {m: tuple(result.values(m)) for m in models}
    axis = result.axis

    rankings: List[str] = []
    ties: List[Tuple[Tuple[PathLossModel, PathLossModel], ...]] = []
    for i in range(len(axis)):
        column = {m: values[m][i] for m in models}
        rankings.append(_rank_point(column, models, tol_db))
        ties.append(tuple(
            (a, b) for a, b in combinations(models, 2)
            if abs(column[a] - column[b]) <= tol_db
        ))

    crossovers: List[Crossover] = []
    for a, b in combinations(models, 2):
        last_sign = 0
        last_index = 0
        for i in range(len(axis)):
            diff = values[a][i] - values[b][i]
            sign = 0 if abs(diff) <= tol_db else (1 if diff > 0 else -1)
            if sign == 0:
                continue
            if last_sign and sign != last_sign:
                crossovers.append(Crossover(
                    upper_before=a if last_sign > 0 else b,
                    upper_after=a if sign > 0 else b,
                    start=axis[last_index],
                    end=axis[i],
                ))
            last_sign = sign
            last_index = i

    crossovers.sort(key=lambda c: (c.start, c.end))
    return OrderingReport(
        vary=result.spec.vary,
        axis=axis,
        models=models,
        rankings=tuple(rankings),
        ties=tuple(ties),
        crossovers=tuple(crossovers),
        values=values,
    )


def format_report(report: OrderingReport,
                  claimed: Optional[Tuple[PathLossModel, ...]] = None) -> str:
    """生成排序报告文本"""
    n = len(report.axis)
    lines = [
        f"sweep: {report.vary.value} ({n} points, {report.axis[0]:g} .. {report.axis[-1]:g})",
        f"dominant ordering: {report.dominant_ordering} "
        f"({report.dominant_fraction:.1%} of points)",
        f"consistent: {'yes' if report.consistent else 'no'}",
    ]
    if claimed:
        fraction = report.chain_fraction(claimed)
        verdict = "yes" if fraction == 1.0 else ("mostly" if fraction >= 0.9 else "no")
        lines.append(f"{format_order(claimed)}? {verdict} ({fraction:.1%} of points)")
    for model in report.models:
        lines.append(f"  {model.value}: max at {report.max_fraction(model):.1%}, "
                     f"min at {report.min_fraction(model):.1%}")
    tie_points = sum(1 for t in report.ties if t)
    if tie_points:
        lines.append(f"ties: {tie_points} points")
    if report.crossovers:
        lines.append("crossovers: " + "; ".join(c.describe() for c in report.crossovers))
    else:
        lines.append("crossovers: none")
    return "\n".join(lines)


def report_summary(report: OrderingReport,
                   claimed: Optional[Tuple[PathLossModel, ...]] = None) -> Dict[str, object]:
    """报告摘要（用于 JSON 输出和回归比对）"""
    summary: Dict[str, object] = {
        "vary": report.vary.value,
        "points": len(report.axis),
        "dominant_ordering": report.dominant_ordering,
        "dominant_fraction": round(report.dominant_fraction, 4),
        "consistent": report.consistent,
        "max_fraction": {m.value: round(report.max_fraction(m), 4) for m in report.models},
        "min_fraction": {m.value: round(report.min_fraction(m), 4) for m in report.models},
        "crossovers": [
            {"upper_before": c.upper_before.value, "upper_after": c.upper_after.value,
             "start": c.start, "end": c.end}
            for c in report.crossovers
        ],
    }
    if claimed:
        summary["claimed_ordering"] = [m.value for m in claimed]
        summary["claimed_fraction"] = round(report.chain_fraction(claimed), 4)
    return summary
