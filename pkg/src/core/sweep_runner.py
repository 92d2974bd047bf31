"""参数扫描执行器"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from ..exceptions import SweepRangeError, SweepSpecError, ValidityRangeError
from ..models.lee_parameters import LeeParameters
from ..models.okumura_curves import OkumuraCurves
from ..models.radio_link import PathLossDb, PathLossModel
from ..models.sweep import SweepResult, SweepSpec
from .evaluator import ModelContext, evaluate

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[int, int], None]


@dataclass
class PointOutcome:
    """单个扫描点的计算结果"""
    index: int
    x: float
    losses: Dict[PathLossModel, PathLossDb] = field(default_factory=dict)
    violations: List[Tuple[str, float, str]] = field(default_factory=list)


class SweepRunner:
    """扫描执行器，按扫描点并发计算

    各扫描点互不依赖，结果按下标组装，输出与顺序执行一致。
    """

    MAX_WORKERS = 5  # 最大并发数

    def __init__(self, max_workers: int = 5,
                 progress: Optional[ProgressCallback] = None):
        """初始化执行器

        Args:
            max_workers: 最大并发数 (最大为5)，1 表示顺序执行
            progress: 进度回调 (已完成点数, 总点数)
        """
        self._max_workers = max(1, min(max_workers, self.MAX_WORKERS))
        self._progress = progress

    def _evaluate_point(self, index: int, x: float, spec: SweepSpec,
                        context: ModelContext) -> PointOutcome:
        """计算单个扫描点上全部模型的损耗"""
        outcome = PointOutcome(index=index, x=x)
        link = spec.link_at(x)
        for model in spec.ordered_models:
            try:
                outcome.losses[model] = evaluate(model, link, context, spec.permissive)
            except ValidityRangeError as e:
                outcome.violations.append((model.value, x, str(e)))
        return outcome

    def run(self, spec: SweepSpec, curves: OkumuraCurves,
            lee_params: Optional[LeeParameters] = None) -> SweepResult:
        """执行扫描

        Args:
            spec: 扫描描述
            curves: Okumura 曲线表
            lee_params: Lee 标称参数

        Returns:
            扫描结果

        Raises:
            SweepSpecError: 扫描描述无效
            SweepRangeError: 严格模式下存在越界点（列出全部越界点）
        """
        valid, error = spec.validate()
        if not valid:
            raise SweepSpecError(error)

        context = ModelContext(
            curves=curves,
            env=spec.env,
            lee_params=lee_params or LeeParameters(),
            lee_overrides=spec.lee_overrides,
        )
        axis = spec.axis_values()
        total = len(axis)
        logger.debug(f"扫描 {spec.vary.value}: {total} 个点, 模型 "
                     f"{[m.value for m in spec.ordered_models]}, 并发 {self._max_workers}")

        outcomes: List[Optional[PointOutcome]] = [None] * total
        if self._max_workers == 1:
            for i, x in enumerate(axis):
                outcomes[i] = self._evaluate_point(i, x, spec, context)
                self._report(i + 1, total)
        else:
            with ThreadPoolExecutor(max_workers=self._max_workers) as executor:
                futures = [executor.submit(self._evaluate_point, i, x, spec, context)
                           for i, x in enumerate(axis)]
                for done, future in enumerate(futures, start=1):
                    outcome = future.result()
                    outcomes[outcome.index] = outcome
                    self._report(done, total)

        violations = [v for outcome in outcomes for v in outcome.violations]
        if violations:
            raise SweepRangeError(violations)

        series = {
            model: tuple(outcome.losses[model] for outcome in outcomes)
            for model in spec.ordered_models
        }
        flags = tuple(
            tuple(sorted({flag for loss in outcome.losses.values() for flag in loss.flags}))
            for outcome in outcomes
        )
        return SweepResult(spec=spec, axis=tuple(axis), series=series, flags=flags)

    def _report(self, done: int, total: int) -> None:
        if self._progress is not None:
            self._progress(done, total)


def run_sweep(spec: SweepSpec, curves: OkumuraCurves,
              lee_params: Optional[LeeParameters] = None,
              max_workers: int = SweepRunner.MAX_WORKERS) -> SweepResult:
    """执行参数扫描，见 SweepRunner.run"""
    return SweepRunner(max_workers=max_workers).run(spec, curves, lee_params)
