"""子命令实现

每个 cmd_* 接收解析后的参数，写出结果并返回退出码；
错误以异常形式抛出，由 main 统一转换为退出码。
"""
import logging
import sys
from dataclasses import replace
from typing import Any, Dict, List, Optional, Tuple

from ..core.curve_loader import (
    DEFAULT_CURVES_PATH,
    get_default_curves,
    load_curves_file,
    serialize_curves,
)
from ..core.evaluator import ModelContext, evaluate
from ..core.lee import select_k
from ..core.ordering import compare_orderings, format_report, report_summary
from ..core.output_manager import (
    format_loss,
    records_to_csv,
    records_to_json,
    sweep_to_csv,
    write_output,
)
from ..core.presets import AXIS_RANGES, FIGURE_PRESETS, LINK_PRESETS
from ..core.radius import max_allowable_loss, max_radius
from ..core.sweep_runner import SweepRunner
from ..core.validity import FIELD_FLAGS
from ..exceptions import DomainError
from ..models.lee_parameters import Alpha4Mode, LeeOverrides, LeeParameters
from ..models.okumura_curves import OkumuraCurves
from ..models.output_record import OutputRecord
from ..models.radio_link import (
    Environment,
    LogDistanceParams,
    PathLossDb,
    PathLossModel,
    RadioLink,
)
from ..models.sweep import CANONICAL_MODELS, Spacing, SweepAxis, SweepResult, SweepSpec
from . import EXIT_OK

logger = logging.getLogger(__name__)

# 场景回显字段 -> compute 选项
ECHO_FLAGS: Dict[str, str] = dict(FIELD_FLAGS, **{
    "env": "--env",
    "curves": "--curves",
    "tx_power_w": "--tx-power-w",
    "bts_gain_db": "--bts-gain-db",
    "lee_k": "--lee-k",
    "lee_n": "--lee-n",
    "alpha4_mode": "--alpha4-mode",
    "exponent": "--exponent",
    "reference_distance_km": "--reference-distance-km",
    "reference_loss_db": "--reference-loss-db",
})


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        write_output(text, output)
    else:
        sys.stdout.write(text)


def _resolve_link(args, base: RadioLink) -> RadioLink:
    """命令行给出的场景参数覆盖预设"""
    changes: Dict[str, float] = {}
    for dest, field_name in (("freq_mhz", "frequency_mhz"), ("distance_km", "distance_km"),
                             ("bts_height_m", "bts_height_m"), ("ms_height_m", "ms_height_m")):
        value = getattr(args, dest, None)
        if value is not None:
            changes[field_name] = value
    return base.with_(**changes) if changes else base


def _environment(args, default: Environment = Environment.URBAN) -> Environment:
    return Environment(args.env) if args.env else default


def _lee_params(args) -> LeeParameters:
    params = LeeParameters()
    changes: Dict[str, Any] = {}
    if args.lee_n is not None:
        changes["alpha5_exponent"] = args.lee_n
    if args.alpha4_mode is not None:
        changes["alpha4_mode"] = Alpha4Mode(args.alpha4_mode)
    return replace(params, **changes) if changes else params


def _lee_overrides(args, frequency_mhz: float, env: Environment) -> LeeOverrides:
    k = args.lee_k
    if k == "auto":
        k = select_k(frequency_mhz, env)
    return LeeOverrides(tx_power_w=args.tx_power_w, bts_gain_db=args.bts_gain_db, environment_k=k)


def _log_distance(args) -> LogDistanceParams:
    params = LogDistanceParams()
    changes: Dict[str, float] = {}
    if args.exponent is not None:
        changes["exponent"] = args.exponent
    if args.reference_distance_km is not None:
        changes["reference_distance_km"] = args.reference_distance_km
    return replace(params, **changes) if changes else params


def _context(args, link: RadioLink, env: Environment,
             curves: Optional[OkumuraCurves]) -> ModelContext:
    return ModelContext(
        curves=curves,
        env=env,
        lee_params=_lee_params(args),
        lee_overrides=_lee_overrides(args, link.frequency_mhz, env),
        log_distance=_log_distance(args),
        reference_loss_db=args.reference_loss_db,
    )


def scenario_echo(model: PathLossModel, link: RadioLink, context: ModelContext,
                  permissive: bool) -> Dict[str, Any]:
    """回显重现 value_db 所需的全部输入

    Args:
        model: 模型
        link: 链路
        context: 模型附加参数
        permissive: 宽松模式

    Returns:
        场景字典，键见 ECHO_FLAGS
    """
    echo: Dict[str, Any] = link.to_dict()
    if model is PathLossModel.OKUMURA:
        echo["env"] = context.env.value
        if context.curves is not None and context.curves.source != DEFAULT_CURVES_PATH:
            echo["curves"] = context.curves.source
    elif model is PathLossModel.LEE:
        scenario = context.lee_overrides.scenario(link, context.lee_params)
        echo.update({
            "tx_power_w": scenario.tx_power_w,
            "bts_gain_db": scenario.bts_gain_db,
            "lee_k": scenario.k(context.lee_params),
            "lee_n": context.lee_params.alpha5_exponent,
            "alpha4_mode": context.lee_params.alpha4_mode.value,
        })
    elif model is PathLossModel.LOG_DISTANCE:
        echo["exponent"] = context.log_distance.exponent
        echo["reference_distance_km"] = context.log_distance.reference_distance_km
        if context.reference_loss_db is not None:
            echo["reference_loss_db"] = context.reference_loss_db
    if permissive and model in (PathLossModel.OKUMURA, PathLossModel.HATA):
        echo["permissive"] = True
    return echo


def replay_argv(record: OutputRecord) -> List[str]:
    """由输出记录还原 compute 命令行参数"""
    argv = ["compute", "--model", record.model]
    for key, value in record.scenario.items():
        if key == "permissive":
            if value:
                argv.append("--permissive")
            continue
        argv.append(ECHO_FLAGS[key])
        argv.append(repr(value) if isinstance(value, float) else str(value))
    return argv


def _record(model: PathLossModel, loss: PathLossDb, scenario: Dict[str, Any]) -> OutputRecord:
    return OutputRecord(scenario=scenario, model=model.value, value_db=loss.value_db,
                        flags=loss.flags)


def _flag_suffix(flags: Tuple[str, ...]) -> str:
    return f"  [{', '.join(flags)}]" if flags else ""


def _load_curves(args) -> OkumuraCurves:
    return get_default_curves(args.curves)


def cmd_compute(args) -> int:
    """compute: 每个模型输出一条记录"""
    link = _resolve_link(args, LINK_PRESETS[args.preset])
    env = _environment(args)
    curves = _load_curves(args) if PathLossModel.OKUMURA in args.model else None
    context = _context(args, link, env, curves)

    records = []
    for model in args.model:
        loss = evaluate(model, link, context, args.permissive)
        records.append(_record(model, loss, scenario_echo(model, link, context, args.permissive)))

    if args.format == "json":
        text = records_to_json(records)
    elif args.format == "csv":
        text = records_to_csv(records)
    else:
        text = "".join(f"{r.model}: {format_loss(r.value_db)} dB{_flag_suffix(r.flags)}\n"
                       for r in records)
    _emit(text, args.output)
    return EXIT_OK


def _sweep_spec(args) -> Tuple[SweepSpec, Optional[Tuple[PathLossModel, ...]]]:
    """由预设和命令行选项组装扫描描述

    Returns:
        (扫描描述, 待检验排序)
    """
    figure = FIGURE_PRESETS.get(args.preset)
    if figure is not None:
        spec, claimed = figure.spec, figure.claimed_order
    else:
        if args.vary is None:
            raise DomainError("vary", None, "未使用图表预设时必须给出 --vary")
        vary = SweepAxis(args.vary)
        start, stop, steps = AXIS_RANGES[vary]
        spec = SweepSpec(vary=vary, start=start, stop=stop, steps=steps,
                         base=LINK_PRESETS[args.preset], models=CANONICAL_MODELS)
        claimed = None

    vary = SweepAxis(args.vary) if args.vary else spec.vary
    base = _resolve_link(args, spec.base)
    env = _environment(args, spec.env)
    changes: Dict[str, Any] = {
        "vary": vary,
        "base": base,
        "env": env,
        "lee_overrides": _lee_overrides(args, base.frequency_mhz, env),
        "permissive": args.permissive,
    }
    if vary is not spec.vary:
        changes["start"], changes["stop"], changes["steps"] = AXIS_RANGES[vary]
    for dest in ("start", "stop", "steps"):
        if getattr(args, dest) is not None:
            changes[dest] = getattr(args, dest)
    if args.models is not None:
        changes["models"] = args.models
    if args.spacing is not None:
        changes["spacing"] = Spacing(args.spacing)
    if args.claimed_order is not None:
        claimed = args.claimed_order
    return replace(spec, **changes), claimed


def sweep_records(result: SweepResult, lee_params: LeeParameters,
                  curves: Optional[OkumuraCurves] = None) -> List[OutputRecord]:
    """扫描结果展开为输出记录（每个扫描点、每个模型一条）"""
    spec = result.spec
    context = ModelContext(curves=curves, env=spec.env, lee_params=lee_params,
                           lee_overrides=spec.lee_overrides)
    records = []
    for i, x in enumerate(result.axis):
        link = spec.link_at(x)
        for model in result.models:
            scenario = scenario_echo(model, link, context, spec.permissive)
            records.append(_record(model, result.series[model][i], scenario))
    return records


def cmd_sweep(args) -> int:
    """sweep: CSV / JSON 扫描数据，可附排序报告

    使用 --check-ordering 时报告写到标准输出，扫描数据仅在给出 --output 时写出。
    """
    spec, claimed = _sweep_spec(args)
    curves = _load_curves(args)
    lee_params = _lee_params(args)
    runner = SweepRunner(max_workers=args.workers or SweepRunner.MAX_WORKERS)
    result = runner.run(spec, curves, lee_params)

    report = compare_orderings(result) if args.check_ordering else None
    if args.format == "json":
        extra: Dict[str, Any] = {
            "sweep": {
                "vary": spec.vary.value,
                "field": spec.vary.link_field,
                "spacing": spec.spacing.value,
                "models": [m.value for m in result.models],
                "axis": list(result.axis),
            },
        }
        if report is not None:
            extra["ordering"] = report_summary(report, claimed)
        data = records_to_json(sweep_records(result, lee_params, curves), extra)
    else:
        data = sweep_to_csv(result)

    if report is None:
        _emit(data, args.output)
    else:
        if args.output:
            write_output(data, args.output)
        sys.stdout.write(format_report(report, claimed) + "\n")
    return EXIT_OK


def _budget(args) -> float:
    if args.max_loss_db is not None:
        if args.tx_power_dbm is not None or args.rx_sensitivity_dbm is not None:
            raise DomainError("max_loss_db", args.max_loss_db,
                              "--max-loss-db 不能与 --tx-power-dbm/--rx-sensitivity-dbm 同时使用")
        return args.max_loss_db
    if args.tx_power_dbm is None or args.rx_sensitivity_dbm is None:
        raise DomainError("max_loss_db", None,
                          "需要 --max-loss-db，或同时给出 --tx-power-dbm 与 --rx-sensitivity-dbm")
    budget = max_allowable_loss(args.tx_power_dbm, args.rx_sensitivity_dbm,
                                args.tx_gain_db, args.rx_gain_db, args.misc_loss_db)
    logger.info(f"链路预算允许的最大路径损耗 {budget:.2f} dB")
    return budget


def cmd_radius(args) -> int:
    """radius: 最大覆盖半径"""
    model = PathLossModel(args.model)
    budget = _budget(args)
    link = _resolve_link(args, LINK_PRESETS[args.preset])
    env = _environment(args)
    curves = _load_curves(args) if model is PathLossModel.OKUMURA else None
    context = _context(args, link, env, curves)

    result = max_radius(model, link, budget, context, args.permissive)
    at_radius = link.with_(distance_km=result.distance_km)
    record = OutputRecord(
        scenario=scenario_echo(model, at_radius, context, args.permissive),
        model=model.value,
        value_db=result.loss_db,
        flags=result.flags,
        radius_km=result.distance_km,
        extra={"max_loss_db": budget},
    )

    if args.format == "json":
        text = records_to_json([record])
    elif args.format == "csv":
        text = records_to_csv([record])
    else:
        text = (f"{model.value}: radius {result.distance_km:.2f} km "
                f"(loss {format_loss(result.loss_db)} dB, budget {format_loss(budget)} dB)"
                f"{_flag_suffix(record.flags)}\n")
    _emit(text, args.output)
    return EXIT_OK


def cmd_curves(args) -> int:
    """curves validate / export"""
    if args.curves_command == "validate":
        curves = load_curves_file(args.file)
        sys.stdout.write(f"{args.file}: ok ({len(curves.frequencies_mhz)} frequencies x "
                         f"{len(curves.distances_km)} distances)\n")
        return EXIT_OK
    _emit(serialize_curves(get_default_curves(args.curves)), args.output)
    return EXIT_OK
