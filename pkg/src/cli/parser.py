"""命令行参数定义

所有带量纲的选项都在名称中写明单位（--freq-mhz、--distance-km ...）。
场景类选项默认 None，未给出时取 --preset 对应的值。
"""
import argparse
from typing import Tuple

from ..core.presets import FIGURE_PRESETS, LINK_PRESETS
from ..models.lee_parameters import Alpha4Mode
from ..models.radio_link import Environment, PathLossModel
from ..models.sweep import Spacing, SweepAxis, parse_order

PROG = "propagation-lab"

RADIUS_MODELS = (PathLossModel.OKUMURA, PathLossModel.HATA, PathLossModel.LEE)


def _model_list(text: str) -> Tuple[PathLossModel, ...]:
    try:
        models = parse_order(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"未知模型 {text!r}，可选: {', '.join(m.value for m in PathLossModel)}"
        )
    if not models:
        raise argparse.ArgumentTypeError("至少指定一个模型")
    return models


def _lee_k(text: str) -> object:
    if text == "auto":
        return text
    if text not in ("2", "3"):
        raise argparse.ArgumentTypeError("--lee-k 只能为 2、3 或 auto")
    return int(text)


def _add_scenario_args(parser: argparse.ArgumentParser, with_distance: bool = True) -> None:
    group = parser.add_argument_group("场景")
    group.add_argument("--freq-mhz", type=float, default=None, help="载波频率 (MHz)")
    if with_distance:
        group.add_argument("--distance-km", type=float, default=None, help="收发距离 (km)")
    group.add_argument("--bts-height-m", type=float, default=None, help="基站天线高度 (m)")
    group.add_argument("--ms-height-m", type=float, default=None, help="移动台天线高度 (m)")


def _add_model_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("模型选项")
    group.add_argument("--env", choices=[e.value for e in Environment], default=None,
                       help="Okumura 环境类别 (默认 urban，图表预设为 open)")
    group.add_argument("--curves", default=None,
                       help="Okumura 曲线文件 (默认取环境变量 PROPLAB_CURVES 或内置表)")
    group.add_argument("--permissive", action="store_true",
                       help="超出有效范围时仍计算并标记结果")

    lee = parser.add_argument_group("Lee 选项")
    lee.add_argument("--tx-power-w", type=float, default=None, help="发射功率 (W)，默认 10")
    lee.add_argument("--bts-gain-db", type=float, default=None, help="基站天线增益 (dB)，默认 6")
    lee.add_argument("--lee-k", type=_lee_k, default=None,
                     help="频率项系数 k: 2、3 或 auto (按频率与 --env 选择)")
    lee.add_argument("--lee-n", type=float, default=None, help="α5 指数 n，2 <= n <= 3")
    lee.add_argument("--alpha4-mode", choices=[m.value for m in Alpha4Mode], default=None,
                     help="α4 计算方式")

    log_distance = parser.add_argument_group("对数距离选项")
    log_distance.add_argument("--exponent", type=float, default=None, help="路径损耗指数 n，默认 2")
    log_distance.add_argument("--reference-distance-km", type=float, default=None,
                              help="参考距离 d0 (km)，默认 1")
    log_distance.add_argument("--reference-loss-db", type=float, default=None,
                              help="d0 处参考损耗 (dB)，默认为 d0 处自由空间损耗")


def _add_output_args(parser: argparse.ArgumentParser, formats: Tuple[str, ...]) -> None:
    group = parser.add_argument_group("输出")
    group.add_argument("--format", choices=formats, default=formats[0], help="输出格式")
    group.add_argument("--output", default=None, help="写入文件而不是标准输出")


def build_parser() -> argparse.ArgumentParser:
    """创建命令行解析器"""
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="大尺度无线传播路径损耗计算: free-space / log-distance / Okumura / Hata / Lee",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="日志详细程度 (-v INFO, -vv DEBUG)")
    subparsers = parser.add_subparsers(dest="command", metavar="<command>")
    subparsers.required = True

    compute = subparsers.add_parser("compute", help="计算单点路径损耗")
    compute.add_argument("--model", type=_model_list, required=True,
                         help="模型，逗号分隔: free-space,log-distance,okumura,hata,lee")
    compute.add_argument("--preset", choices=sorted(LINK_PRESETS), default="paper",
                         help="未给出的场景参数取自该预设")
    _add_scenario_args(compute)
    _add_model_args(compute)
    _add_output_args(compute, ("text", "csv", "json"))

    sweep = subparsers.add_parser("sweep", help="参数扫描与模型比较")
    sweep.add_argument("--preset", choices=sorted(LINK_PRESETS) + sorted(FIGURE_PRESETS),
                       default="paper", help="场景预设或图表预设 (paper-fig1 .. paper-fig12)")
    sweep.add_argument("--vary", choices=[a.value for a in SweepAxis], default=None,
                       help="扫描变量")
    sweep.add_argument("--from", dest="start", type=float, default=None, help="扫描起点")
    sweep.add_argument("--to", dest="stop", type=float, default=None, help="扫描终点")
    sweep.add_argument("--steps", type=int, default=None, help="采样点数 (>= 2)")
    sweep.add_argument("--models", type=_model_list, default=None,
                       help="参与扫描的模型，逗号分隔 (okumura,hata,lee)")
    sweep.add_argument("--spacing", choices=[s.value for s in Spacing], default=None,
                       help="扫描点间隔方式")
    sweep.add_argument("--check-ordering", action="store_true",
                       help="输出各点模型损耗排序报告")
    sweep.add_argument("--claimed-order", type=_model_list, default=None,
                       help="待检验的排序（大到小），如 lee,hata,okumura")
    sweep.add_argument("--workers", type=int, default=None, help="并发数 (1-5)")
    _add_scenario_args(sweep)
    _add_model_args(sweep)
    _add_output_args(sweep, ("csv", "json"))

    radius = subparsers.add_parser("radius", help="由链路预算求最大覆盖半径")
    radius.add_argument("--model", choices=[m.value for m in RADIUS_MODELS], required=True,
                        help="模型")
    radius.add_argument("--preset", choices=sorted(LINK_PRESETS), default="paper",
                        help="未给出的场景参数取自该预设")
    budget = radius.add_argument_group("链路预算 (给出 --max-loss-db，或 --tx-power-dbm 与 --rx-sensitivity-dbm)")
    budget.add_argument("--max-loss-db", type=float, default=None, help="最大允许路径损耗 (dB)")
    budget.add_argument("--tx-power-dbm", type=float, default=None, help="发射功率 (dBm)")
    budget.add_argument("--rx-sensitivity-dbm", type=float, default=None, help="接收灵敏度 (dBm)")
    budget.add_argument("--tx-gain-db", type=float, default=0.0, help="发射天线增益 (dB)")
    budget.add_argument("--rx-gain-db", type=float, default=0.0, help="接收天线增益 (dB)")
    budget.add_argument("--misc-loss-db", type=float, default=0.0, help="其他损耗 (dB)")
    _add_scenario_args(radius, with_distance=False)
    _add_model_args(radius)
    _add_output_args(radius, ("text", "csv", "json"))

    curves = subparsers.add_parser("curves", help="Okumura 曲线文件工具")
    curves_sub = curves.add_subparsers(dest="curves_command", metavar="<action>")
    curves_sub.required = True
    validate = curves_sub.add_parser("validate", help="检查曲线文件")
    validate.add_argument("file", help="曲线文件")
    export = curves_sub.add_parser("export", help="导出当前使用的曲线表")
    export.add_argument("--curves", default=None, help="曲线文件 (默认内置表)")
    export.add_argument("--output", default=None, help="写入文件而不是标准输出")

    return parser
