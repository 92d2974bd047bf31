"""应用入口"""
import logging
import sys
from typing import Callable, Dict, List, Optional

from .cli import EXIT_NO_COVERAGE, EXIT_RANGE, EXIT_USAGE
from .cli.commands import cmd_compute, cmd_curves, cmd_radius, cmd_sweep
from .cli.parser import PROG, build_parser
from .exceptions import (
    NoCoverageError,
    PropagationError,
    SweepRangeError,
    ValidityRangeError,
)

logger = logging.getLogger(__name__)

COMMANDS: Dict[str, Callable[..., int]] = {
    "compute": cmd_compute,
    "sweep": cmd_sweep,
    "radius": cmd_radius,
    "curves": cmd_curves,
}


def configure_logging(verbosity: int) -> None:
    """日志输出到标准错误，标准输出只用于数据"""
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """主函数

    Args:
        argv: 命令行参数，默认 sys.argv[1:]

    Returns:
        退出码
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    configure_logging(args.verbose)

    try:
        return COMMANDS[args.command](args)
    except (ValidityRangeError, SweepRangeError) as e:
        code = EXIT_RANGE
        message = str(e)
    except NoCoverageError as e:
        code = EXIT_NO_COVERAGE
        message = str(e)
    except PropagationError as e:
        code = EXIT_USAGE
        message = str(e)
    except OSError as e:
        code = EXIT_USAGE
        message = f"无法读取文件: {e}"

    logger.debug(f"{args.command} 失败，退出码 {code}")
    print(f"{PROG}: 错误: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
