"""测试公共夹具"""
from typing import List, Tuple

import pytest

from src.core.curve_loader import get_embedded_curves, load_curves
from src.main import main
from src.models import RadioLink

# 常数 A_mu = 43 dB、郊区 G_AREA = 9 dB 的最小曲线表
FLAT_CURVES_CSV = """\
amu,1,100
150,43,43
1920,43,43
garea,urban,0
garea,suburban,9
garea,open,20
"""


@pytest.fixture
def curves():
    """内置曲线表"""
    return get_embedded_curves()


@pytest.fixture
def flat_curves():
    return load_curves(FLAT_CURVES_CSV, source_name="flat")


@pytest.fixture
def hata_link():
    """900 MHz, h_te 30 m, h_re 3 m, 1 km"""
    return RadioLink(frequency_mhz=900.0, distance_km=1.0, bts_height_m=30.0, ms_height_m=3.0)


@pytest.fixture
def run_cli(capsys):
    """在进程内执行命令行，返回 (退出码, 标准输出, 标准错误)"""
    def _run(argv: List[str]) -> Tuple[int, str, str]:
        code = main(argv)
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return _run
