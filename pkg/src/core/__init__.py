"""核心计算模块"""
from .free_space import default_reference_loss, free_space_loss, log_distance_loss, wavelength_m
from .curve_loader import (
    get_default_curves,
    load_curves,
    load_curves_file,
    serialize_curves,
    validate_curves,
)
from .okumura import amu, bts_height_gain, ms_height_gain, okumura_loss
from .hata import SCOPE as HATA_SCOPE, HataScope, hata_loss, mobile_correction
from .lee import alpha_factors, lee_loss, select_k
from .evaluator import ModelContext, evaluate
from .sweep_runner import SweepRunner, run_sweep
from .ordering import compare_orderings, format_report
from .radius import RadiusResult, max_allowable_loss, max_radius
from .presets import FIGURE_PRESETS, LINK_PRESETS, figure_preset
from .output_manager import records_to_csv, records_to_json, sweep_to_csv, write_output
