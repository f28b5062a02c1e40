from experiments.config import ExperimentConfig
from experiments.curves import reference_curve, reference_line, threshold_curve
from experiments.presets import PRESETS, build_config, parse_config_text
from experiments.report import emit_csv, emit_svg, read_csv, render_figure
from experiments.runner import PhaseGrid, run_cell, run_phase
