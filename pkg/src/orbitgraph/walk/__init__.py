from .trend import TrendReport, classify_trend
from .criteria import (CutsetReport, GrowthReport, PairedSumReport,
                       average_to_step, growth_criterion, nash_williams,
                       verify_cutsets)
from .simulate import ReturnStats, decay_exponent, simulate_srw
from .resistance import ResistanceReport, effective_resistance

__all__ = [
    "TrendReport", "classify_trend",
    "CutsetReport", "GrowthReport", "PairedSumReport", "average_to_step",
    "growth_criterion", "nash_williams", "verify_cutsets",
    "ReturnStats", "decay_exponent", "simulate_srw",
    "ResistanceReport", "effective_resistance",
]
