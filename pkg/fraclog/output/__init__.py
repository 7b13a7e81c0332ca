"""Ordered CSV output, run bookkeeping and the parallel check runner."""

from fraclog.output.runner import Check, evaluate_all
from fraclog.output.tally import TallyState, VerificationTally
from fraclog.output.writer import ReportWriter

__all__ = ["Check", "ReportWriter", "TallyState", "VerificationTally", "evaluate_all"]
