"""Independent reference computations and the differential test suites."""

from .reference import oracle_p_symbol, theta_map
from .suites import SuiteReport, run_suite, suite_names

__all__ = ["SuiteReport", "oracle_p_symbol", "run_suite", "suite_names", "theta_map"]
