"""Enumeration, exhaustive verification and theorem decision tables."""
from .enumerate import enumerate_gabai_graphs
from .scenarios import Scenario, check_surgery_inequality, scenario_report
from .verify import VerificationReport, verify_lambda_cycle_existence, verify_scharlemann_existence
from .connectivity import ConnectivityFamily, verify_connectivity_dichotomy
