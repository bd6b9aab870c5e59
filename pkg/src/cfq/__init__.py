"""Exact statistics of partial quotients of reduced fractions a/N."""

from .core import (ContinuedFraction, ReducedFraction, WeightFn, Window,
                   cf_digits, convergents_of, evaluate_digits, even_odd_sums,
                   expand, restricted_sum, stat_alt, stat_count, stat_max,
                   stat_sum)
from .dedekind import (dedekind_bh, dedekind_direct, dedekind_scaled,
                       reciprocity_check)
from .discrepancy import (DiscrepancyReport, PointSet, StepFn,
                          extreme_discrepancy, koksma_check,
                          reduced_fraction_discrepancy, star_discrepancy)
from .ensemble import (EnsembleSummary, StatSpec, TheoremConstants, constants,
                       digit_histogram, enumerate_coprime, euler_phi,
                       panov_mean_report, scan, thm_harness)
from .errors import CfqError
from .farey import bd_tail, enumerate_farey, hensley_tail, vardi_sample
from .reflect import reflect, reflect_lower, reflect_upper, verify_continuant_identity
from .search import ExtremalRecord, min_max_quotient, min_sum, zaremba_scan
from .weight import (IntervalQ, bijection_identity_check,
                     counting_identity_check, interval_I, interval_Iprime,
                     interval_left, row_sum, integral_row, weight_eval,
                     weight_hits, weight_step_pieces)

__version__ = "0.1.0"
