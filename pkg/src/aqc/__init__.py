"""Exact enumeration of permutations by their adjacent q-cycles.

An adjacent q-cycle of a permutation of ``{1..n}`` is a cycle of the form
``(a, a+1, ..., a+q-1)``.  The submodules give several independent routes to
the resulting counts:

* :mod:`aqc.counts` closed forms, recurrences and the multi-length formula;
* :mod:`aqc.oracle` brute-force enumeration of S_n;
* :mod:`aqc.series` exact power series and the generating-function ODEs;
* :mod:`aqc.permanent` permanents of marked polynomial matrices;
* :mod:`aqc.verify` and :mod:`aqc.cli` tie them together.
"""

from .counts import (
    CountTable, aqc_row, binomial, column_step, count_aqc, count_aqc_recurrence,
    count_aqc_rencontres, count_free, count_multi, count_one_aqc_relation,
    count_table, factorial, free_bounds, free_recurrence, free_sequence,
    multi_distribution, recurrence_table, restricted_derangements,
)
from .errors import AqcError, ConsistencyError, EnumerationLimitError
from .oracle import (
    count_adjacent_cycles, cycle_decomposition, is_adjacent_cycle,
    oracle_distribution, oracle_multi,
)
from .permanent import (
    build_marked_matrix, build_marked_matrix_multi, collapse, generating_polynomial,
    multi_generating_polynomial, rencontres_polynomial,
)
from .poly import MPoly
from .series import RatSeries, egf_series, ogf_series, verify_egf_ode, verify_ogf_ode, w_series

__version__ = "0.1.0"
