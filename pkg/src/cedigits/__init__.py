"""Digit streams of generalized Copeland-Erdos numbers.

Build the stream of a concatenation number from any strictly increasing
integer sequence, with per-block repetition driven by an exact rational
multiplier, then measure digit frequencies and the iterated-logarithm
statistic and check them against exact closed forms.
"""

from .errors import CapExceededError, SequenceExhaustedError, UndefinedStatisticError
from .oracle import (
    HypothesisReport,
    HypothesisSample,
    OracleParams,
    alpha_threshold,
    comparison_deficit,
    d_exact,
    d_leading,
    excess_lower_bound,
    hypothesis_report,
    is_integral_multiplier,
    ones_exact_champernowne,
    ones_excess_exact,
    ones_excess_leading,
)
from .rational import floor_power, parse_rational
from .sequences import (
    Complement,
    Composites,
    Explicit,
    Naturals,
    Polynomial,
    Primes,
    SequenceSpec,
    parse_sequence,
)
from .stats import (
    DigitCounter,
    LilPoint,
    Trajectory,
    block_stream,
    count_symbol_prefix,
    counter_prefix,
    discrepancy,
    lil_bound,
    lil_statistic,
    trajectory,
)
from .stream import (
    NumberSpec,
    StreamCursor,
    digit_length,
    load_checkpoint,
    open_stream,
    parse_number_spec,
    repetitions,
    save_checkpoint,
    to_digits,
)

__version__ = "0.1.0"
