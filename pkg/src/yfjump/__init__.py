"""Exact path counting and central measures on the Young-Fibonacci jump graph."""
from .counting import (
    ClosedFormEngine,
    OracleEngine,
    RecursiveEngine,
    binom,
    chains_saturated,
    jump_paths,
    jump_paths_closed,
    jump_paths_oracle,
    jump_paths_theorem,
)
from .fcoeffs import f_consistency_report, f_eps, f_gen
from .measures import (
    MeasureParams,
    Support,
    SupportCase,
    classify,
    convergence_table,
    level_mass,
    mu,
    prelimit_mu,
    schedule,
    support_iter,
)
from .poly import Poly, format_poly, positivity_check, q_eps, q_from_f, q_gen
from .sampler import PathSampler, TruncationError, sample_path
from .words import (
    ancestors,
    covers_down,
    covers_up,
    format_word,
    is_valid_tail,
    leq,
    parse_word,
    stats,
    strip_common_suffix,
    words_of_rank,
)

__version__ = "0.1.0"
