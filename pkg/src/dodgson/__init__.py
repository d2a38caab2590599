"""Exact Dodgson scores and winners by layered search.

>>> from dodgson import PreferenceProfile, score
>>> pp = PreferenceProfile([("B", "A", "C"), ("B", "A", "C"), ("A", "B", "C")])
>>> score("icr", pp, "A").score
1
"""

from .analysis import (
    SpaceEstimate,
    best_case_score_bound,
    c_worst,
    c_worst_candidate,
    emit_table,
    phi_base_case_bound,
    phi_basic,
    table_csv,
    table_pretty,
)
from .generate import generate_impartial_culture, identical_profile
from .permutor import CompositionCursor, create_permutor, layer_size, layer_sizes
from .profile import (
    PreferenceProfile,
    ProfileError,
    ProfileFormatError,
    SwapBoundError,
    apply_swaps,
    borda_count,
    condorcet_winner,
    format_profile,
    is_condorcet_winner,
    pairwise_tally,
    parse_profile,
    position_table,
    read_profile,
)
from .scorers import (
    InstrumentationCounters,
    ScoreBudget,
    ScoreResult,
    ScorerKind,
    SearchAbandoned,
    SpaceTooLarge,
    score,
)
from .tournament import (
    CandidateScore,
    Incumbent,
    TournamentOutcome,
    TournamentStrategy,
    borda_order,
    run_tournament,
)

__all__ = [
    "SpaceEstimate",
    "best_case_score_bound",
    "c_worst",
    "c_worst_candidate",
    "emit_table",
    "phi_base_case_bound",
    "phi_basic",
    "table_csv",
    "table_pretty",
    "generate_impartial_culture",
    "identical_profile",
    "CompositionCursor",
    "create_permutor",
    "layer_size",
    "layer_sizes",
    "PreferenceProfile",
    "ProfileError",
    "ProfileFormatError",
    "SwapBoundError",
    "apply_swaps",
    "borda_count",
    "condorcet_winner",
    "format_profile",
    "is_condorcet_winner",
    "pairwise_tally",
    "parse_profile",
    "position_table",
    "read_profile",
    "InstrumentationCounters",
    "ScoreBudget",
    "ScoreResult",
    "ScorerKind",
    "SearchAbandoned",
    "SpaceTooLarge",
    "score",
    "CandidateScore",
    "Incumbent",
    "TournamentOutcome",
    "TournamentStrategy",
    "borda_order",
    "run_tournament",
]

__version__ = "0.1.0"
