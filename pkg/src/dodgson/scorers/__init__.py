"""Exact Dodgson scores: five search strategies behind :func:`score`."""

from __future__ import annotations

from ..profile import Alternative, PreferenceProfile
from .base import (
    DEFAULT_ENTRY_CAP,
    InstrumentationCounters,
    ScoreBudget,
    ScoreResult,
    ScorerKind,
    SearchAbandoned,
    SpaceTooLarge,
    SwapSpace,
)
from .full import score_baseline, score_dfs, space_size
from .layered import ICRSearch, LayeredSearch, SCSearch, UCSSearch

__all__ = [
    "DEFAULT_ENTRY_CAP",
    "ICRSearch",
    "InstrumentationCounters",
    "LayeredSearch",
    "SCSearch",
    "ScoreBudget",
    "ScoreResult",
    "ScorerKind",
    "SearchAbandoned",
    "SpaceTooLarge",
    "SwapSpace",
    "UCSSearch",
    "layered_search",
    "score",
    "space_size",
]


def layered_search(
    kind: ScorerKind, space: SwapSpace, entry_cap: int = DEFAULT_ENTRY_CAP
) -> LayeredSearch:
    if kind is ScorerKind.UCS:
        return UCSSearch(space)
    if kind is ScorerKind.SC:
        return SCSearch(space, entry_cap=entry_cap)
    if kind is ScorerKind.ICR:
        return ICRSearch(space)
    raise ValueError(f"{kind.value} does not search layer by layer")


def score(
    kind: ScorerKind | str,
    pp: PreferenceProfile,
    a: Alternative,
    budget: ScoreBudget = ScoreBudget(),
    *,
    entry_cap: int = DEFAULT_ENTRY_CAP,
    dfs_prune: bool = False,
) -> ScoreResult:
    """Dodgson score of ``a`` in ``pp`` together with every minimal swap profile.

    Raises :class:`SearchAbandoned` when the budget runs out first, and
    :class:`SpaceTooLarge` when a materializing scorer would exceed
    ``entry_cap`` entries. The baseline and DFS scorers have no notion of
    layers and ignore ``budget.score_cap``.
    """
    kind = ScorerKind(kind)
    space = SwapSpace(pp, a)
    if kind is ScorerKind.BASELINE:
        return score_baseline(space, budget, entry_cap=entry_cap)
    if kind is ScorerKind.DFS:
        return score_dfs(space, budget, prune=dfs_prune)
    return layered_search(kind, space, entry_cap=entry_cap).drive(budget)
