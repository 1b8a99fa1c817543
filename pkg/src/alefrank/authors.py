"""Author scores derived from paper scores.

An author's individual score (IA) is the mean of their papers' non-zero
ALEF scores. A paper's author score (PA) is the mean of the defined IA
scores of its authors. Undefined values are stored as NaN, never as 0, so
that blending can tell "no author signal" apart from "scored zero".
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import AuthorshipMap
from .scores import ScoreVector


@dataclass(eq=False)
class AuthorScoreTable:
    """Per-author ``ia`` and per-paper ``pa`` arrays; NaN marks undefined."""

    ia: np.ndarray
    pa: np.ndarray

    @property
    def ia_defined(self) -> np.ndarray:
        return ~np.isnan(self.ia)

    @property
    def pa_defined(self) -> np.ndarray:
        return ~np.isnan(self.pa)

    @classmethod
    def empty(cls, paper_count: int) -> "AuthorScoreTable":
        return cls(np.zeros(0), np.full(paper_count, np.nan))


def _masked_group_mean(group: np.ndarray, values: np.ndarray, n_groups: int) -> np.ndarray:
    keep = values > 0
    group, values = group[keep], values[keep]
    sums = np.bincount(group, weights=values, minlength=n_groups)
    counts = np.bincount(group, minlength=n_groups)
    out = np.full(n_groups, np.nan)
    has = counts > 0
    out[has] = sums[has] / counts[has]
    return out


def individual_author_scores(alef: ScoreVector | np.ndarray,
                             authorship: AuthorshipMap) -> np.ndarray:
    """IA per author: mean over that author's papers with a score > 0."""
    scores = np.asarray(getattr(alef, "values", alef), dtype=np.float64)
    _check_len(scores, authorship)
    return _masked_group_mean(authorship.author_ids, scores[authorship.papers],
                              authorship.author_count)


def paper_author_scores(ia: np.ndarray, authorship: AuthorshipMap) -> np.ndarray:
    """PA per paper: mean of the defined IA values of its authors."""
    ia = np.asarray(ia, dtype=np.float64)
    vals = ia[authorship.author_ids]
    # NaN > 0 is False, so undefined IA drop out of the mean
    return _masked_group_mean(authorship.papers, vals, authorship.paper_count)


def author_scores(alef: ScoreVector | np.ndarray, authorship: AuthorshipMap) -> AuthorScoreTable:
    ia = individual_author_scores(alef, authorship)
    return AuthorScoreTable(ia, paper_author_scores(ia, authorship))


def _check_len(scores: np.ndarray, authorship: AuthorshipMap) -> None:
    if scores.size != authorship.paper_count:
        raise ValueError(f"score vector has {scores.size} entries, "
                         f"authorship covers {authorship.paper_count} papers")
