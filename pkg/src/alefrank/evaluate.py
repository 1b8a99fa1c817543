"""Pairwise evaluation against expert orderings, plus corpus statistics.

A judgment pair ``(preferred, other)`` counts as agreement only when the
preferred paper scores strictly higher; equal scores (including two zeros)
count as ties and ties are failures.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass
from typing import Mapping, Sequence

import numpy as np
from scipy.stats import rankdata

from .corpus import StrPath, read_pairs
from .errors import EmptyJudgmentError
from .scores import ScoreVector

log = logging.getLogger(__name__)

UNIQUENESS_DEFINITION = "distinct positive values / positively scored papers"


@dataclass(eq=False)
class JudgmentSet:
    """Expert-ordered pairs; ``preferred[i]`` should outrank ``other[i]``."""

    preferred: np.ndarray
    other: np.ndarray
    excluded: int = 0

    def __post_init__(self) -> None:
        self.preferred = np.asarray(self.preferred, dtype=np.int64)
        self.other = np.asarray(self.other, dtype=np.int64)
        if self.preferred.shape != self.other.shape:
            raise ValueError("preferred and other differ in length")
        same = self.preferred == self.other
        if same.any():
            log.warning("dropping %d judgment pairs that compare a paper with itself",
                        int(same.sum()))
            self.preferred, self.other = self.preferred[~same], self.other[~same]
            self.excluded += int(same.sum())

    def __len__(self) -> int:
        return self.preferred.size

    def reversed(self) -> "JudgmentSet":
        return JudgmentSet(self.other, self.preferred, self.excluded)


def load_judgments(path: StrPath, index: Mapping[str, int] | Sequence[str],
                   strict: bool = True) -> JudgmentSet:
    """Read ``preferred<TAB>other`` lines, resolving IDs through ``index``.

    Pairs that mention papers outside the corpus are excluded and counted.
    """
    if not isinstance(index, Mapping):
        index = {label: i for i, label in enumerate(index)}
    pref, oth = [], []
    excluded = 0
    for a, b in read_pairs(path, strict):
        i, j = index.get(a), index.get(b)
        if i is None or j is None:
            excluded += 1
            continue
        pref.append(i)
        oth.append(j)
    if excluded:
        log.warning("%s: excluded %d pairs referencing unknown papers", path, excluded)
    return JudgmentSet(np.array(pref, dtype=np.int64), np.array(oth, dtype=np.int64), excluded)


def write_judgments(judgments: JudgmentSet, labels: Sequence[str], path: StrPath) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for i, j in zip(judgments.preferred.tolist(), judgments.other.tolist()):
            fh.write(f"{labels[i]}\t{labels[j]}\n")


@dataclass
class EvalReport:
    performance: float
    coverage: float
    uniqueness: float
    agree: int
    disagree: int
    tie: int
    excluded_pairs: int = 0

    @property
    def total(self) -> int:
        return self.agree + self.disagree + self.tie

    def lines(self) -> list[str]:
        out = [f"{k}: {v}" for k, v in asdict(self).items()]
        out.append(f"uniqueness_definition: {UNIQUENESS_DEFINITION}")
        return out

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def coverage_and_uniqueness(scores: ScoreVector | np.ndarray) -> tuple[float, float]:
    """Fraction of papers scored above zero, and fraction of those with a distinct value."""
    values = np.asarray(getattr(scores, "values", scores), dtype=np.float64)
    positive = values[values > 0]
    if positive.size == 0:
        return 0.0, 0.0
    return positive.size / values.size, np.unique(positive).size / positive.size


def pairwise_performance(scores: ScoreVector | np.ndarray, judgments: JudgmentSet) -> EvalReport:
    """Fraction of judged pairs where the preferred paper scores strictly higher."""
    if len(judgments) == 0:
        raise EmptyJudgmentError("judgment set is empty: no resolvable pairs to evaluate")
    values = np.asarray(getattr(scores, "values", scores), dtype=np.float64)
    a = values[judgments.preferred]
    b = values[judgments.other]
    agree = int(np.count_nonzero(a > b))
    disagree = int(np.count_nonzero(a < b))
    tie = len(judgments) - agree - disagree
    coverage, uniqueness = coverage_and_uniqueness(values)
    return EvalReport(agree / len(judgments), coverage, uniqueness,
                      agree, disagree, tie, judgments.excluded)


def spearman_correlation(a: ScoreVector | np.ndarray,
                         b: ScoreVector | np.ndarray) -> float | None:
    """Spearman's rho with average ranks for ties.

    Returns None when either vector is constant, where rho is undefined.
    """
    x = np.asarray(getattr(a, "values", a), dtype=np.float64)
    y = np.asarray(getattr(b, "values", b), dtype=np.float64)
    if x.shape != y.shape:
        raise ValueError("vectors differ in length")
    if x.size < 2:
        raise ValueError("need at least two nodes")
    rx = rankdata(x) - (x.size + 1) / 2.0
    ry = rankdata(y) - (y.size + 1) / 2.0
    sx, sy = np.dot(rx, rx), np.dot(ry, ry)
    if sx == 0 or sy == 0:
        return None
    rho = float(np.dot(rx, ry) / np.sqrt(sx * sy))
    return min(1.0, max(-1.0, rho))
