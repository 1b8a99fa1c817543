"""Combining citation and author scores into a final ranking."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .authors import AuthorScoreTable
from .errors import ConfigError
from .evaluate import JudgmentSet, pairwise_performance
from .scores import ScoreVector

log = logging.getLogger(__name__)

RANDOM_FILL_FACTOR = 0.999


@dataclass(frozen=True)
class BlendConfig:
    alef_weight: float = 0.7
    author_weight: float = 0.3
    randomize_unranked: bool = False
    seed: int = 0

    def __post_init__(self) -> None:
        for w in (self.alef_weight, self.author_weight):
            if not 0.0 <= w <= 1.0:
                raise ConfigError(f"blend weights must lie in [0, 1], got {w}")
        if abs(self.alef_weight + self.author_weight - 1.0) > 1e-12:
            raise ConfigError("alef_weight + author_weight must equal 1, got "
                              f"{self.alef_weight} + {self.author_weight}")

    def header(self) -> dict[str, object]:
        return {"alef_weight": self.alef_weight, "author_weight": self.author_weight,
                "randomize": self.randomize_unranked, "seed": self.seed}


def _pa_values(pa: AuthorScoreTable | np.ndarray) -> np.ndarray:
    return np.asarray(getattr(pa, "pa", pa), dtype=np.float64)


def blend_scores(alef: ScoreVector | np.ndarray, pa: AuthorScoreTable | np.ndarray,
                 config: BlendConfig = BlendConfig()) -> ScoreVector:
    """Weighted mean of ALEF and PA where both exist, else whichever one exists.

    PA entries that are NaN or non-positive count as missing. A component
    with weight 0 is ignored entirely, fallback included, so weights
    ``(1, 0)`` return the ALEF vector unchanged. The mean is evaluated as
    ``alef + author_weight * (pa - alef)``.
    """
    a = np.asarray(getattr(alef, "values", alef), dtype=np.float64)
    p = _pa_values(pa)
    if a.shape != p.shape:
        raise ValueError(f"ALEF has {a.size} papers, PA has {p.size}")
    has_a = (a > 0) if config.alef_weight > 0 else np.zeros(a.shape, dtype=bool)
    has_p = (p > 0) if config.author_weight > 0 else np.zeros(p.shape, dtype=bool)
    both = has_a & has_p
    out = np.where(has_a, a, 0.0)
    only_p = has_p & ~has_a
    out[only_p] = p[only_p]
    w = config.author_weight
    if w == 1.0:
        out[both] = p[both]
    elif w > 0.0:
        ab, pb = a[both], p[both]
        mixed = ab + w * (pb - ab)
        out[both] = np.clip(mixed, np.minimum(ab, pb), np.maximum(ab, pb))
    result = ScoreVector(out, {"method": "blend", **config.header()})
    if config.randomize_unranked:
        result = randomize_unranked(result, config.seed)
    result.meta["coverage"] = result.coverage
    return result


def randomize_unranked(scores: ScoreVector | np.ndarray, seed: int) -> ScoreVector:
    """Give every zero-scored paper a small random score below all ranked papers.

    Draws are uniform on ``[0, 0.999 * minval)`` where ``minval`` is the
    smallest positive score, taken over zero-scored papers in index order
    from a PCG64 stream seeded with ``seed``. Exact zeros are redrawn.
    With no positive score the input is returned unchanged.
    """
    values = np.array(getattr(scores, "values", scores), dtype=np.float64)
    meta = dict(getattr(scores, "meta", {}))
    positive = values > 0
    if not positive.any():
        log.warning("no positive scores; nothing to randomize against")
        return ScoreVector(values, meta)
    minval = float(values[positive].min())
    cap = RANDOM_FILL_FACTOR * minval
    top = np.nextafter(cap, 0.0)
    rng = np.random.Generator(np.random.PCG64(seed))
    zeros = np.flatnonzero(~positive)
    draws = rng.random(zeros.size) * cap
    bad = draws <= 0
    while bad.any():
        draws[bad] = rng.random(int(bad.sum())) * cap
        bad = draws <= 0
    values[zeros] = np.minimum(draws, top)
    meta.update({"randomized": int(zeros.size), "minval": minval, "seed": seed})
    return ScoreVector(values, meta)


def max_normalize(scores: ScoreVector | np.ndarray) -> ScoreVector:
    """Divide by the largest score so values lie in ``[0, 1]``; order is kept."""
    values = np.array(getattr(scores, "values", scores), dtype=np.float64)
    meta = dict(getattr(scores, "meta", {}))
    top = float(values.max()) if values.size else 0.0
    if top > 0:
        values /= top
    meta["normalized"] = "max"
    return ScoreVector(values, meta)


@dataclass
class SweepReport:
    grid: list[tuple[float, float]]
    performance: list[float]
    reports: list = field(repr=False, default_factory=list)

    @property
    def best(self) -> tuple[float, float]:
        return self.grid[int(np.argmax(self.performance))]

    def lines(self) -> list[str]:
        out = [f"alef={a:g} author={p:g} performance={s:.6f}"
               for (a, p), s in zip(self.grid, self.performance)]
        a, p = self.best
        out.append(f"best: alef={a:g} author={p:g}")
        return out


def weight_sweep(alef: ScoreVector | np.ndarray, pa: AuthorScoreTable | np.ndarray,
                 judgments: JudgmentSet,
                 grid: Sequence[tuple[float, float]]) -> SweepReport:
    """Pairwise performance of the blend at each ``(alef_weight, author_weight)``."""
    if not grid:
        raise ConfigError("weight grid is empty")
    configs = [BlendConfig(float(a), float(p)) for a, p in grid]
    reports = [pairwise_performance(blend_scores(alef, pa, c), judgments) for c in configs]
    return SweepReport([(c.alef_weight, c.author_weight) for c in configs],
                       [r.performance for r in reports], reports)
