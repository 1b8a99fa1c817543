"""Reproducible synthetic citation corpora.

Papers arrive in index order and cite strictly earlier papers, so every
generated graph is acyclic with topological order equal to index order.
Paper ``t`` cites earlier paper ``s`` with probability proportional to
``(in_degree(s) + 1) ** exponent``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numba
import numpy as np

from .corpus import AuthorshipMap, CitationGraph, StrPath, write_authorship, write_edges
from .errors import ConfigError
from .evaluate import JudgmentSet, write_judgments
from .scores import ScoreVector

AUTHOR_ZIPF_EXPONENT = 1.0


@dataclass(frozen=True)
class SynthConfig:
    """Generator parameters.

    Each paper cites ``floor(mean_out_degree)`` or ``ceil(mean_out_degree)``
    earlier papers, the larger with probability equal to the fractional
    part, capped at the number of earlier papers. Author counts are
    ``1 + Poisson(mean - 1)``; authors are drawn from a Zipf popularity law
    and repeated draws within a paper collapse, so the realised mean is
    slightly lower than requested.
    """

    paper_count: int = 1000
    mean_out_degree: float = 5.0
    preferential_exponent: float = 1.0
    author_count: int = 300
    mean_authors_per_paper: float = 3.0
    judgment_pair_count: int = 0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.paper_count < 2:
            raise ConfigError("paper_count must be >= 2")
        if not 0 < self.mean_out_degree < self.paper_count:
            raise ConfigError("mean_out_degree must be positive and below paper_count")
        if self.preferential_exponent < 0:
            raise ConfigError("preferential_exponent must be >= 0")
        if self.author_count < 1 or self.mean_authors_per_paper <= 0:
            raise ConfigError("author_count and mean_authors_per_paper must be positive")
        if self.judgment_pair_count < 0:
            raise ConfigError("judgment_pair_count must be >= 0")
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must fit in 64 unsigned bits")


@numba.njit(cache=True)
def _fenwick_add(tree, i, delta):
    n = tree.size - 1
    i += 1
    while i <= n:
        tree[i] += delta
        i += i & (-i)


@numba.njit(cache=True)
def _fenwick_prefix(tree, i):
    s = 0.0
    while i > 0:
        s += tree[i]
        i -= i & (-i)
    return s


@numba.njit(cache=True)
def _fenwick_find(tree, target, limit):
    # smallest index whose inclusive prefix sum exceeds target
    n = tree.size - 1
    pos = 0
    step = 1
    while step * 2 <= n:
        step *= 2
    while step > 0:
        nxt = pos + step
        if nxt <= n and tree[nxt] <= target:
            pos = nxt
            target -= tree[nxt]
        step //= 2
    return min(pos, limit - 1)


@numba.njit(cache=True)
def _attach(counts, exponent, rng):
    n = counts.size
    total = 0
    for t in range(n):
        total += counts[t]
    citing = np.empty(total, dtype=np.int64)
    cited = np.empty(total, dtype=np.int64)
    indeg = np.zeros(n, dtype=np.int64)
    weight = np.zeros(n, dtype=np.float64)
    tree = np.zeros(n + 1, dtype=np.float64)
    chosen = np.empty(n, dtype=np.int64)
    e = 0
    for t in range(n):
        m = counts[t]
        if m == t:
            for s in range(t):
                chosen[s] = s
        else:
            mass = _fenwick_prefix(tree, t)
            got = 0
            while got < m:
                s = _fenwick_find(tree, rng.random() * mass, t)
                dup = False
                for q in range(got):
                    if chosen[q] == s:
                        dup = True
                        break
                if not dup:
                    chosen[got] = s
                    got += 1
        for q in range(m):
            s = chosen[q]
            citing[e] = t
            cited[e] = s
            e += 1
            indeg[s] += 1
            w = (indeg[s] + 1.0) ** exponent
            _fenwick_add(tree, s, w - weight[s])
            weight[s] = w
        weight[t] = 1.0
        _fenwick_add(tree, t, 1.0)
    return citing, cited


def generate_graph(config: SynthConfig, rng: np.random.Generator | None = None) -> CitationGraph:
    """Citation graph only; node ``i`` is paper ``p<i>``."""
    if rng is None:
        rng = np.random.Generator(np.random.PCG64(config.seed))
    n = config.paper_count
    base = int(np.floor(config.mean_out_degree))
    frac = config.mean_out_degree - base
    counts = np.minimum(base + (rng.random(n) < frac), np.arange(n))
    citing, cited = _attach(counts.astype(np.int64), float(config.preferential_exponent), rng)
    labels = [f"p{i}" for i in range(n)]
    return CitationGraph.from_arrays(citing, cited, n, labels)


def generate_corpus(config: SynthConfig) -> tuple[CitationGraph, AuthorshipMap]:
    """Citation graph plus authorship, fully determined by ``config``."""
    rng = np.random.Generator(np.random.PCG64(config.seed))
    graph = generate_graph(config, rng)
    n, k = config.paper_count, config.author_count
    mean = config.mean_authors_per_paper
    if mean >= 1:
        per_paper = 1 + rng.poisson(mean - 1, size=n)
    else:
        per_paper = rng.poisson(mean, size=n)
    per_paper = np.minimum(per_paper, k)
    popularity = 1.0 / np.arange(1, k + 1) ** AUTHOR_ZIPF_EXPONENT
    popularity /= popularity.sum()
    papers = np.repeat(np.arange(n, dtype=np.int64), per_paper)
    authors = rng.choice(k, size=papers.size, p=popularity).astype(np.int64)
    amap = AuthorshipMap.from_arrays(papers, authors, n, [f"a{j}" for j in range(k)])
    return graph, amap


def generate_judgments(graph: CitationGraph, oracle: ScoreVector | np.ndarray, pair_count: int,
                       noise: float = 0.0, seed: int = 0) -> JudgmentSet:
    """Sample pairs of positively scored papers with different oracle scores.

    Each pair is ordered by the oracle, then reversed with probability
    ``noise``.
    """
    values = np.asarray(getattr(oracle, "values", oracle), dtype=np.float64)
    if values.size != graph.node_count:
        raise ValueError("oracle length does not match the graph")
    if not 0.0 <= noise <= 1.0:
        raise ConfigError("noise must lie in [0, 1]")
    candidates = np.flatnonzero(values > 0)
    if np.unique(values[candidates]).size < 2:
        raise ConfigError("oracle needs at least two distinct positive scores")
    rng = np.random.Generator(np.random.PCG64(seed))
    first: list[np.ndarray] = []
    second: list[np.ndarray] = []
    have = 0
    while have < pair_count:
        want = pair_count - have
        i = candidates[rng.integers(0, candidates.size, size=2 * want)]
        j = candidates[rng.integers(0, candidates.size, size=2 * want)]
        ok = values[i] != values[j]
        i, j = i[ok][:want], j[ok][:want]
        first.append(i)
        second.append(j)
        have += i.size
    i = np.concatenate(first) if first else np.zeros(0, dtype=np.int64)
    j = np.concatenate(second) if second else np.zeros(0, dtype=np.int64)
    hi = np.where(values[i] > values[j], i, j)
    lo = np.where(values[i] > values[j], j, i)
    flip = rng.random(i.size) < noise
    return JudgmentSet(np.where(flip, lo, hi), np.where(flip, hi, lo))


def write_corpus(directory: StrPath, graph: CitationGraph, authorship: AuthorshipMap,
                 judgments: JudgmentSet | None = None) -> dict[str, str]:
    """Write ``edges.tsv``, ``authors.tsv`` and optionally ``judgments.tsv``."""
    os.makedirs(directory, exist_ok=True)
    paths = {"edges": os.path.join(directory, "edges.tsv"),
             "authors": os.path.join(directory, "authors.tsv")}
    write_edges(graph, paths["edges"])
    write_authorship(authorship, graph.labels, paths["authors"])
    if judgments is not None:
        paths["judgments"] = os.path.join(directory, "judgments.tsv")
        write_judgments(judgments, graph.labels, paths["judgments"])
    return paths
