"""Article-level Eigenfactor: a random walk that teleports to links.

Each trial picks a citation uniformly at random, lands on either of its two
endpoints with equal probability, then follows up to ``k`` citations
forward (towards older papers). A node's score is the expected number of
arrivals there, normalised over all nodes.

Because the walker restarts every ``k`` steps, the expected arrival counts
are a finite sum of ``k + 1`` sparse propagations. No fixed point is
involved. :func:`alef_monte_carlo` simulates the same process directly and
serves as an independent check of :func:`alef_closed_form`.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .corpus import CitationGraph
from .errors import ConfigError
from .scores import ScoreVector

HALT = "halt"
SELF_ARRIVAL = "self_arrival"

PRNG_NAME = "numpy PCG64; worker streams from SeedSequence(seed).spawn(workers)"

_MC_BATCH = 1 << 18


@dataclass(frozen=True)
class WalkConfig:
    """Walk parameters.

    Attributes:
        steps_between_teleports: directed steps taken after each landing.
        count_landing_arrival: whether the landing itself counts as an arrival.
        dangling_policy: ``"halt"`` ends the walk at a node that cites
            nothing; ``"self_arrival"`` credits that node once per remaining step.
        seed: Monte Carlo seed.
        sample_count: Monte Carlo trials.
    """

    steps_between_teleports: int = 1
    count_landing_arrival: bool = True
    dangling_policy: str = HALT
    seed: int = 0
    sample_count: int = 1_000_000

    def __post_init__(self) -> None:
        if int(self.steps_between_teleports) < 1:
            raise ConfigError("steps_between_teleports must be >= 1")
        if self.dangling_policy not in (HALT, SELF_ARRIVAL):
            raise ConfigError(f"dangling_policy must be {HALT!r} or {SELF_ARRIVAL!r}")
        if int(self.sample_count) < 1:
            raise ConfigError("sample_count must be >= 1")
        if not 0 <= int(self.seed) < 2**64:
            raise ConfigError("seed must fit in 64 unsigned bits")

    def header(self) -> dict[str, object]:
        return {
            "k": self.steps_between_teleports,
            "count_landing": self.count_landing_arrival,
            "dangling": self.dangling_policy,
        }


def landing_mass(graph: CitationGraph) -> np.ndarray:
    """Probability of landing on each node: ``(out + in) / (2 |E|)``."""
    if graph.edge_count == 0:
        return np.zeros(graph.node_count)
    deg = (graph.out_degree + graph.in_degree).astype(np.float64)
    return deg / (2.0 * graph.edge_count)


def transition_matrix(graph: CitationGraph) -> sp.csr_matrix:
    """Pull-form step operator: ``(T @ x)[j] = sum over i citing j of x[i] / out(i)``."""
    n = graph.node_count
    outdeg = graph.out_degree
    data = 1.0 / outdeg[graph.rev_indices]
    return sp.csr_matrix((data, graph.rev_indices, graph.rev_indptr), shape=(n, n))


class _Stepper:
    """Applies the step operator, optionally across row blocks in threads.

    Every output row is computed by the same sequential dot product whatever
    the partition, so threaded results are bit-identical to serial ones.
    """

    def __init__(self, graph: CitationGraph, threads: int = 1):
        self.matrix = transition_matrix(graph)
        n = graph.node_count
        self.threads = max(1, min(int(threads), n or 1))
        if self.threads > 1:
            bounds = np.linspace(0, n, self.threads + 1).astype(np.int64)
            self.blocks = [(a, b, self.matrix[a:b]) for a, b in zip(bounds[:-1], bounds[1:])]
            self.pool = ThreadPoolExecutor(self.threads)

    def __call__(self, x: np.ndarray) -> np.ndarray:
        if self.threads == 1:
            return self.matrix @ x
        out = np.empty_like(x)

        def run(block):
            a, b, m = block
            out[a:b] = m @ x

        list(self.pool.map(run, self.blocks))
        return out

    def close(self) -> None:
        if self.threads > 1:
            self.pool.shutdown()


def expected_arrivals(graph: CitationGraph, config: WalkConfig = WalkConfig(),
                      threads: int = 1) -> np.ndarray:
    """Unnormalised expected arrival count per node for one teleport trial."""
    n = graph.node_count
    if graph.edge_count == 0:
        return np.zeros(n)
    current = landing_mass(graph)
    arrivals = current.copy() if config.count_landing_arrival else np.zeros(n)
    hold = (graph.out_degree == 0) if config.dangling_policy == SELF_ARRIVAL else None
    step = _Stepper(graph, threads)
    try:
        for _ in range(config.steps_between_teleports):
            moved = step(current)
            if hold is not None:
                moved[hold] += current[hold]
            arrivals += moved
            current = moved
    finally:
        step.close()
    return arrivals


def alef_closed_form(graph: CitationGraph, config: WalkConfig = WalkConfig(),
                     threads: int = 1) -> ScoreVector:
    """Exact ALEF scores by propagating landing mass through ``k`` steps.

    Returns an all-zero vector for a graph without edges.
    """
    arrivals = expected_arrivals(graph, config, threads)
    total = arrivals.sum()
    values = arrivals / total if total > 0 else arrivals
    meta = {"method": "alef", **config.header(),
            "nodes": graph.node_count, "edges": graph.edge_count}
    return ScoreVector(values, meta)


def alef_rank(graph: CitationGraph, config: WalkConfig = WalkConfig(),
              threads: int = 1) -> ScoreVector:
    """Public ALEF entry point; scores plus coverage in ``meta``."""
    result = alef_closed_form(graph, config, threads)
    result.meta["coverage"] = result.coverage
    return result


def _simulate(graph: CitationGraph, config: WalkConfig, samples: int,
              rng: np.random.Generator) -> np.ndarray:
    n = graph.node_count
    citing, cited = graph.citing, graph.cited
    indptr, indices = graph.fwd_indptr, graph.fwd_indices
    outdeg = graph.out_degree
    self_arrival = config.dangling_policy == SELF_ARRIVAL
    counts = np.zeros(n, dtype=np.int64)
    done = 0
    while done < samples:
        b = min(_MC_BATCH, samples - done)
        done += b
        e = rng.integers(0, citing.size, size=b)
        upstream = rng.random(b) < 0.5
        node = np.where(upstream, citing[e], cited[e])
        if config.count_landing_arrival:
            counts += np.bincount(node, minlength=n)
        for _ in range(config.steps_between_teleports):
            if node.size == 0:
                break
            deg = outdeg[node]
            can_move = deg > 0
            if not self_arrival:
                node, deg, can_move = node[can_move], deg[can_move], can_move[can_move]
            mover = node[can_move]
            pick = indptr[mover] + rng.integers(0, deg[can_move])
            node[can_move] = indices[pick]
            counts += np.bincount(node, minlength=n)
    return counts


def alef_monte_carlo(graph: CitationGraph, config: WalkConfig = WalkConfig(),
                     workers: int = 1) -> ScoreVector:
    """Empirical ALEF arrival frequencies from ``config.sample_count`` trials.

    Trials are split across ``workers`` streams derived from ``config.seed``;
    the result is bit-identical for a fixed ``(seed, workers)`` pair.
    """
    n = graph.node_count
    meta = {"method": "alef-mc", **config.header(), "samples": config.sample_count,
            "seed": config.seed, "workers": workers, "prng": PRNG_NAME,
            "nodes": n, "edges": graph.edge_count}
    if graph.edge_count == 0:
        return ScoreVector(np.zeros(n), meta)
    workers = max(1, int(workers))
    streams = np.random.SeedSequence(config.seed).spawn(workers)
    share = [config.sample_count // workers + (w < config.sample_count % workers)
             for w in range(workers)]
    jobs = [(np.random.Generator(np.random.PCG64(s)), m) for s, m in zip(streams, share) if m]
    if len(jobs) == 1:
        parts = [_simulate(graph, config, jobs[0][1], jobs[0][0])]
    else:
        with ThreadPoolExecutor(len(jobs)) as pool:
            parts = list(pool.map(lambda j: _simulate(graph, config, j[1], j[0]), jobs))
    counts = np.sum(parts, axis=0)
    total = counts.sum()
    values = counts / total if total > 0 else counts.astype(np.float64)
    return ScoreVector(values, meta)
