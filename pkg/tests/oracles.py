"""Independent reference computations used by the tests.

Nothing here touches the sparse-matrix code paths in the package.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction


def enumerate_alef(edges, k=1, count_landing=True, dangling="halt"):
    """Exact ALEF scores by walking every (edge, endpoint) outcome tree.

    ``edges`` is a list of ``(citing, cited)`` hashable labels without
    duplicates or self-loops. Returns ``{label: Fraction}`` over all labels
    that appear in ``edges``.
    """
    cites = defaultdict(list)
    nodes = []
    for a, b in edges:
        cites[a].append(b)
        for x in (a, b):
            if x not in nodes:
                nodes.append(x)
    arrivals = {x: Fraction(0) for x in nodes}
    if not edges:
        return arrivals

    def walk(node, prob, steps_left):
        if steps_left == 0:
            return
        targets = cites[node]
        if not targets:
            if dangling == "self_arrival":
                arrivals[node] += prob * steps_left
            return
        share = prob / len(targets)
        for t in targets:
            arrivals[t] += share
            walk(t, share, steps_left - 1)

    landing = Fraction(1, 2 * len(edges))
    for a, b in edges:
        for end in (a, b):
            if count_landing:
                arrivals[end] += landing
            walk(end, landing, k)
    total = sum(arrivals.values())
    return {x: v / total for x, v in arrivals.items()}


def direct_k1(edges):
    """k=1 default scores from the per-node formula
    ``landing(i) + sum over x citing i of landing(x) / out(x)``."""
    out = defaultdict(int)
    deg = defaultdict(int)
    for a, b in edges:
        out[a] += 1
        deg[a] += 1
        deg[b] += 1
    m = len(edges)
    raw = {x: Fraction(d, 2 * m) for x, d in deg.items()}
    score = dict(raw)
    for a, b in edges:
        score[b] += raw[a] / out[a]
    total = sum(score.values())
    return {x: v / total for x, v in score.items()}


def average_ranks(values):
    """1-based ranks with ties given their mean position."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        mean = (i + j) / 2 + 1
        for q in range(i, j + 1):
            ranks[order[q]] = mean
        i = j + 1
    return ranks


def spearman_bruteforce(a, b):
    ra, rb = average_ranks(a), average_ranks(b)
    n = len(a)
    ma, mb = sum(ra) / n, sum(rb) / n
    cov = sum((x - ma) * (y - mb) for x, y in zip(ra, rb))
    va = sum((x - ma) ** 2 for x in ra)
    vb = sum((y - mb) ** 2 for y in rb)
    return cov / (va * vb) ** 0.5
