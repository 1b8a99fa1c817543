"""Citation-count baseline."""

from __future__ import annotations

import numpy as np

from .corpus import CitationGraph
from .scores import ScoreVector


def in_degree_rank(graph: CitationGraph) -> ScoreVector:
    """Citations received divided by the total number of citations.

    All zeros for a graph without edges.
    """
    indeg = graph.in_degree.astype(np.float64)
    values = indeg / graph.edge_count if graph.edge_count else indeg
    sv = ScoreVector(values, {"method": "indegree", "nodes": graph.node_count,
                              "edges": graph.edge_count})
    sv.meta["coverage"] = sv.coverage
    return sv
