"""
Teleporting to links on a three-paper graph
===========================================

Paper C cites A and B, and A cites B. We compute ALEF scores exactly,
then check them against a simulated walker.
"""

import numpy as np

from alefrank import CitationGraph, WalkConfig, alef_closed_form, alef_monte_carlo, in_degree_rank

graph = CitationGraph.from_pairs([("A", "B"), ("C", "B"), ("C", "A")])

##############################################################################
# Each of the three citations is picked with probability 1/3, and the walker
# lands on either end with probability 1/2. That gives every paper a landing
# mass of 1/3. One step forward then moves mass from A to B, and splits C's
# mass between A and B.

exact = alef_closed_form(graph)
for label, score in zip(graph.labels, exact.values):
    print(f"{label}: {score:.4f}")

##############################################################################
# The simulated walker agrees to within sampling noise.

simulated = alef_monte_carlo(graph, WalkConfig(seed=1, sample_count=1_000_000))
print("max |exact - simulated| =", np.abs(exact.values - simulated.values).max())

##############################################################################
# Citation counts give C a zero: it is never cited. ALEF still scores it,
# because the walker can land on the citing end of a link.

print("in-degree:", dict(zip(graph.labels, in_degree_rank(graph).values.round(4).tolist())))
print("coverage  ALEF", exact.coverage, " in-degree", in_degree_rank(graph).coverage)

##############################################################################
# Leaving out the landing arrival scores only cited papers.

arrivals_only = alef_closed_form(graph, WalkConfig(count_landing_arrival=False))
print("without landing:", dict(zip(graph.labels, arrivals_only.values.round(4).tolist())))
