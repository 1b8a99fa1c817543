"""
Walk length and dead ends
=========================

How much do scores move when the walker takes more steps between
teleports, or when it lingers at papers that cite nothing?
"""

from alefrank import SynthConfig, WalkConfig, alef_rank, generate_corpus, spearman_correlation
from alefrank.alef import HALT, SELF_ARRIVAL

graph, _ = generate_corpus(SynthConfig(paper_count=5000, mean_out_degree=5, seed=3))
base = alef_rank(graph)

##############################################################################
# Longer walks push mass further back in time, towards the oldest papers.

oldest = slice(0, 50)
for k in (1, 2, 3, 5, 8):
    for policy in (HALT, SELF_ARRIVAL):
        scores = alef_rank(graph, WalkConfig(steps_between_teleports=k, dangling_policy=policy))
        rho = spearman_correlation(base, scores)
        share = scores.values[oldest].sum()
        print(f"k={k} {policy:<13} rho vs k=1: {rho:.4f}   mass on 50 oldest: {share:.3f}")
