"""
Ranking a synthetic corpus end to end
=====================================

Generate a preferential-attachment citation corpus, score it with ALEF,
extend coverage with author scores, and evaluate against noisy pairwise
judgments.
"""

import numpy as np

from alefrank import (BlendConfig, CitationGraph, SynthConfig, alef_rank, author_scores, blend_scores,
                      coverage_and_uniqueness, generate_corpus, generate_judgments,
                      in_degree_rank, pairwise_performance, randomize_unranked,
                      spearman_correlation, weight_sweep)

graph, authorship = generate_corpus(SynthConfig(paper_count=20_000, mean_out_degree=4.5,
                                                author_count=4000, seed=7))

# Drop 40% of the citations so that some papers end up with no links at all.
keep = np.random.default_rng(0).random(graph.edge_count) < 0.6
graph = CitationGraph.from_arrays(graph.citing[keep], graph.cited[keep], graph.node_count,
                                  graph.labels)
print(f"{graph.node_count} papers, {graph.edge_count} citations")

##############################################################################
# Judgments stand in for experts. They follow citation counts, with 30% of pairs flipped.

judgments = generate_judgments(graph, in_degree_rank(graph), 10_000, noise=0.3, seed=1)

alef = alef_rank(graph)
table = author_scores(alef, authorship)
blended = blend_scores(alef, table, BlendConfig(0.7, 0.3))
filled = randomize_unranked(blended, seed=3)

##############################################################################
# A small version of the usual summary table: coverage, uniqueness and
# pairwise performance for each method.

rows = [("in-degree", in_degree_rank(graph)), ("ALEF", alef), ("ALEF+PA", blended),
        ("ALEF+PA+random", filled)]
print(f"{'method':<16}{'coverage':>10}{'unique':>10}{'perf':>8}")
for name, scores in rows:
    cov, uniq = coverage_and_uniqueness(scores)
    perf = pairwise_performance(scores, judgments).performance
    print(f"{name:<16}{cov:>10.3f}{uniq:>10.3f}{perf:>8.3f}")

print("Spearman(ALEF, in-degree) =", round(spearman_correlation(alef, in_degree_rank(graph)), 4))

##############################################################################
# Sweep the blend weights the way one would by hand.

sweep = weight_sweep(alef, table, judgments, [(1, 0), (0.7, 0.3), (0.5, 0.5), (0.3, 0.7)])
print("\n".join(sweep.lines()))
