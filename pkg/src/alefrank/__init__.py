"""Static ranking of citation graphs with the article-level Eigenfactor."""

__version__ = "0.1.0"

from .alef import WalkConfig, alef_closed_form, alef_monte_carlo, alef_rank  # noqa: E402
from .authors import AuthorScoreTable, author_scores  # noqa: E402
from .baselines import in_degree_rank  # noqa: E402
from .blend import BlendConfig, blend_scores, max_normalize, randomize_unranked, weight_sweep  # noqa: E402
from .corpus import (AuthorshipMap, CitationGraph, graph_stats, load_authorship,  # noqa: E402
                     load_edges)
from .evaluate import (EvalReport, JudgmentSet, coverage_and_uniqueness,  # noqa: E402
                       load_judgments, pairwise_performance, spearman_correlation)
from .scores import ScoreVector, read_scores, write_scores  # noqa: E402
from .synth import SynthConfig, generate_corpus, generate_judgments  # noqa: E402

__all__ = [
    "AuthorScoreTable", "AuthorshipMap", "BlendConfig", "CitationGraph", "EvalReport",
    "JudgmentSet", "ScoreVector", "SynthConfig", "WalkConfig", "alef_closed_form",
    "alef_monte_carlo", "alef_rank", "author_scores", "blend_scores",
    "coverage_and_uniqueness", "generate_corpus", "generate_judgments", "graph_stats",
    "in_degree_rank", "load_authorship", "load_edges", "load_judgments", "max_normalize",
    "pairwise_performance", "randomize_unranked", "read_scores", "spearman_correlation",
    "weight_sweep", "write_scores",
]
