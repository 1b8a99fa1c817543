from fractions import Fraction

import numpy as np
import pytest

from alefrank.alef import alef_rank
from alefrank.baselines import in_degree_rank
from alefrank.corpus import CitationGraph
from conftest import random_dag


def test_triangle(triangle):
    got = dict(zip(triangle.labels, in_degree_rank(triangle).values))
    assert got == {"A": pytest.approx(1 / 3), "B": pytest.approx(2 / 3), "C": 0.0}


def test_empty():
    g = CitationGraph.from_arrays(np.zeros(0, int), np.zeros(0, int), 4)
    assert np.array_equal(in_degree_rank(g).values, np.zeros(4))


def test_star():
    g = CitationGraph.from_arrays(np.arange(1, 6), np.zeros(5, dtype=int), 6)
    s = in_degree_rank(g)
    assert s.values[0] == 1.0 and not s.values[1:].any()
    assert s.coverage == pytest.approx(1 / 6)


@pytest.mark.parametrize("seed", range(8))
def test_sums_to_one_exactly(seed):
    g = random_dag(seed, 30, 80)
    total = sum(Fraction(int(d), g.edge_count) for d in g.in_degree)
    assert total == 1
    assert in_degree_rank(g).values.sum() == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("seed", range(20))
def test_alef_coverage_dominates(seed):
    g = random_dag(seed, 100, 150)
    assert alef_rank(g).coverage >= in_degree_rank(g).coverage
