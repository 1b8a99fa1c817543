import numpy as np
import pytest

from alefrank.corpus import CitationGraph

_CRITERIA: list[tuple[int, str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
        _CRITERIA.append((marker.args[0], marker.args[1],
                          "PASS" if rep.passed else "FAIL", detail))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, detail in sorted(_CRITERIA):
        line = f"[{status}] {number:>2}. {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)


@pytest.fixture
def triangle():
    """A->B, C->B, C->A."""
    return CitationGraph.from_pairs([("A", "B"), ("C", "B"), ("C", "A")])


def random_dag(seed: int, max_nodes: int = 200, max_edges: int = 2000) -> CitationGraph:
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, max_nodes + 1))
    m = int(rng.integers(1, max_edges + 1))
    a = rng.integers(0, n, m)
    b = rng.integers(0, n, m)
    keep = a != b
    return CitationGraph.from_arrays(np.maximum(a, b)[keep], np.minimum(a, b)[keep], n)
