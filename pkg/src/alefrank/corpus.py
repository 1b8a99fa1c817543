"""Citation edges and authorship records: loading, interning and indexing.

String paper IDs are interned to dense integers in order of first
appearance, so every per-paper quantity downstream is a plain numpy array.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from os import PathLike
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import FormatError

log = logging.getLogger(__name__)

StrPath = str | PathLike


@dataclass
class LoadReport:
    """Counts of input lines that did not become edges or pairs."""

    lines: int = 0
    comments: int = 0
    malformed: int = 0
    self_loops: int = 0
    duplicates: int = 0

    def as_dict(self) -> dict[str, int]:
        return dict(self.__dict__)


def _csr(rows: np.ndarray, cols: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    # stable sort keeps each row's entries in edge order
    order = np.argsort(rows, kind="stable")
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(rows, minlength=n), out=indptr[1:])
    return indptr, cols[order].astype(np.int64, copy=False)


@dataclass(frozen=True, eq=False)
class CitationGraph:
    """Directed citation graph over interned paper IDs.

    Edges point from the citing paper to the cited paper. ``forward`` holds
    the cited neighbours of each node, ``reverse`` the citing ones, both in
    CSR form (``indptr``, ``indices``).
    """

    labels: list[str]
    citing: np.ndarray
    cited: np.ndarray
    fwd_indptr: np.ndarray = field(repr=False)
    fwd_indices: np.ndarray = field(repr=False)
    rev_indptr: np.ndarray = field(repr=False)
    rev_indices: np.ndarray = field(repr=False)

    @classmethod
    def from_arrays(
        cls,
        citing: np.ndarray,
        cited: np.ndarray,
        node_count: int | None = None,
        labels: Sequence[str] | None = None,
        report: LoadReport | None = None,
    ) -> "CitationGraph":
        """Build a graph from integer edge arrays.

        Self-loops and repeated ``(citing, cited)`` pairs are dropped; the
        first occurrence of each pair keeps its position in the edge list.
        Removal counts are added to ``report`` when one is given.
        """
        citing = np.asarray(citing, dtype=np.int64)
        cited = np.asarray(cited, dtype=np.int64)
        if citing.shape != cited.shape or citing.ndim != 1:
            raise ValueError("citing and cited must be 1-d arrays of equal length")
        if node_count is None:
            node_count = len(labels) if labels is not None else (
                int(max(citing.max(initial=-1), cited.max(initial=-1))) + 1
            )
        if citing.size and (min(citing.min(), cited.min()) < 0
                            or max(citing.max(), cited.max()) >= node_count):
            raise ValueError("edge endpoint outside 0..node_count-1")
        if labels is None:
            labels = [str(i) for i in range(node_count)]
        elif len(labels) != node_count:
            raise ValueError("labels must have one entry per node")

        loops = citing == cited
        n_loops = int(loops.sum())
        if n_loops:
            citing, cited = citing[~loops], cited[~loops]
        key = citing * node_count + cited
        _, first = np.unique(key, return_index=True)
        n_dups = citing.size - first.size
        if n_dups:
            first.sort()
            citing, cited = citing[first], cited[first]
        if report is not None:
            report.self_loops += n_loops
            report.duplicates += n_dups

        fwd_indptr, fwd_indices = _csr(citing, cited, node_count)
        rev_indptr, rev_indices = _csr(cited, citing, node_count)
        return cls(list(labels), citing, cited, fwd_indptr, fwd_indices,
                   rev_indptr, rev_indices)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]],
                   report: LoadReport | None = None) -> "CitationGraph":
        """Build a graph from string ``(citing, cited)`` pairs, interning in order."""
        interner = _Interner()
        src, dst = [], []
        for a, b in pairs:
            src.append(interner(a))
            dst.append(interner(b))
        return cls.from_arrays(np.array(src, dtype=np.int64), np.array(dst, dtype=np.int64),
                               len(interner.labels), interner.labels, report)

    @property
    def node_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return int(self.citing.size)

    @property
    def out_degree(self) -> np.ndarray:
        return np.diff(self.fwd_indptr)

    @property
    def in_degree(self) -> np.ndarray:
        return np.diff(self.rev_indptr)

    def cites(self, node: int) -> np.ndarray:
        return self.fwd_indices[self.fwd_indptr[node]:self.fwd_indptr[node + 1]]

    def cited_by(self, node: int) -> np.ndarray:
        return self.rev_indices[self.rev_indptr[node]:self.rev_indptr[node + 1]]

    def index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def with_extra_nodes(self, labels: Sequence[str]) -> "CitationGraph":
        """Return a copy with isolated nodes appended after the existing ones."""
        if not labels:
            return self
        extra = len(labels)
        return CitationGraph(
            self.labels + list(labels), self.citing, self.cited,
            np.concatenate([self.fwd_indptr, np.full(extra, self.fwd_indptr[-1])]),
            self.fwd_indices,
            np.concatenate([self.rev_indptr, np.full(extra, self.rev_indptr[-1])]),
            self.rev_indices,
        )

    def edges(self) -> Iterator[tuple[str, str]]:
        labels = self.labels
        for a, b in zip(self.citing.tolist(), self.cited.tolist()):
            yield labels[a], labels[b]


@dataclass(frozen=True, eq=False)
class AuthorshipMap:
    """Bipartite paper-author relation stored as two CSR transposes."""

    authors: list[str]
    paper_count: int
    papers: np.ndarray
    author_ids: np.ndarray
    paper_indptr: np.ndarray = field(repr=False)
    paper_authors: np.ndarray = field(repr=False)
    author_indptr: np.ndarray = field(repr=False)
    author_papers: np.ndarray = field(repr=False)

    @classmethod
    def from_arrays(cls, papers: np.ndarray, author_ids: np.ndarray, paper_count: int,
                    authors: Sequence[str], report: LoadReport | None = None) -> "AuthorshipMap":
        papers = np.asarray(papers, dtype=np.int64)
        author_ids = np.asarray(author_ids, dtype=np.int64)
        n_authors = len(authors)
        _, first = np.unique(papers * max(n_authors, 1) + author_ids, return_index=True)
        if first.size != papers.size:
            if report is not None:
                report.duplicates += papers.size - first.size
            first.sort()
            papers, author_ids = papers[first], author_ids[first]
        p_indptr, p_auth = _csr(papers, author_ids, paper_count)
        a_indptr, a_pap = _csr(author_ids, papers, n_authors)
        return cls(list(authors), paper_count, papers, author_ids,
                   p_indptr, p_auth, a_indptr, a_pap)

    @classmethod
    def empty(cls, paper_count: int) -> "AuthorshipMap":
        none = np.zeros(0, dtype=np.int64)
        return cls.from_arrays(none, none, paper_count, [])

    @property
    def author_count(self) -> int:
        return len(self.authors)

    @property
    def pair_count(self) -> int:
        return int(self.papers.size)

    def authors_of(self, paper: int) -> np.ndarray:
        return self.paper_authors[self.paper_indptr[paper]:self.paper_indptr[paper + 1]]

    def papers_of(self, author: int) -> np.ndarray:
        return self.author_papers[self.author_indptr[author]:self.author_indptr[author + 1]]


class _Interner:
    def __init__(self, labels: Sequence[str] = ()):
        self.labels = list(labels)
        self.ids = {s: i for i, s in enumerate(self.labels)}

    def __call__(self, key: str) -> int:
        i = self.ids.get(key)
        if i is None:
            i = self.ids[key] = len(self.labels)
            self.labels.append(key)
        return i


def read_pairs(path: StrPath, strict: bool = True,
               report: LoadReport | None = None) -> Iterator[tuple[str, str]]:
    """Yield ``(left, right)`` string pairs from a two-column TSV file.

    Lines starting with ``#`` and blank lines are skipped. A line that does
    not split into exactly two non-empty fields raises :class:`FormatError`
    in strict mode and is counted and skipped otherwise.
    """
    if report is None:
        report = LoadReport()
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\r\n")
            report.lines += 1
            if line.startswith("#") or not line.strip():
                report.comments += 1
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                if strict:
                    raise FormatError(f"{path}:{lineno}: expected 'id<TAB>id', got {line!r}")
                report.malformed += 1
                continue
            yield parts[0], parts[1]


def load_edges(path: StrPath, strict: bool = True,
               report: LoadReport | None = None) -> CitationGraph:
    """Load ``citing<TAB>cited`` lines into a :class:`CitationGraph`.

    Node IDs are assigned in first-appearance order, the citing field of a
    line before its cited field. Self-loops and duplicate edges are dropped
    in both modes and counted in ``report``.
    """
    if report is None:
        report = LoadReport()
    graph = CitationGraph.from_pairs(read_pairs(path, strict, report), report)
    if report.self_loops or report.duplicates or report.malformed:
        log.warning("%s: dropped %d self-loops, %d duplicate edges, %d malformed lines",
                    path, report.self_loops, report.duplicates, report.malformed)
    return graph


def load_authorship(path: StrPath, graph: CitationGraph, strict: bool = True,
                    report: LoadReport | None = None) -> tuple[CitationGraph, AuthorshipMap]:
    """Load ``paper<TAB>author`` lines against ``graph``.

    Papers unknown to ``graph`` are appended to it as isolated nodes, so the
    returned graph may be larger than the one passed in.
    """
    if report is None:
        report = LoadReport()
    papers = _Interner(graph.labels)
    authors = _Interner()
    p, a = [], []
    for paper, author in read_pairs(path, strict, report):
        p.append(papers(paper))
        a.append(authors(author))
    new_labels = papers.labels[graph.node_count:]
    graph = graph.with_extra_nodes(new_labels)
    amap = AuthorshipMap.from_arrays(np.array(p, dtype=np.int64), np.array(a, dtype=np.int64),
                                     graph.node_count, authors.labels, report)
    if report.duplicates or report.malformed:
        log.warning("%s: dropped %d duplicate pairs, %d malformed lines",
                    path, report.duplicates, report.malformed)
    return graph, amap


@dataclass(frozen=True)
class GraphStats:
    nodes: int
    edges: int
    cited: int
    citing: int
    isolated: int
    dangling: int

    def lines(self) -> list[str]:
        return [f"{k}: {v}" for k, v in self.__dict__.items()]


def graph_stats(graph: CitationGraph) -> GraphStats:
    """Node and edge counts plus degree-class tallies.

    ``dangling`` counts nodes that are cited but cite nothing; ``isolated``
    counts nodes with no incident edge at all.
    """
    indeg, outdeg = graph.in_degree, graph.out_degree
    return GraphStats(
        nodes=graph.node_count,
        edges=graph.edge_count,
        cited=int(np.count_nonzero(indeg)),
        citing=int(np.count_nonzero(outdeg)),
        isolated=int(np.count_nonzero((indeg == 0) & (outdeg == 0))),
        dangling=int(np.count_nonzero((outdeg == 0) & (indeg > 0))),
    )


def write_edges(graph: CitationGraph, path: StrPath) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for a, b in graph.edges():
            fh.write(f"{a}\t{b}\n")


def write_authorship(authorship: AuthorshipMap, labels: Sequence[str], path: StrPath) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for p, a in zip(authorship.papers.tolist(), authorship.author_ids.tolist()):
            fh.write(f"{labels[p]}\t{authorship.authors[a]}\n")


def write_id_map(graph: CitationGraph, path: StrPath) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for i, label in enumerate(graph.labels):
            fh.write(f"{label}\t{i}\n")
