"""Score vectors and the ``scores.tsv`` interchange format."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

import numpy as np

from .corpus import StrPath
from .errors import FormatError


@dataclass(eq=False)
class ScoreVector:
    """Dense per-node non-negative scores.

    ``meta`` carries the parameters that produced the vector; it is written
    to the header of a scores file.
    """

    values: np.ndarray
    meta: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=np.float64)

    def __len__(self) -> int:
        return self.values.size

    @property
    def coverage(self) -> float:
        """Fraction of nodes with a strictly positive score."""
        if self.values.size == 0:
            return 0.0
        return float(np.count_nonzero(self.values > 0)) / self.values.size

    @property
    def support(self) -> np.ndarray:
        return self.values > 0


def format_score(x: float) -> str:
    return f"{x:.17g}"


def write_scores(path: StrPath, labels: Sequence[str], values: np.ndarray,
                 header: Mapping[str, Any] | Sequence[str] = ()) -> None:
    """Write ``label<TAB>score`` lines with 17 significant digits.

    ``header`` is either a mapping rendered as ``# key: value`` lines or a
    sequence of ready-made lines (without the leading ``#``).
    """
    if len(labels) != len(values):
        raise ValueError("labels and values differ in length")
    if isinstance(header, Mapping):
        header = [f"{k}: {_fmt(v)}" for k, v in header.items()]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in header:
            fh.write(f"# {line}\n")
        for label, x in zip(labels, np.asarray(values, dtype=np.float64).tolist()):
            fh.write(f"{label}\t{x:.17g}\n")


def _fmt(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def read_scores(path: StrPath) -> tuple[list[str], np.ndarray, list[str]]:
    """Read a scores file back into ``(labels, values, header_lines)``."""
    labels: list[str] = []
    values: list[float] = []
    header: list[str] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.rstrip("\r\n")
            if line.startswith("#"):
                header.append(line[1:].strip())
                continue
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0]:
                raise FormatError(f"{path}:{lineno}: expected 'id<TAB>score', got {line!r}")
            try:
                x = float(parts[1])
            except ValueError:
                raise FormatError(f"{path}:{lineno}: bad score {parts[1]!r}") from None
            if not np.isfinite(x) or x < 0:
                raise FormatError(f"{path}:{lineno}: score must be finite and >= 0")
            labels.append(parts[0])
            values.append(x)
    return labels, np.array(values, dtype=np.float64), header
