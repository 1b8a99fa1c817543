"""Command-line interface: ``alefrank <command> [options]``.

Every command that writes files also writes a JSON manifest next to its
output. ``alefrank replay MANIFEST`` re-runs the recorded command and checks
that the outputs are byte-identical.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import time
from typing import Callable, Sequence

import numpy as np

from . import __version__
from .alef import HALT, PRNG_NAME, SELF_ARRIVAL, WalkConfig, alef_monte_carlo, alef_rank
from .authors import author_scores
from .baselines import in_degree_rank
from .blend import BlendConfig, blend_scores, max_normalize, randomize_unranked, weight_sweep
from .corpus import (AuthorshipMap, CitationGraph, LoadReport, graph_stats, load_authorship,
                     load_edges, write_id_map)
from .errors import AlefError, ConfigError
from .evaluate import load_judgments, pairwise_performance
from .scores import read_scores, write_scores
from .synth import SynthConfig, generate_corpus, generate_judgments, write_corpus

log = logging.getLogger("alefrank")

MANIFEST_SUFFIX = ".manifest.json"


def sha256(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def _bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _dangling(text: str) -> str:
    policy = {"halt": HALT, "self": SELF_ARRIVAL, SELF_ARRIVAL: SELF_ARRIVAL}.get(text)
    if policy is None:
        raise argparse.ArgumentTypeError(f"expected halt or self, got {text!r}")
    return policy


def _grid(text: str) -> list[tuple[float, float]]:
    pairs = []
    for item in text.split(","):
        a, _, p = item.partition(":")
        try:
            pairs.append((float(a), float(p) if p else 1.0 - float(a)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad grid entry {item!r}") from None
    return pairs


# ---------------------------------------------------------------- helpers

def _load_graph(args, report: LoadReport) -> tuple[CitationGraph, AuthorshipMap | None]:
    strict = not args.lenient
    graph = load_edges(args.edges, strict, report)
    amap = None
    if getattr(args, "authors", None):
        graph, amap = load_authorship(args.authors, graph, strict, LoadReport())
    return graph, amap


def _scores_with_extension(path: str, extra_labels: Sequence[str]) -> tuple[list[str], np.ndarray]:
    labels, values, _ = read_scores(path)
    known = set(labels)
    added = [x for x in dict.fromkeys(extra_labels) if x not in known]
    return labels + added, np.concatenate([values, np.zeros(len(added))])


def _read_pa(path: str) -> tuple[list[str], np.ndarray]:
    labels, values, _ = read_scores(path)
    return labels, values


def _write_report(lines: list[str], out: str | None) -> None:
    text = "".join(f"{line}\n" for line in lines)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands

def cmd_rank(args) -> list[str]:
    report = LoadReport()
    graph, _ = _load_graph(args, report)
    if args.method == "indegree":
        scores = in_degree_rank(graph)
    else:
        config = WalkConfig(args.steps, args.count_landing, args.dangling,
                            args.seed, args.samples)
        if args.method == "alef":
            scores = alef_rank(graph, config, threads=args.threads)
        else:
            scores = alef_monte_carlo(graph, config, workers=args.threads)
    header = {**scores.meta, "coverage": scores.coverage,
              "dropped_self_loops": report.self_loops,
              "dropped_duplicates": report.duplicates,
              "skipped_malformed": report.malformed}
    if args.method != "alef-mc":
        header.pop("workers", None)
    write_scores(args.out, graph.labels, scores.values, header)
    outputs = [args.out]
    if args.id_map:
        write_id_map(graph, args.id_map)
        outputs.append(args.id_map)
    return outputs


def cmd_authors(args) -> list[str]:
    labels, values, _ = read_scores(args.scores)
    graph = CitationGraph.from_arrays(np.zeros(0, np.int64), np.zeros(0, np.int64),
                                      len(labels), labels)
    graph, amap = load_authorship(args.authors, graph, not args.lenient)
    labels = graph.labels
    values = np.concatenate([values, np.zeros(len(labels) - values.size)])
    table = author_scores(values, amap)
    pa_ok = table.pa_defined
    write_scores(args.out, [labels[i] for i in np.flatnonzero(pa_ok)], table.pa[pa_ok],
                 {"kind": "paper_author_score", "defined": int(pa_ok.sum()),
                  "papers": len(labels)})
    outputs = [args.out]
    if args.ia_out:
        ia_ok = table.ia_defined
        write_scores(args.ia_out, [amap.authors[i] for i in np.flatnonzero(ia_ok)],
                     table.ia[ia_ok], {"kind": "individual_author_score",
                                       "defined": int(ia_ok.sum()),
                                       "authors": amap.author_count})
        outputs.append(args.ia_out)
    return outputs


def _aligned_pa(args) -> tuple[list[str], np.ndarray, np.ndarray]:
    if args.pa:
        pa_labels, pa_values = _read_pa(args.pa)
    else:
        pa_labels, pa_values = [], np.zeros(0)
    labels, alef = _scores_with_extension(args.scores, pa_labels)
    index = {x: i for i, x in enumerate(labels)}
    pa = np.full(len(labels), np.nan)
    if pa_labels:
        pa[[index[x] for x in pa_labels]] = pa_values
    return labels, alef, pa


def cmd_blend(args) -> list[str]:
    labels, alef, pa = _aligned_pa(args)
    config = BlendConfig(args.alef_weight, 1.0 - args.alef_weight, args.randomize, args.seed)
    final = blend_scores(alef, pa, config)
    if args.normalize:
        final = max_normalize(final)
    write_scores(args.out, labels, final.values, final.meta)
    return [args.out]


def cmd_randomize(args) -> list[str]:
    labels, values, header = read_scores(args.scores)
    result = randomize_unranked(values, args.seed)
    header = header + [f"randomize seed: {args.seed}",
                       f"randomized: {result.meta.get('randomized', 0)}"]
    write_scores(args.out, labels, result.values, header)
    return [args.out]


def cmd_eval(args) -> list[str]:
    labels, values, _ = read_scores(args.scores)
    judgments = load_judgments(args.judgments, labels, not args.lenient)
    report = pairwise_performance(values, judgments)
    _write_report(report.lines(), args.out)
    outputs = [args.out] if args.out else []
    if args.json:
        with open(args.json, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(report.to_json() + "\n")
        outputs.append(args.json)
    return outputs


def cmd_sweep(args) -> list[str]:
    labels, alef, pa = _aligned_pa(args)
    judgments = load_judgments(args.judgments, labels, not args.lenient)
    result = weight_sweep(alef, pa, judgments, args.grid)
    _write_report(result.lines(), args.out)
    return [args.out] if args.out else []


def cmd_synth(args) -> list[str]:
    config = SynthConfig(args.papers, args.mean_out_degree, args.exponent, args.author_count,
                         args.mean_authors, args.pairs, args.seed)
    graph, amap = generate_corpus(config)
    judgments = None
    if args.pairs:
        oracle = in_degree_rank(graph) if args.oracle == "indegree" else alef_rank(graph)
        judgments = generate_judgments(graph, oracle, args.pairs, args.noise, args.seed)
    return sorted(write_corpus(args.out, graph, amap, judgments).values())


def cmd_stats(args) -> list[str]:
    graph = load_edges(args.edges, not args.lenient)
    _write_report(graph_stats(graph).lines(), args.out)
    return [args.out] if args.out else []


def cmd_pipeline(args) -> list[str]:
    with open(args.config, encoding="utf-8") as fh:
        cfg = json.load(fh)
    base = os.path.dirname(os.path.abspath(args.config))

    def path(p):
        return p if os.path.isabs(p) else os.path.join(base, p)

    if "edges" not in cfg or "out_dir" not in cfg:
        raise ConfigError("pipeline config needs 'edges' and 'out_dir'")
    out_dir = path(cfg["out_dir"])
    os.makedirs(out_dir, exist_ok=True)
    walk = cfg.get("walk", {})
    blend = cfg.get("blend", {})
    threads = str(cfg.get("threads", 1))
    lenient = ["--lenient"] if cfg.get("lenient") else []
    alef_out = os.path.join(out_dir, "alef.tsv")
    final_out = os.path.join(out_dir, "final-scores.tsv")
    steps = [["rank", "--method", "alef", "--edges", path(cfg["edges"]),
              "--steps", str(walk.get("steps", 1)),
              "--count-landing", str(walk.get("count_landing", True)).lower(),
              "--dangling", {SELF_ARRIVAL: "self"}.get(walk.get("dangling", "halt"),
                                                       walk.get("dangling", "halt")),
              "--threads", threads, "--out", alef_out, *lenient]]
    blend_cmd = ["blend", "--scores", alef_out,
                 "--alef-weight", repr(float(blend.get("alef_weight", 0.7))),
                 "--seed", str(blend.get("seed", 0)), "--out", final_out]
    if cfg.get("authors"):
        steps[0][5:5] = ["--authors", path(cfg["authors"])]
        pa_out = os.path.join(out_dir, "pa.tsv")
        steps.append(["authors", "--scores", alef_out, "--authors", path(cfg["authors"]),
                      "--out", pa_out, "--ia-out", os.path.join(out_dir, "ia.tsv"), *lenient])
        blend_cmd[3:3] = ["--pa", pa_out]
    if blend.get("randomize"):
        blend_cmd.append("--randomize")
    if blend.get("normalize"):
        blend_cmd.append("--normalize")
    steps.append(blend_cmd)
    outputs: list[str] = []
    for argv in steps:
        outputs += _dispatch(argv, write_manifest=False)
    return outputs


def cmd_replay(args) -> list[str]:
    with open(args.manifest, encoding="utf-8") as fh:
        manifest = json.load(fh)
    cwd = os.getcwd()
    os.chdir(manifest["cwd"])
    try:
        _dispatch(manifest["argv"], write_manifest=False)
        mismatched = [p for p, digest in manifest["outputs"].items() if sha256(p) != digest]
    finally:
        os.chdir(cwd)
    if mismatched:
        raise AlefError("replay produced different bytes for: " + ", ".join(mismatched))
    sys.stdout.write(f"replayed {manifest['command']}: "
                     f"{len(manifest['outputs'])} outputs byte-identical\n")
    return []


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alefrank",
                                     description="Static ranking of citation graphs.")
    parser.add_argument("--version", action="version", version=f"alefrank {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        return p

    def lenient(p):
        p.add_argument("--lenient", action="store_true",
                       help="skip malformed input lines instead of failing")

    p = add("rank", cmd_rank, "score papers with ALEF or a baseline")
    p.add_argument("--edges", required=True)
    p.add_argument("--authors", help="authorship file; papers only listed there get score 0")
    p.add_argument("--method", choices=["alef", "alef-mc", "indegree"], default="alef")
    p.add_argument("--steps", type=int, default=1, help="directed steps between teleports")
    p.add_argument("--count-landing", type=_bool, default=True)
    p.add_argument("--dangling", type=_dangling, default=HALT)
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--id-map")
    p.add_argument("--out", required=True)
    lenient(p)

    p = add("authors", cmd_authors, "derive IA and PA scores")
    p.add_argument("--scores", required=True)
    p.add_argument("--authors", required=True)
    p.add_argument("--out", required=True, help="paper author scores (PA)")
    p.add_argument("--ia-out", help="individual author scores (IA)")
    lenient(p)

    p = add("blend", cmd_blend, "combine ALEF and PA scores")
    p.add_argument("--scores", required=True)
    p.add_argument("--pa")
    p.add_argument("--alef-weight", type=float, default=0.7)
    p.add_argument("--randomize", action="store_true")
    p.add_argument("--normalize", action="store_true",
                   help="divide by the largest score so the output lies in [0, 1]")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = add("randomize", cmd_randomize, "fill zero scores with small random values")
    p.add_argument("--scores", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)

    p = add("eval", cmd_eval, "pairwise performance against judgments")
    p.add_argument("--scores", required=True)
    p.add_argument("--judgments", required=True)
    p.add_argument("--out")
    p.add_argument("--json")
    lenient(p)

    p = add("sweep", cmd_sweep, "evaluate a grid of blend weights")
    p.add_argument("--scores", required=True)
    p.add_argument("--pa")
    p.add_argument("--judgments", required=True)
    p.add_argument("--grid", type=_grid, default=_grid("0.7:0.3,0.5:0.5,0.3:0.7"),
                   help="comma-separated alef:author weight pairs")
    p.add_argument("--out")
    lenient(p)

    p = add("synth", cmd_synth, "generate a synthetic corpus")
    p.add_argument("--papers", type=int, default=1000)
    p.add_argument("--mean-out-degree", type=float, default=5.0)
    p.add_argument("--exponent", type=float, default=1.0)
    p.add_argument("--author-count", type=int, default=300)
    p.add_argument("--mean-authors", type=float, default=3.0)
    p.add_argument("--pairs", type=int, default=0)
    p.add_argument("--noise", type=float, default=0.0)
    p.add_argument("--oracle", choices=["indegree", "alef"], default="indegree")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True, help="output directory")

    p = add("stats", cmd_stats, "graph size and degree-class counts")
    p.add_argument("--edges", required=True)
    p.add_argument("--out")
    lenient(p)

    p = add("pipeline", cmd_pipeline, "rank, derive author scores and blend in one go")
    p.add_argument("config", help="JSON pipeline configuration")

    p = add("replay", cmd_replay, "re-run a manifest and verify its outputs")
    p.add_argument("manifest")
    return parser


_INPUT_KEYS = ("edges", "authors", "scores", "pa", "judgments", "config")


def _manifest_path(args, outputs: list[str]) -> str | None:
    if args.command in ("synth", "pipeline"):
        if args.command == "synth":
            return os.path.join(args.out, "manifest.json")
        return os.path.join(os.path.dirname(outputs[-1]), "manifest.json") if outputs else None
    return outputs[0] + MANIFEST_SUFFIX if outputs else None


def _dispatch(argv: Sequence[str], write_manifest: bool = True) -> list[str]:
    args = build_parser().parse_args(list(argv))
    if getattr(args, "threads", 1) < 1:
        raise ConfigError("--threads must be >= 1")
    inputs = {getattr(args, k): None for k in _INPUT_KEYS if getattr(args, k, None)}
    inputs = {p: sha256(p) for p in inputs}
    start = time.perf_counter()
    outputs = args.func(args)
    elapsed = time.perf_counter() - start
    target = _manifest_path(args, outputs) if write_manifest else None
    if target and args.command != "replay":
        params = {k: v for k, v in vars(args).items() if k != "func"}
        manifest = {
            "command": args.command,
            "argv": list(argv),
            "cwd": os.getcwd(),
            "params": params,
            "inputs": inputs,
            "outputs": {p: sha256(p) for p in outputs},
            "version": __version__,
            "prng": PRNG_NAME,
            "duration_seconds": round(elapsed, 6),
        }
        with open(target, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(manifest, fh, indent=2, sort_keys=True, default=str)
            fh.write("\n")
    return outputs


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr,
                        format="alefrank: %(message)s")
    argv = sys.argv[1:] if argv is None else argv
    try:
        _dispatch(argv)
    except (AlefError, OSError, ValueError) as exc:
        print(f"alefrank: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
