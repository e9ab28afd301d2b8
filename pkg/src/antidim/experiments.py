"""Success-rate study over random graphs and social-graph audit records.

The study measures how often the closure search reaches a definite verdict
(Found or Absent both count as success) across a grid of join depths m and
target values k, on random connected graphs.  Graph populations are seeded
from (rng_seed, k, index) only, so every m-value sees the identical graphs —
success rates are comparable across m by construction.
"""

from __future__ import annotations

import io
import json
import time
from dataclasses import dataclass, field

from .anonymity import AnonymityResult, Confidence, evaluate, single_vertex_scan
from .closure import (
    DEFAULT_FRONTIER_CAP,
    Verdict,
    find_antiresolving_basis,
    find_antiresolving_set,
)
from .graph import Graph, all_pairs_distances, random_graph, read_edge_list

__all__ = [
    "K_EQUALS_ORDER",
    "ExperimentConfig",
    "CellResult",
    "ExperimentReport",
    "run_success_rate_study",
    "audit_social_graph",
    "largest_component",
]

REPORT_FORMAT_VERSION = 1

# Sentinel k-value: run each graph with k equal to its own order.
K_EQUALS_ORDER = "order"


@dataclass(frozen=True)
class ExperimentConfig:
    m_values: tuple[int, ...] = (1, 2, 3)
    k_values: tuple[int | str, ...] = (1, 2, 3, 4, 5, 6, 7, 8)
    graphs_per_cell: int = 300
    n_max: int = 40
    rng_seed: int = 0
    max_frontier: int = DEFAULT_FRONTIER_CAP
    measure_time: bool = False  # keep False for byte-identical reports

    def __post_init__(self) -> None:
        if self.graphs_per_cell < 1:
            raise ValueError("graphs_per_cell must be positive")
        if any(m < 1 for m in self.m_values):
            raise ValueError("m values must be positive")
        numeric = [k for k in self.k_values if k != K_EQUALS_ORDER]
        if any(not isinstance(k, int) or k < 1 for k in numeric):
            raise ValueError(f"k values must be positive integers or {K_EQUALS_ORDER!r}")
        if numeric and self.n_max < max(numeric) + 2:
            raise ValueError("n_max must be at least max(k) + 2")


@dataclass(frozen=True)
class CellResult:
    m: int
    k: int | str
    algorithm: str  # "set" | "basis"
    found: int
    absent: int
    unknown: int
    mean_ms: float

    @property
    def total(self) -> int:
        return self.found + self.absent + self.unknown

    @property
    def success_rate(self) -> float:
        return (self.found + self.absent) / self.total


@dataclass(frozen=True)
class ExperimentReport:
    config: ExperimentConfig
    cells: tuple[CellResult, ...]
    format_version: int = REPORT_FORMAT_VERSION

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write("m,k,algorithm,found,absent,unknown,success_rate,mean_ms\n")
        for c in self.cells:
            out.write(
                f"{c.m},{c.k},{c.algorithm},{c.found},{c.absent},{c.unknown},"
                f"{c.success_rate:.4f},{c.mean_ms:.3f}\n"
            )
        return out.getvalue()

    def to_json(self) -> str:
        doc = {
            "format_version": self.format_version,
            "config": {
                "m_values": list(self.config.m_values),
                "k_values": list(self.config.k_values),
                "graphs_per_cell": self.config.graphs_per_cell,
                "n_max": self.config.n_max,
                "rng_seed": self.config.rng_seed,
            },
            "cells": [
                {
                    "m": c.m,
                    "k": c.k,
                    "algorithm": c.algorithm,
                    "found": c.found,
                    "absent": c.absent,
                    "unknown": c.unknown,
                    "success_rate": round(c.success_rate, 4),
                    "mean_ms": c.mean_ms,
                }
                for c in self.cells
            ],
        }
        return json.dumps(doc, indent=2)

    def cell(self, m: int, k: int | str, algorithm: str) -> CellResult:
        for c in self.cells:
            if (c.m, c.k, c.algorithm) == (m, k, algorithm):
                return c
        raise KeyError((m, k, algorithm))


def _graph_seed(rng_seed: int, k_index: int, i: int) -> int:
    # Knuth-style mixing; deliberately independent of m so all m-cells share
    # one graph population per (k, i).
    h = (rng_seed * 2654435761 + k_index) & 0xFFFFFFFF
    return (h * 2654435761 + i) & 0xFFFFFFFF


def run_success_rate_study(cfg: ExperimentConfig) -> ExperimentReport:
    """Per-(m, k, algorithm) verdict counts over fresh random graph populations."""
    cells: list[CellResult] = []
    for k_index, k_spec in enumerate(cfg.k_values):
        gen_k = 1 if k_spec == K_EQUALS_ORDER else k_spec
        graphs: list[Graph] = [
            random_graph(_graph_seed(cfg.rng_seed, k_index, i), gen_k, cfg.n_max)
            for i in range(cfg.graphs_per_cell)
        ]
        for m in cfg.m_values:
            tallies = {alg: {v: 0 for v in Verdict} for alg in ("set", "basis")}
            elapsed = {alg: 0.0 for alg in ("set", "basis")}
            for g in graphs:
                k = g.n if k_spec == K_EQUALS_ORDER else k_spec
                dm = all_pairs_distances(g)
                for alg, fn in (("set", find_antiresolving_set), ("basis", find_antiresolving_basis)):
                    t0 = time.perf_counter() if cfg.measure_time else 0.0
                    outcome = fn(g, k, m, max_frontier=cfg.max_frontier, dm=dm)
                    if cfg.measure_time:
                        elapsed[alg] += (time.perf_counter() - t0) * 1000.0
                    tallies[alg][outcome.verdict] += 1
            for alg in ("set", "basis"):
                t = tallies[alg]
                cells.append(
                    CellResult(
                        m=m,
                        k=k_spec,
                        algorithm=alg,
                        found=t[Verdict.FOUND],
                        absent=t[Verdict.ABSENT],
                        unknown=t[Verdict.UNKNOWN],
                        mean_ms=elapsed[alg] / cfg.graphs_per_cell if cfg.measure_time else 0.0,
                    )
                )
    return ExperimentReport(config=cfg, cells=tuple(cells))


def largest_component(g: Graph) -> tuple[Graph, bool]:
    """The largest connected component (ties: the one with the lowest vertex)
    and whether anything was cut away."""
    seen = [False] * g.n
    best: list[int] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        i = 0
        while i < len(comp):
            for w in g.adj[comp[i]]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
            i += 1
        if len(comp) > len(best):
            best = comp
    if len(best) == g.n:
        return g, False
    best.sort()
    remap = {v: i for i, v in enumerate(best)}
    sub = Graph(
        n=len(best),
        adj=tuple(tuple(remap[w] for w in g.adj[v] if w in remap) for v in best),
        labels=tuple(g.label_of(v) for v in best),
    )
    return sub, True


def audit_social_graph(path: str, ell: int, m: int = 2) -> dict:
    """Anonymity audit of an edge-list file, as a JSON-serialisable record.

    Disconnected inputs are reduced to their largest component (flagged in the
    record).  A fast singleton scan settles k = 1 without any search; only
    when it fails does the full ascending evaluation run.
    """
    t0 = time.perf_counter()
    g = read_edge_list(path)
    g, reduced = largest_component(g)
    v = single_vertex_scan(g)
    if v is not None and ell >= 1:
        result = AnonymityResult(
            k=1,
            ell=ell,
            confidence=Confidence.EXACT,
            witness=(v,),
            probe_log=((1, "qualifies: singleton 1-antiresolving set"),),
        )
    else:
        result = evaluate(g, ell, mode="search", m=m)
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return {
        "graph": {"n": g.n, "m": g.m, "source": path},
        "ell": ell,
        "k": result.k,
        "confidence": result.confidence.value,
        "witness": None
        if result.witness is None
        else [g.label_of(v) for v in result.witness],
        "elapsed_ms": round(elapsed_ms, 3),
        "component_reduced": reduced,
    }
