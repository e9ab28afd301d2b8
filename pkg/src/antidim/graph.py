"""Immutable simple graphs, BFS all-pairs distances, family generators and edge-list I/O."""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Graph",
    "DistanceMatrix",
    "GraphError",
    "from_edge_list",
    "is_connected",
    "all_pairs_distances",
    "generate",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "star_graph",
    "family_f_tree",
    "random_graph",
    "read_edge_list",
    "write_edge_list",
]

# Hop counts are stored as uint16; 0xFFFF is reserved as "unreached" during BFS.
MAX_HOPS = 0xFFFE


class GraphError(ValueError):
    """Raised for malformed graph inputs or unsatisfiable generator parameters."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.

    ``labels`` maps vertex index to the external label it was ingested with
    (edge-list files); generated graphs leave it ``None``.  ``family`` records
    generator provenance, e.g. ``("cycle", 6)``, and is what the closed-form
    solvers key on.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    family: tuple | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("empty graph")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"adjacency of vertex {v} not sorted/deduplicated")

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)


def _build(n: int, edges: Iterable[tuple[int, int]], labels=None, family=None) -> Graph:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            continue
        adj[u].add(v)
        adj[v].add(u)
    return Graph(
        n=n,
        adj=tuple(tuple(sorted(a)) for a in adj),
        labels=tuple(labels) if labels is not None else None,
        family=family,
    )


def from_edge_list(pairs: Sequence[tuple[object, object]]) -> Graph:
    """Build a canonical graph from labelled edges.

    Labels are mapped to dense indices in first-appearance order; duplicate
    edges and self-loops are silently dropped.
    """
    if not pairs:
        raise GraphError("empty graph")
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    for a, b in pairs:
        ia = index.setdefault(str(a), len(index))
        ib = index.setdefault(str(b), len(index))
        if ia != ib:
            edges.append((ia, ib))
    return _build(len(index), edges, labels=list(index))


def is_connected(g: Graph) -> bool:
    seen = bytearray(g.n)
    seen[0] = 1
    frontier = [0]
    count = 1
    while frontier:
        nxt = []
        for u in frontier:
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    nxt.append(v)
        frontier = nxt
    return count == g.n


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop counts from ``source``; unreached vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in g.adj[u]:
                if dist[v] < 0:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


@dataclass(eq=False)
class DistanceMatrix:
    """All-pairs shortest-path hop counts of a connected graph.

    ``d`` is an (n, n) uint16 array.  ``rows`` lazily materialises plain-int
    rows for the partition hot path.  The instance also carries a cache of
    equivalence-class bitmasks keyed by vertex-set bitmask (see
    :mod:`antidim.partition`); the matrix itself is immutable.
    """

    n: int
    d: np.ndarray
    _rows: list[list[int]] | None = field(default=None, repr=False)
    class_cache: dict[int, tuple[int, ...]] = field(default_factory=dict, repr=False)

    @property
    def rows(self) -> list[list[int]]:
        if self._rows is None:
            self._rows = self.d.tolist()
        return self._rows

    @property
    def diameter(self) -> int:
        return int(self.d.max())


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Exact hop counts via one BFS per source vertex."""
    if g.n > MAX_HOPS:
        raise GraphError("graph too large for 16-bit hop counts")
    d = np.empty((g.n, g.n), dtype=np.uint16)
    for s in range(g.n):
        row = bfs_distances(g, s)
        if min(row) < 0:
            raise GraphError("graph not connected")
        d[s] = row
    return DistanceMatrix(n=g.n, d=d)


# ----------------------------------------------------------------------------
# Deterministic family generators.
#
# Vertex numbering conventions (fixed so examples are reproducible):
#   path/cycle     sequential along the path/cycle
#   complete       any order (vertex-transitive)
#   bipartite      part of size r first (0..r-1), then part of size t
#   star           center is vertex 0
#   family_F       x=0, y=1, then level by level: x's children, y's children,
#                  x's grandchildren, ...
# ----------------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return _build(n, [(i, i + 1) for i in range(n - 1)], family=("path", n))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return _build(n, [(i, (i + 1) % n) for i in range(n)], family=("cycle", n))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return _build(n, edges, family=("complete", n))


def complete_bipartite_graph(r: int, t: int) -> Graph:
    if r < 1 or t < 1:
        raise GraphError("complete bipartite graph needs r, t >= 1")
    edges = [(u, r + v) for u in range(r) for v in range(t)]
    return _build(r + t, edges, family=("complete_bipartite", r, t))


def star_graph(n: int) -> Graph:
    """Star of order ``n``: a center (vertex 0) and n-1 leaves."""
    if n < 2:
        raise GraphError("star needs n >= 2")
    return _build(n, [(0, v) for v in range(1, n)], family=("star", n))


def family_f_tree(r: int, depth_x: int, depth_y: int) -> Graph:
    """Doubly-rooted complete r-ary tree: adjacent roots x, y, each carrying a
    complete r-ary subtree with all leaves of a root equidistant from it."""
    if r < 2:
        raise GraphError("family_F needs r >= 2")
    if depth_x < 1 or depth_y < 1:
        raise GraphError("family_F needs depths >= 1")
    edges = [(0, 1)]
    levels = {0: [0], 1: [1]}  # per root: current deepest level
    next_vertex = 2
    for depth in range(1, max(depth_x, depth_y) + 1):
        for root, limit in ((0, depth_x), (1, depth_y)):
            if depth > limit:
                continue
            new_level = []
            for parent in levels[root]:
                for _ in range(r):
                    edges.append((parent, next_vertex))
                    new_level.append(next_vertex)
                    next_vertex += 1
            levels[root] = new_level
    return _build(next_vertex, edges, family=("family_F", r, depth_x, depth_y))


_GENERATORS = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "complete": (complete_graph, 1),
    "complete_bipartite": (complete_bipartite_graph, 2),
    "star": (star_graph, 1),
    "family_F": (family_f_tree, 3),
}


def generate(spec: str) -> Graph:
    """Build a family graph from a compact ``family:params`` spec.

    Examples: ``cycle:6``, ``complete_bipartite:3,2``,
    ``family_F:r=3,dx=2,dy=2`` (named or positional parameters).
    """
    name, _, argstr = spec.partition(":")
    if name not in _GENERATORS:
        raise GraphError(f"unknown graph family {name!r}")
    fn, arity = _GENERATORS[name]
    args: list[int] = []
    kwargs: dict[str, int] = {}
    for tok in filter(None, argstr.split(",")):
        key, eq, val = tok.partition("=")
        try:
            if eq:
                kwargs[key.strip()] = int(val)
            else:
                args.append(int(tok))
        except ValueError:
            raise GraphError(f"bad generator parameter {tok!r}") from None
    if name == "family_F":
        named = {"r": None, "dx": None, "dy": None}
        for pos, val in zip(named, args):
            named[pos] = val
        named.update(kwargs)
        if any(v is None for v in named.values()):
            raise GraphError("family_F needs r, dx, dy")
        return fn(named["r"], named["dx"], named["dy"])
    if kwargs or len(args) != arity:
        raise GraphError(f"family {name!r} takes {arity} positional size(s)")
    return fn(*args)


def random_graph(rng_seed: int, k: int, n_max: int, max_retries: int = 1000) -> Graph:
    """Random connected graph per the uniform-order/uniform-size protocol.

    Order N is uniform in [k+2, n_max] and the edge count uniform in
    [0, N(N-1)/2]; edge sets are redrawn until the graph is connected
    (protocol deviation: the source protocol does not specify how
    disconnected draws are handled).
    """
    if k < 1:
        raise GraphError("k must be >= 1")
    if n_max < k + 2:
        raise GraphError("n_max must be at least k+2")
    rng = random.Random(rng_seed)
    n = rng.randint(k + 2, n_max)
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(max_retries):
        m = rng.randint(0, len(all_pairs))
        g = _build(n, rng.sample(all_pairs, m))
        if is_connected(g):
            return g
    raise GraphError("could not generate connected graph")


# ----------------------------------------------------------------------------
# Edge-list files: one edge per line, '#' comments, whitespace or comma
# separated.  This covers the common public social-graph dump formats.
# ----------------------------------------------------------------------------


def read_edge_list(path: str) -> Graph:
    pairs: list[tuple[str, str]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.replace(",", " ").split()
            if len(tokens) != 2:
                raise GraphError(f"{path}:{lineno}: expected two tokens, got {len(tokens)}")
            pairs.append((tokens[0], tokens[1]))
    return from_edge_list(pairs)


def write_edge_list(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# n {g.n}\n# m {g.m}\n")
        if g.family is not None:
            fh.write(f"# family {':'.join(str(x) for x in g.family)}\n")
        for u, v in g.edges():
            fh.write(f"{g.label_of(u)} {g.label_of(v)}\n")
