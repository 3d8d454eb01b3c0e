"""Immutable graph container, edge-list parsing, components, shortest paths.

Node ids are dense integers 0..n_nodes-1; external string labels are kept on
the side and never influence any computed quantity. Graphs are frozen after
construction, so all shortest-path routines are pure and thread-safe.
"""

from __future__ import annotations

import heapq
import math
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import IO

import numpy as np

Edge = tuple[int, int]

TRANSFORMS = ("reciprocal", "identity")


class GraphParseError(ValueError):
    """Malformed edge-list input. Carries the offending 1-based line number."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class ColumnCountError(GraphParseError):
    """Field count incompatible with the weighted/unweighted flag."""


class EdgeListWarning(UserWarning):
    """Recoverable edge-list issues: dropped self-loops, collapsed duplicates."""


@dataclass(frozen=True)
class Graph:
    """Simple graph with optional positive edge weights.

    Invariants enforced at construction: endpoints are dense ids in range,
    no self-loops, no duplicate edges (unordered pairs when undirected),
    and weights -- when present -- cover every edge and are finite positive.
    """

    n_nodes: int
    directed: bool
    edges: tuple[Edge, ...]
    weights: tuple[float, ...] | None = None
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n_nodes < 0:
            raise ValueError("n_nodes must be nonnegative")
        seen: set[tuple[int, int]] = set()
        for u, v in self.edges:
            if not (0 <= u < self.n_nodes and 0 <= v < self.n_nodes):
                raise ValueError(f"edge ({u}, {v}) out of range for {self.n_nodes} nodes")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            key = (u, v) if self.directed else (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        if self.weights is not None:
            if len(self.weights) != len(self.edges):
                raise ValueError("weights must cover every edge")
            for w in self.weights:
                if not (math.isfinite(w) and w > 0):
                    raise ValueError(f"edge weight {w} is not a positive finite number")
        if self.labels is not None:
            if len(self.labels) != self.n_nodes:
                raise ValueError("labels must cover every node")
            if len(set(self.labels)) != self.n_nodes:
                raise ValueError("node labels must be unique")

    @property
    def weighted(self) -> bool:
        return self.weights is not None

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def label_of(self, node: int) -> str:
        return self.labels[node] if self.labels is not None else str(node)

    @cached_property
    def _adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n_nodes)]
        for u, v in self.edges:
            adj[u].append(v)
            if not self.directed:
                adj[v].append(u)
        return adj

    @cached_property
    def _adjacency_identity(self) -> list[list[tuple[int, float]]]:
        return self._build_weighted_adjacency(lambda w: w)

    @cached_property
    def _adjacency_reciprocal(self) -> list[list[tuple[int, float]]]:
        return self._build_weighted_adjacency(lambda w: 1.0 / w)

    def _build_weighted_adjacency(self, cost) -> list[list[tuple[int, float]]]:
        adj: list[list[tuple[int, float]]] = [[] for _ in range(self.n_nodes)]
        for idx, (u, v) in enumerate(self.edges):
            w = cost(self.weights[idx]) if self.weights is not None else 1.0
            adj[u].append((v, w))
            if not self.directed:
                adj[v].append((u, w))
        return adj


def parse_edge_list(source: str | bytes | IO, *, directed: bool = False,
                    weighted: bool = False) -> Graph:
    """Parse an edge list into a Graph.

    Format: UTF-8 text, one edge per line, fields separated by whitespace
    and/or commas; lines starting with ``#`` are comments. Two fields
    (``u v``) unless ``weighted``, then three (``u v w``) with w a positive
    real. Labels map to dense ids in first-appearance order. Self-loops are
    dropped and duplicate edges collapsed (weights summed), each with an
    EdgeListWarning.
    """
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        data = source.read()
        text = data.decode("utf-8") if isinstance(data, bytes) else data

    ids: dict[str, int] = {}
    order: list[Edge] = []
    agg_weights: dict[tuple[int, int], float] = {}
    n_self_loops = 0
    n_duplicates = 0
    expected = 3 if weighted else 2

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.replace(",", " ").split()
        if len(fields) != expected:
            message = (f"expected {expected} fields ({'u v w' if weighted else 'u v'}), "
                       f"found {len(fields)}: {line!r}")
            # 2 <-> 3 fields means the weighted flag disagrees with the file;
            # anything else is plain garbage
            if len(fields) in (2, 3):
                raise ColumnCountError(message, line_no)
            raise GraphParseError(message, line_no)
        u = ids.setdefault(fields[0], len(ids))
        v = ids.setdefault(fields[1], len(ids))
        w = 1.0
        if weighted:
            try:
                w = float(fields[2])
            except ValueError:
                raise GraphParseError(f"invalid weight {fields[2]!r}", line_no) from None
            if not (math.isfinite(w) and w > 0):
                raise GraphParseError(f"weight must be positive, got {fields[2]}", line_no)
        if u == v:
            n_self_loops += 1
            continue
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in agg_weights:
            n_duplicates += 1
            agg_weights[key] += w
        else:
            agg_weights[key] = w
            order.append((u, v))

    if n_self_loops:
        warnings.warn(f"dropped {n_self_loops} self-loop(s)", EdgeListWarning, stacklevel=2)
    if n_duplicates:
        detail = "weights summed" if weighted else "kept first"
        warnings.warn(f"collapsed {n_duplicates} duplicate edge(s) ({detail})",
                      EdgeListWarning, stacklevel=2)

    labels = tuple(ids)
    edges = tuple(order)
    w_out = None
    if weighted:
        w_out = tuple(agg_weights[(u, v) if directed else (min(u, v), max(u, v))]
                      for u, v in edges)
    return Graph(n_nodes=len(labels), directed=directed, edges=edges,
                 weights=w_out, labels=labels)


def connected_components(g: Graph) -> list[int]:
    """Component sizes, largest first (weak connectivity if directed)."""
    n = g.n_nodes
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    sizes = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        size = 0
        while stack:
            u = stack.pop()
            size += 1
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        sizes.append(size)
    sizes.sort(reverse=True)
    return sizes


def _check_source(g: Graph, source: int) -> None:
    if not 0 <= source < g.n_nodes:
        raise IndexError(f"source {source} out of range for {g.n_nodes} nodes")


def sssp_unweighted(g: Graph, source: int) -> np.ndarray:
    """Hop-count distances from source; np.inf marks unreachable nodes."""
    _check_source(g, source)
    adj = g._adjacency
    dist = np.full(g.n_nodes, np.inf)
    dist[source] = 0.0
    seen = [False] * g.n_nodes
    seen[source] = True
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


def sssp_weighted(g: Graph, source: int, transform: str = "reciprocal") -> np.ndarray:
    """Dijkstra distances from source under a per-edge cost transform.

    ``reciprocal`` treats weight w as cost 1/w (strong ties are short);
    ``identity`` uses w directly. Unweighted graphs get unit costs either way.
    """
    _check_source(g, source)
    if transform not in TRANSFORMS:
        raise ValueError(f"transform must be one of {TRANSFORMS}, got {transform!r}")
    adj = g._adjacency_reciprocal if transform == "reciprocal" else g._adjacency_identity
    dist = np.full(g.n_nodes, np.inf)
    dist[source] = 0.0
    heap = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for v, cost in adj[u]:
            alt = d + cost
            if alt < dist[v]:
                dist[v] = alt
                heapq.heappush(heap, (alt, v))
    return dist
