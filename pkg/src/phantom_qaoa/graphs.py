"""Undirected simple graphs: representation, generators, queries, exact Max-Cut.

Vertices are 0-indexed integers. Edges are stored canonically as (u, v) with
u < v, sorted lexicographically, so iteration order (and every serialization)
is deterministic.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from .errors import CapacityError

MAX_CUT_DEFAULT_LIMIT = 26


def _canonical_edges(n, edges):
    canon = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"self-loop ({u},{v}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside [0,{n})")
        canon.add((u, v) if u < v else (v, u))
    return tuple(sorted(canon))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on n vertices with a canonical edge tuple."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        object.__setattr__(self, "edges", _canonical_edges(self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.neighbors)

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int8)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a


def cycle_graph(n: int) -> Graph:
    """The n-cycle with edges (i, i+1 mod n). Requires n >= 3."""
    if n < 3:
        raise ValueError(f"a cycle needs n >= 3, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def heawood_graph() -> Graph:
    """The 14-vertex 3-regular girth-6 (triangle-free) Heawood graph."""
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return Graph(14, tuple(edges))


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, tuple(edges))


def random_regular_graph(n: int, k: int, seed: int) -> Graph:
    """Random simple k-regular graph on n vertices (pairing model with repair).

    Stubs are shuffled and paired greedily; clashing stubs are re-paired in
    later rounds, and the whole attempt restarts when no suitable pair
    remains. Deterministic for a fixed seed. Not exactly uniform, which is
    fine for averaged experiments.
    """
    if not (0 <= k < n):
        raise ValueError(f"degree must satisfy 0 <= k < n, got k={k}, n={n}")
    if (n * k) % 2 != 0:
        raise ValueError(f"no {k}-regular graph on {n} vertices: n*k must be even")
    if k == 0:
        return Graph(n, ())
    if k == n - 1:
        return complete_graph(n)

    rng = np.random.default_rng(seed)

    def suitable(edges, leftover):
        nodes = sorted(leftover)
        for i, s1 in enumerate(nodes):
            for s2 in nodes[i + 1:]:
                if (s1, s2) not in edges:
                    return True
        return not leftover

    def attempt():
        edges = set()
        stubs = list(range(n)) * k
        while stubs:
            leftover = {}
            stubs = list(rng.permutation(stubs))
            for s1, s2 in zip(stubs[::2], stubs[1::2]):
                if s1 > s2:
                    s1, s2 = s2, s1
                if s1 != s2 and (s1, s2) not in edges:
                    edges.add((s1, s2))
                else:
                    leftover[s1] = leftover.get(s1, 0) + 1
                    leftover[s2] = leftover.get(s2, 0) + 1
            if not suitable(edges, leftover):
                return None
            stubs = [v for v, c in leftover.items() for _ in range(c)]
        return edges

    for _ in range(1000):
        edges = attempt()
        if edges is not None:
            return Graph(n, tuple(edges))
    raise RuntimeError(f"pairing model failed to produce a {k}-regular graph on {n} vertices")


def erdos_renyi_graph(n: int, prob: float, seed: int) -> Graph:
    """G(n, p): every pair kept independently with probability prob."""
    if not (0.0 <= prob <= 1.0):
        raise ValueError(f"edge probability must lie in [0,1], got {prob}")
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < prob
    return Graph(n, tuple(p for p, k in zip(pairs, keep) if k))


def complement_edges(g: Graph) -> set[tuple[int, int]]:
    """All pairs (u, v), u < v, absent from g."""
    present = set(g.edges)
    return {p for p in combinations(range(g.n), 2) if p not in present}


def distance_two_pairs(g: Graph) -> set[tuple[int, int]]:
    """Non-adjacent pairs with at least one common neighbor (distance exactly 2)."""
    present = set(g.edges)
    out = set()
    for u, v in combinations(range(g.n), 2):
        if (u, v) in present:
            continue
        if g.neighbors[u] & g.neighbors[v]:
            out.add((u, v))
    return out


def max_cut(g: Graph, limit: int = MAX_CUT_DEFAULT_LIMIT) -> int:
    """Exact Max-Cut value by enumeration over 2^(n-1) assignments.

    Vertex 0 is pinned to one side (global flip symmetry). Work is chunked so
    peak memory stays modest even near the limit.
    """
    if g.n > limit:
        raise CapacityError(f"max_cut enumeration limited to n <= {limit}, got n={g.n}")
    if g.m == 0:
        return 0
    total = 1 << (g.n - 1)
    chunk = min(total, 1 << 20)
    best = 0
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        cuts = np.zeros(masks.shape, dtype=np.uint16)
        for u, v in g.edges:
            # vertex 0 is side 0; vertex j>0 lives at mask bit j-1
            bu = (masks >> (u - 1)) & 1 if u > 0 else 0
            bv = (masks >> (v - 1)) & 1
            cuts += (bu != bv).astype(np.uint16)
        best = max(best, int(cuts.max()))
    return best


def isomorphism_fingerprint(g: Graph) -> str:
    """Relabeling-invariant hash: degree sequence, triangle profile, spectrum.

    Equal fingerprints mean "possibly isomorphic"; spectral collisions are
    negligible at the sizes used here.
    """
    a = g.adjacency().astype(np.float64)
    tri_per_vertex = np.diag(a @ a @ a) / 2.0
    eigs = np.round(np.linalg.eigvalsh(a), 8) + 0.0
    blob = repr((g.n, sorted(g.degrees), sorted(int(t) for t in tri_per_vertex), eigs.tolist()))
    return hashlib.sha256(blob.encode()).hexdigest()


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(obj: dict) -> Graph:
    return Graph(int(obj["n"]), tuple((int(u), int(v)) for u, v in obj["edges"]))


def save_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        json.dump(graph_to_json(g), fh, indent=2)
        fh.write("\n")


def load_graph(path) -> Graph:
    with open(path) as fh:
        return graph_from_json(json.load(fh))
