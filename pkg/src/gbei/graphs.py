"""Simple graphs, complete multipartite instances, cut sets, and path constructions.

Vertices are the 1-based integers 1..n.  A complete multipartite instance is
described by a ``PartiteSpec`` (the number of matrix rows m together with the
ascending part sizes n_1 <= ... <= n_r); its vertex blocks are consecutive
integer intervals, so block k is [1 + n_1 + ... + n_{k-1}, n_1 + ... + n_k].
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .errors import CapExceededError, ConstructionError

CUT_SET_CAP = 16


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on the vertex set {1, ..., n_vertices}."""

    n_vertices: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n_vertices < 1:
            raise ValueError("graph needs at least one vertex")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n_vertices):
                raise ValueError(f"bad edge ({u},{v}) on {self.n_vertices} vertices")

    @classmethod
    def from_edges(cls, n_vertices, edges):
        norm = frozenset((min(u, v), max(u, v)) for u, v in edges)
        for u, v in norm:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
        return cls(n_vertices, norm)

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in self.edges

    def adjacency_masks(self):
        """Neighbor bitmasks indexed by vertex (bit v-1 set for neighbor v)."""
        adj = [0] * (self.n_vertices + 1)
        for u, v in self.edges:
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        return adj


@dataclass(frozen=True)
class PartiteSpec:
    """A complete multipartite instance: m matrix rows and ascending part sizes."""

    m: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("m must be at least 2")
        if len(self.parts) < 2:
            raise ValueError("need at least two parts")
        if any(p < 1 for p in self.parts):
            raise ValueError("part sizes must be positive")
        if list(self.parts) != sorted(self.parts):
            raise ValueError("parts must be sorted ascending")

    @classmethod
    def of(cls, m, parts):
        """Build a spec, sorting the part sizes ascending."""
        return cls(m, tuple(sorted(parts)))

    @property
    def r(self):
        return len(self.parts)

    @property
    def n(self):
        return sum(self.parts)

    @property
    def s(self):
        """1-based index of the first part of size >= 2, or None if all parts are 1."""
        for i, p in enumerate(self.parts, start=1):
            if p >= 2:
                return i
        return None

    @property
    def all_ones(self):
        return self.parts[-1] == 1

    def block(self, k):
        """Vertices of part k (1-based) as a consecutive integer interval."""
        lo = 1 + sum(self.parts[: k - 1])
        return tuple(range(lo, lo + self.parts[k - 1]))

    def blocks(self):
        return tuple(self.block(k) for k in range(1, self.r + 1))

    def complement(self, k):
        """All vertices outside part k (the column support of the k-th variable ideal)."""
        blk = set(self.block(k))
        return tuple(v for v in range(1, self.n + 1) if v not in blk)

    def part_of(self, v):
        """1-based part index of vertex v."""
        acc = 0
        for i, p in enumerate(self.parts, start=1):
            acc += p
            if v <= acc:
                return i
        raise ValueError(f"vertex {v} out of range")


@dataclass(frozen=True)
class PathWitness:
    """A path given by its vertex sequence; target_length counts edges."""

    vertices: tuple[int, ...]
    target_length: int

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path vertices must be distinct")
        if len(self.vertices) != self.target_length + 1:
            raise ValueError("vertex count does not match target length")


def complete_graph(n: int) -> SimpleGraph:
    """The clique on {1, ..., n}; n = 1 gives the single vertex, no edges."""
    return SimpleGraph.from_edges(n, combinations(range(1, n + 1), 2))


def complete_multipartite(spec: PartiteSpec) -> SimpleGraph:
    """The complete multipartite graph of a spec: edges exactly between distinct blocks."""
    edges = set()
    blocks = spec.blocks()
    for a, b in combinations(range(spec.r), 2):
        for u in blocks[a]:
            for v in blocks[b]:
                edges.add((u, v))
    return SimpleGraph.from_edges(spec.n, edges)


def connected_components(G: SimpleGraph, within=None):
    """Partition of the vertex set (or of ``within``) into connected components.

    Components are returned as sorted tuples, ordered by smallest vertex.
    """
    if within is None:
        pool = set(range(1, G.n_vertices + 1))
    else:
        pool = set(within)
    adj = G.adjacency_masks()
    comps = []
    while pool:
        start = min(pool)
        pool.discard(start)
        comp = {start}
        frontier = [start]
        while frontier:
            u = frontier.pop()
            mask = adj[u]
            while mask:
                low = mask & -mask
                mask ^= low
                v = low.bit_length()
                if v in pool:
                    pool.discard(v)
                    comp.add(v)
                    frontier.append(v)
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: c[0])
    return comps


def _component_counts(G: SimpleGraph):
    """Number of connected components of G minus T, for every vertex subset T.

    Returns a list indexed by the bitmask of T (bit v-1 <-> vertex v).
    """
    n = G.n_vertices
    adj = G.adjacency_masks()
    full = (1 << n) - 1
    counts = [0] * (1 << n)
    for t_mask in range(1 << n):
        remaining = full & ~t_mask
        c = 0
        while remaining:
            c += 1
            seed = remaining & -remaining
            comp = seed
            frontier = seed
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                v = low.bit_length()
                grow = adj[v] & remaining & ~comp
                comp |= grow
                frontier |= grow
            remaining &= ~comp
        counts[t_mask] = c
    return counts


def cut_sets(G: SimpleGraph, cap: int = CUT_SET_CAP):
    """All vertex subsets T such that every v in T is a cut point of G minus (T minus v).

    Returns (T, c) pairs where c is the component count of G minus T, ordered by
    subset size and then lexicographically.  The empty set always qualifies.
    Enumeration is brute force over all 2^n subsets, so n is capped.
    """
    n = G.n_vertices
    if n > cap:
        raise CapExceededError(f"cut set enumeration needs n <= {cap}, got {n}")
    counts = _component_counts(G)
    found = []
    for t_mask in range(1 << n):
        ok = True
        sub = t_mask
        while sub:
            low = sub & -sub
            sub ^= low
            if counts[t_mask] <= counts[t_mask ^ low]:
                ok = False
                break
        if ok:
            verts = tuple(v for v in range(1, n + 1) if t_mask >> (v - 1) & 1)
            found.append((verts, counts[t_mask]))
    found.sort(key=lambda item: (len(item[0]), item[0]))
    return [(frozenset(t), c) for t, c in found]


def validate_path(G: SimpleGraph, witness: PathWitness):
    """Check distinctness, adjacency of consecutive vertices, and the length."""
    verts = witness.vertices
    if len(set(verts)) != len(verts):
        return False
    if len(verts) != witness.target_length + 1:
        return False
    return all(G.has_edge(u, v) for u, v in zip(verts, verts[1:]))


def path_target_length(spec: PartiteSpec) -> int:
    """Edge count of the path witness: 2n - max(n + 1, 2 * n_r)."""
    n = spec.n
    return 2 * n - max(n + 1, 2 * spec.parts[-1])


def konig_path(spec: PartiteSpec) -> PathWitness:
    """A path of length 2n - max(n + 1, 2 n_r) in the complete multipartite graph.

    When the largest part outweighs the rest (n_r > n'), the path alternates
    between the largest block and the remaining vertices.  Otherwise a spanning
    path exists and is produced greedily, always stepping into a largest
    remaining part different from the current one.  The output is validated
    edge by edge before being returned.
    """
    n = spec.n
    h = path_target_length(spec)
    if spec.all_ones:
        verts = tuple(range(1, n + 1))
    else:
        n_rest = n - spec.parts[-1]
        if spec.parts[-1] > n_rest:
            verts = []
            for k in range(1, n_rest + 1):
                verts.append(n_rest + k)
                verts.append(k)
            verts.append(2 * n_rest + 1)
            verts = tuple(verts)
        else:
            verts = _greedy_spanning_path(spec)
    witness = PathWitness(verts, h)
    if not validate_path(complete_multipartite(spec), witness):
        raise ConstructionError(f"invalid path for {spec}: {verts}")
    return witness


def _greedy_spanning_path(spec: PartiteSpec):
    # Feasible whenever n_r <= n - n_r.  Start in the last (largest) part, then
    # repeatedly step into a largest remaining part different from the current
    # endpoint's part; ties prefer the larger original part, then the earlier
    # part, and the smallest unused vertex within it.
    remaining = [list(spec.block(k)) for k in range(1, spec.r + 1)]
    path = [remaining[spec.r - 1].pop(0)]
    current = spec.r - 1
    for _ in range(spec.n - 1):
        best = None
        best_key = None
        for idx in range(spec.r):
            if idx == current or not remaining[idx]:
                continue
            key = (len(remaining[idx]), spec.parts[idx], -idx)
            if best is None or key > best_key:
                best, best_key = idx, key
        if best is None:
            raise ConstructionError(f"greedy path construction stalled for {spec}")
        path.append(remaining[best].pop(0))
        current = best
    return tuple(path)


def graph_from_json(obj) -> SimpleGraph:
    """Build a graph from ``{"n": int, "edges": [[u, v], ...]}`` with 1-based vertices."""
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError('graph JSON must be {"n": int, "edges": [[u,v], ...]}')
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ValueError("graph JSON: n must be a positive integer")
    edges = []
    for e in obj["edges"]:
        if len(e) != 2:
            raise ValueError(f"graph JSON: bad edge {e}")
        edges.append((int(e[0]), int(e[1])))
    return SimpleGraph.from_edges(n, edges)


def load_graph(path) -> SimpleGraph:
    with open(path, encoding="utf-8") as fh:
        return graph_from_json(json.load(fh))
