"""Specialized solvers for the one-pair bracket alphabet.

For undirected graphs, a balanced path from s to t (s != t) exists exactly
when s has an incident opening edge, t has an incident closing edge, and an
even-length walk joins s and t.  The even-walk test is maintained by a
union-find over the parity double cover: node (v, p) is vertex v reached
after a walk of parity p.

The distance gadget turns breadth-first distance in a plain digraph into
one-pair bracket reachability: label every edge with the opener, add an
opener self-loop at each vertex, and hang a closing chain of length n off
every vertex; distance(s, t) = k iff (t, k) is reachable but (t, k-1) is
not.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Alphabet, Instance, Label, LabeledGraph, UpdateError

OPEN1 = Label("l", 1, False)
CLOSE1 = Label("l", 1, True)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1


class ParityIndex:
    """Even/odd walk connectivity over an undirected edge multiset.

    Insertions are union-find merges; deletions rebuild from the surviving
    edges (answer equivalence with from-scratch construction is the
    contract, not structural equality).
    """

    def __init__(self, vertex_count: int, edges=()):
        self.vertex_count = vertex_count
        self.edges: set[tuple[int, int]] = set()
        self.uf = _UnionFind(2 * vertex_count)
        for u, v in edges:
            self.insert(u, v)

    def _node(self, v: int, parity: int) -> int:
        return 2 * v + parity

    def insert(self, u: int, v: int):
        key = (min(u, v), max(u, v))
        if key in self.edges:
            raise UpdateError(f"duplicate edge {key}")
        self.edges.add(key)
        self.uf.union(self._node(u, 0), self._node(v, 1))
        self.uf.union(self._node(u, 1), self._node(v, 0))

    def delete(self, u: int, v: int):
        key = (min(u, v), max(u, v))
        if key not in self.edges:
            raise UpdateError(f"missing edge {key}")
        self.edges.remove(key)
        self.uf = _UnionFind(2 * self.vertex_count)
        for a, b in self.edges:
            self.uf.union(self._node(a, 0), self._node(b, 1))
            self.uf.union(self._node(a, 1), self._node(b, 0))

    def even_walk(self, u: int, v: int) -> bool:
        if u == v:
            return True
        return self.uf.find(self._node(u, 0)) == self.uf.find(self._node(v, 0))

    def odd_walk(self, u: int, v: int) -> bool:
        return self.uf.find(self._node(u, 0)) == self.uf.find(self._node(v, 1))


def parity_index_for(inst: Instance) -> ParityIndex:
    idx = ParityIndex(inst.graph.vertex_count)
    seen = set()
    for u, _lab, v in inst.graph.edges:
        key = (min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            idx.insert(u, v)
    return idx


def prop1_check(inst: Instance, parity: ParityIndex | None = None) -> bool:
    """Balanced reachability on an undirected one-pair instance, by the
    three-condition characterization (s = t is a trivial yes)."""
    g = inst.graph
    if g.directed:
        raise ValueError("characterization applies to undirected graphs only")
    if g.alphabet != Alphabet("dyck", 1):
        raise ValueError("characterization applies to the one-pair alphabet")
    s, t = inst.source, inst.sink
    if s == t:
        return True
    has_open_at_s = any(u == s and lab == OPEN1
                        for u, lab, v in g.directed_edges())
    has_close_at_t = any(u == t and lab == CLOSE1
                         for u, lab, v in g.directed_edges())
    if not (has_open_at_s and has_close_at_t):
        return False
    if parity is None:
        parity = parity_index_for(inst)
    return parity.even_walk(s, t)


@dataclass(frozen=True)
class DistanceGadget:
    """One-pair labeled extension of a plain digraph for distance queries."""

    instance: Instance
    original_count: int

    def chain_vertex(self, v: int, k: int) -> int:
        """Gadget id of (v, k) for 1 <= k <= original_count."""
        n = self.original_count
        if not (0 <= v < n and 1 <= k <= n):
            raise ValueError(f"no chain vertex ({v}, {k})")
        return n + v * n + (k - 1)


def build_distance_gadget(vertex_count: int,
                          arcs: set[tuple[int, int]]) -> DistanceGadget:
    """Extend a plain digraph (vertices 0..N-1, unlabeled arcs) with opener
    self-loops and per-vertex closing chains of length N."""
    if vertex_count < 1:
        raise ValueError("need at least one vertex")
    n = vertex_count
    edges = []
    for u, v in arcs:
        edges.append((u, OPEN1, v))
    for v in range(n):
        edges.append((v, OPEN1, v))  # padding self-loop
        prev = v
        for k in range(1, n + 1):
            chain = n + v * n + (k - 1)
            edges.append((prev, CLOSE1, chain))
            prev = chain
    graph = LabeledGraph.build(True, n + n * n, Alphabet("dyck", 1), edges)
    return DistanceGadget(Instance(graph, 0, 0), n)
