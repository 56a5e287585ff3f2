"""The three gadget compilers with exact update translation.

Each compiler maps a source instance to a target instance plus a pure
per-update translator.  The translated op counts are fixed per kind:

* ``alt_to_neardyck``      -- 1 op for an or-edge, 2 for an and-edge;
* ``neardyck_to_dyck2``    -- exactly 1 op;
* ``dyck2_to_undirected``  -- exactly 12 ops.

Gadget vertex ids follow a documented deterministic layout so the map from
structured names to dense ids is reproducible.  The vertex bijection used
by the encodings is fixed to the identity on dense ids: slot i (1-based)
is vertex i-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .graphs import (DOT, Alphabet, Instance, Label, LabeledGraph, UpdateOp)
from .words import PHI_UNDIRECTED

StructuredName = tuple


@dataclass(frozen=True)
class CompiledReduction:
    kind: str
    target: Instance
    names: tuple[StructuredName, ...]  # names[id] = structured name
    ids: dict[StructuredName, int] = field(repr=False)
    translate_one: Callable[[UpdateOp], list[UpdateOp]] = field(repr=False)

    def vertex_name(self, vid: int) -> StructuredName:
        return self.names[vid]

    def vertex_id(self, name: StructuredName) -> int:
        return self.ids[name]

    def translate(self, op: UpdateOp) -> list[UpdateOp]:
        if op.op == "query":
            return [op]
        return self.translate_one(op)


def _layout(names: list[StructuredName]):
    ids = {name: i for i, name in enumerate(names)}
    return tuple(names), ids


# ---------------------------------------------------------------------------
# alternating -> per-vertex brackets

def compile_alt_to_neardyck(inst: Instance) -> CompiledReduction:
    """Alternating reachability compiled to per-vertex-bracket reachability.

    Target vertices: the originals, then a chain (x, 0..n) for every
    and-vertex x.  Static edges send every vertex to the sink under its own
    opening label and frame the chains with neutral edges.  Dynamic edges:
    a source edge (a, b) with a an or-vertex becomes the single neutral
    edge b -> a; with a an and-vertex it flips the chain edge
    (a, b) -> (a, b+1) from neutral to the closing label of b.

    The target marks (source=t, sink=s): reachability is checked from the
    alternating sink back to the alternating source.
    """
    if inst.partition is None:
        raise ValueError("compilation needs an and/or partition")
    n = inst.graph.vertex_count
    t, s = inst.sink, inst.source
    and_vertices = [x for x in range(n) if inst.partition[x] == "and"]

    names: list[StructuredName] = [(x,) for x in range(n)]
    for x in and_vertices:
        for i in range(n + 1):
            names.append((x, i))
    names_t, ids = _layout(names)

    arcs = {(u, v) for u, _lab, v in inst.graph.directed_edges()}

    def chain_edge(x: int, i: int) -> tuple[int, Label, int]:
        # mid-edge (x, i) -> (x, i+1); closing label of vertex i when the
        # source edge (x, i) is present, neutral otherwise
        lab = Label("v", i, True) if (x, i) in arcs else DOT
        return (ids[(x, i)], lab, ids[(x, i + 1)])

    edges = []
    for x in range(n):
        edges.append((x, Label("v", x, False), t))
    for x in and_vertices:
        edges.append((t, DOT, ids[(x, 0)]))
        edges.append((ids[(x, n)], DOT, x))
        for i in range(n):
            edges.append(chain_edge(x, i))
    for (a, b) in arcs:
        if inst.partition[a] == "or":
            edges.append((b, DOT, a))

    graph = LabeledGraph.build(True, len(names_t), Alphabet("neardyck", n), edges)
    target = Instance(graph, t, s)

    def translate_one(op: UpdateOp) -> list[UpdateOp]:
        a, b = op.u, op.v
        if inst.partition[a] == "or":
            inner = UpdateOp(op.op, b, DOT, a)
            return [inner]
        u_id, v_id = ids[(a, b)], ids[(a, b + 1)]
        closing = Label("v", b, True)
        if op.op == "ins":
            return [UpdateOp.delete(u_id, DOT, v_id),
                    UpdateOp.ins(u_id, closing, v_id)]
        return [UpdateOp.delete(u_id, closing, v_id),
                UpdateOp.ins(u_id, DOT, v_id)]

    return CompiledReduction("alt_to_neardyck", target, names_t, ids, translate_one)


# ---------------------------------------------------------------------------
# per-vertex brackets -> two pairs

def compile_neardyck_to_dyck2(inst: Instance) -> CompiledReduction:
    """Per-vertex-bracket reachability compiled to the two-pair alphabet
    {a, b, abar, bbar} (pair 1 is a, pair 2 is b).

    The neutral symbol is spelled a*abar; the opening label of vertex slot
    i (1-based) is spelled a^i b a^(n+1-i) and its closing partner the
    formal inverse.  Target vertices: the originals, one dot-relay (x, dot)
    per vertex, and spelling chains (x, lab, 0..n) for every vertex x and
    every non-neutral label lab.  All chains are static; each source edge
    contributes exactly one closing jump off its chain.
    """
    if inst.graph.alphabet.kind != "neardyck":
        raise ValueError("compilation needs a per-vertex-bracket instance")
    if not inst.graph.directed:
        raise ValueError("source must be directed")
    n = inst.graph.vertex_count
    if inst.graph.alphabet.size != n:
        raise ValueError("alphabet size must equal the vertex count")

    A, ABAR = Label("l", 1, False), Label("l", 1, True)
    B, BBAR = Label("l", 2, False), Label("l", 2, True)

    chain_labels = [Label("v", i, bar) for i in range(n) for bar in (False, True)]
    names: list[StructuredName] = [(x,) for x in range(n)]
    for x in range(n):
        names.append((x, "dot"))
    for x in range(n):
        for lab in chain_labels:
            for i in range(n + 1):
                names.append((x, lab, i))
    names_t, ids = _layout(names)

    edges = []
    for x in range(n):
        edges.append((x, A, ids[(x, "dot")]))
        for lab in chain_labels:
            slot = lab.index + 1  # 1-based slot of the spelled vertex
            if not lab.bar:
                edges.append((x, A, ids[(x, lab, 0)]))
                for i in range(n):
                    step = B if i + 1 == slot else A
                    edges.append((ids[(x, lab, i)], step, ids[(x, lab, i + 1)]))
            else:
                edges.append((x, ABAR, ids[(x, lab, n)]))
                for i in range(n):
                    step = BBAR if i + 1 == slot else ABAR
                    edges.append((ids[(x, lab, i + 1)], step, ids[(x, lab, i)]))

    def hook(u: int, lab: Label, v: int) -> tuple[int, Label, int]:
        """The single dynamic edge encoding source edge (u, lab, v)."""
        if lab == DOT:
            return (ids[(u, "dot")], ABAR, v)
        if not lab.bar:
            return (ids[(u, lab, n)], A, v)
        return (ids[(u, lab, 0)], ABAR, v)

    for u, lab, v in inst.graph.directed_edges():
        edges.append(hook(u, lab, v))

    graph = LabeledGraph.build(True, len(names_t), Alphabet("dyck", 2), edges)
    target = Instance(graph, inst.source, inst.sink)

    def translate_one(op: UpdateOp) -> list[UpdateOp]:
        hu, hlab, hv = hook(op.u, op.label, op.v)
        return [UpdateOp(op.op, hu, hlab, hv)]

    return CompiledReduction("neardyck_to_dyck2", target, names_t, ids, translate_one)


# ---------------------------------------------------------------------------
# two pairs, directed -> two pairs, undirected

def compile_dyck2_to_undirected(inst: Instance) -> CompiledReduction:
    """Directed two-pair reachability compiled to an undirected graph.

    Every possible source edge (x, lab, y) owns a chain of 11 interior
    vertices; when the edge is present, 12 undirected edges spell its
    12-letter encoding (with locks) along x, (x,lab,y,1), ...,
    (x,lab,y,11), y.  Interior vertices always exist; only the 12 edges of
    a chain come and go, so one source update is exactly 12 target updates.
    """
    if inst.graph.alphabet != Alphabet("dyck", 2):
        raise ValueError("compilation needs a directed two-pair instance")
    if not inst.graph.directed:
        raise ValueError("source must be directed")
    n = inst.graph.vertex_count
    all_labels = list(Alphabet("dyck", 2).labels())

    names: list[StructuredName] = [(x,) for x in range(n)]
    for x in range(n):
        for lab in all_labels:
            for y in range(n):
                for i in range(1, 12):
                    names.append((x, lab, y, i))
    names_t, ids = _layout(names)

    def chain_edges(x: int, lab: Label, y: int) -> list[tuple[int, Label, int]]:
        phi = PHI_UNDIRECTED[lab]
        stops = [x] + [ids[(x, lab, y, i)] for i in range(1, 12)] + [y]
        return [(stops[i], phi[i], stops[i + 1]) for i in range(12)]

    edges = []
    for x, lab, y in inst.graph.edges:
        edges.extend(chain_edges(x, lab, y))

    graph = LabeledGraph.build(False, len(names_t), Alphabet("dyck", 2), edges)
    target = Instance(graph, inst.source, inst.sink)

    def translate_one(op: UpdateOp) -> list[UpdateOp]:
        return [UpdateOp(op.op, u, lab, v)
                for u, lab, v in chain_edges(op.u, op.label, op.v)]

    return CompiledReduction("dyck2_to_undirected", target, names_t, ids,
                             translate_one)


_COMPILERS = {
    "alt_to_neardyck": compile_alt_to_neardyck,
    "neardyck_to_dyck2": compile_neardyck_to_dyck2,
    "dyck2_to_undirected": compile_dyck2_to_undirected,
}


def compile_reduction(kind: str, inst: Instance) -> CompiledReduction:
    if kind not in _COMPILERS:
        raise ValueError(f"unknown reduction kind {kind!r}; expected one of "
                         f"{sorted(_COMPILERS)}")
    return _COMPILERS[kind](inst)


def translate_updates(red: CompiledReduction,
                      script: list[UpdateOp]) -> list[UpdateOp]:
    """Concatenated per-op translations; queries pass through."""
    out: list[UpdateOp] = []
    for op in script:
        out.extend(red.translate(op))
    return out
