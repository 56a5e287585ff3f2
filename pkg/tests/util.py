"""Shared generators for the test suite: random instances, random update
scripts, and the two worked instances used across modules."""

import random

from dycklab import Alphabet, Instance, Label, LabeledGraph, UpdateOp


def random_dyck_instance(rng: random.Random, max_vertices: int = 8,
                         pairs: int = 2, density: float = 0.3,
                         directed: bool = True) -> Instance:
    n = rng.randint(1, max_vertices)
    alph = Alphabet("dyck", pairs)
    labels = list(alph.labels())
    edges = []
    for u in range(n):
        vs = range(n) if directed else range(u, n)
        for v in vs:
            for lab in labels:
                if rng.random() < density:
                    edges.append((u, lab, v))
    graph = LabeledGraph.build(directed, n, alph, edges)
    return Instance(graph, rng.randrange(n), rng.randrange(n))


def random_neardyck_instance(rng: random.Random, max_vertices: int = 5,
                             density: float = 0.25) -> Instance:
    """Directed per-vertex-bracket instance with alphabet size = |V|."""
    n = rng.randint(1, max_vertices)
    alph = Alphabet("neardyck", n)
    labels = list(alph.labels())
    edges = []
    for u in range(n):
        for v in range(n):
            for lab in labels:
                if rng.random() < density:
                    edges.append((u, lab, v))
    graph = LabeledGraph.build(True, n, alph, edges)
    return Instance(graph, rng.randrange(n), rng.randrange(n))


def random_alt_instance(rng: random.Random, max_vertices: int = 6) -> Instance:
    n = rng.randint(1, max_vertices)
    alph = Alphabet("dyck", 1)
    lab = Label("l", 1, False)
    edges = [(u, lab, v) for u in range(n) for v in range(n)
             if rng.random() < 0.3]
    partition = tuple(rng.choice(("and", "or")) for _ in range(n))
    graph = LabeledGraph.build(True, n, alph, edges)
    return Instance(graph, rng.randrange(n), rng.randrange(n), partition)


def random_script(rng: random.Random, inst: Instance, ops: int = 30,
                  query_rate: float = 0.3, labels=None) -> list[UpdateOp]:
    """A strictness-respecting random script over the instance's vertex set
    and alphabet: insertions target absent edges, deletions present ones.
    ``labels`` restricts the label pool (alternating instances only ever
    carry the first opening label)."""
    g = inst.graph
    n = g.vertex_count
    if labels is None:
        labels = list(g.alphabet.labels())
        if inst.partition is not None:
            labels = [Label("l", 1, False)]

    def canon(u, lab, v):
        if g.directed or u <= v:
            return (u, lab, v)
        return (v, lab, u)

    present = set(g.edges)
    script: list[UpdateOp] = []
    while len(script) < ops:
        r = rng.random()
        if r < query_rate:
            script.append(UpdateOp.query())
            continue
        u, v = rng.randrange(n), rng.randrange(n)
        lab = rng.choice(labels)
        key = canon(u, lab, v)
        if key in present:
            present.remove(key)
            script.append(UpdateOp.delete(u, lab, v))
        else:
            present.add(key)
            script.append(UpdateOp.ins(u, lab, v))
    return script


def fig1_instance() -> Instance:
    """The worked 5-vertex alternating instance: vertices 0..4 stand for
    v1..v5; 0 and 2 are and-vertices; marks are (source=0, sink=4)."""
    lab = Label("l", 1, False)
    arcs = [(0, 1), (0, 2), (1, 2), (2, 1), (1, 3), (2, 4), (3, 4), (4, 1)]
    alph = Alphabet("dyck", 1)
    graph = LabeledGraph.build(True, 5, alph, [(u, lab, v) for u, v in arcs])
    partition = ("and", "or", "and", "or", "or")
    return Instance(graph, 0, 4, partition)


def fig2_source() -> Instance:
    """The worked 2-vertex directed two-pair instance: a bracket cycle
    0 -l1-> 1 -l1bar-> 0, marked (0, 0)."""
    alph = Alphabet("dyck", 2)
    edges = [(0, Label("l", 1, False), 1), (1, Label("l", 1, True), 0)]
    graph = LabeledGraph.build(True, 2, alph, edges)
    return Instance(graph, 0, 0)


def gap_chain_instance() -> Instance:
    """The 5-vertex chain labeled l1 l1bar l2 l2bar, marked (0, 4); the
    witness needs concatenation of two balanced blocks."""
    alph = Alphabet("dyck", 2)
    toks = [Label("l", 1, False), Label("l", 1, True),
            Label("l", 2, False), Label("l", 2, True)]
    edges = [(i, toks[i], i + 1) for i in range(4)]
    graph = LabeledGraph.build(True, 5, alph, edges)
    return Instance(graph, 0, 4)
